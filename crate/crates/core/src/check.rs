use std::fmt;

use serde::Serialize;

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail())
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAILED" };
        write!(f, "{}: {status}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

pub fn all_passed(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.passed)
}

impl CheckResult {
    /// One result standing for all of `checks`; the witness names the first failure.
    pub fn combine(name: impl Into<String>, checks: &[CheckResult]) -> Self {
        match checks.iter().find(|c| !c.passed) {
            None => Self::pass(name),
            Some(c) => Self::fail(name, c.to_string()),
        }
    }
}
