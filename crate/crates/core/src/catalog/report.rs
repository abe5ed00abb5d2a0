//! Ordered key/value reports, rendered as `key=value` lines or as a JSON
//! object with exactly the same keys in the same order.

use serde_json::{json, Map, Value as Json};

use crate::check::CheckResult;
use crate::exact::{Matrix, Vector};
use crate::hopf::HopfData;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    /// A vector with its human rendering.
    Coords {
        text: String,
        coordinates: Vec<String>,
    },
    Check(CheckResult),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        let key = key.into();
        debug_assert!(
            separator(&format!("{key}=")) == Some(key.len()),
            "key {key:?} has a bare '='"
        );
        self.entries.push((key, value));
        self
    }

    pub fn flag(&mut self, key: impl Into<String>, b: bool) -> &mut Self {
        self.push(key, Value::Bool(b))
    }

    pub fn int(&mut self, key: impl Into<String>, n: i64) -> &mut Self {
        self.push(key, Value::Int(n))
    }

    pub fn text(&mut self, key: impl Into<String>, s: impl Into<String>) -> &mut Self {
        self.push(key, Value::Text(s.into()))
    }

    /// An element of `h`, rendered over its basis labels.
    pub fn element(&mut self, key: impl Into<String>, h: &HopfData, a: &Vector) -> &mut Self {
        let text = h.format_element(a);
        self.coords(key, text, a)
    }

    /// A functional, rendered as its values on the basis.
    pub fn functional(&mut self, key: impl Into<String>, f: &Vector) -> &mut Self {
        self.coords(key, f.to_string(), f)
    }

    pub fn coords(&mut self, key: impl Into<String>, text: String, v: &Vector) -> &mut Self {
        let coordinates = v.iter().map(ToString::to_string).collect();
        self.push(key, Value::Coords { text, coordinates })
    }

    /// A matrix, rendered row by row; coordinates are row-major.
    pub fn matrix(&mut self, key: impl Into<String>, m: &Matrix) -> &mut Self {
        let rows: Vec<String> = (0..m.rows()).map(|i| m.row(i).to_string()).collect();
        let text = format!("[{}]", rows.join(", "));
        self.coords(key, text, &m.flatten())
    }

    pub fn check(&mut self, c: CheckResult) -> &mut Self {
        self.push(format!("check:{}", c.name), Value::Check(c))
    }

    pub fn checks(&mut self, cs: impl IntoIterator<Item = CheckResult>) -> &mut Self {
        for c in cs {
            self.check(c);
        }
        self
    }

    /// Appends `other`, prefixing its keys with `prefix.` when non-empty.
    pub fn extend(&mut self, prefix: &str, other: Report) -> &mut Self {
        for (k, v) in other.entries {
            let key = if prefix.is_empty() {
                k
            } else {
                format!("{prefix}.{k}")
            };
            self.entries.push((key, v));
        }
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter_map(|(_, v)| match v {
            Value::Check(c) if !c.passed => Some(c),
            _ => None,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let rendered = match v {
                Value::Bool(b) => b.to_string(),
                Value::Int(n) => n.to_string(),
                Value::Text(s) => s.clone(),
                Value::Coords { text, .. } => text.clone(),
                Value::Check(c) => match &c.witness {
                    None if c.passed => "ok".into(),
                    None => "FAILED".into(),
                    Some(w) if c.passed => format!("ok ({w})"),
                    Some(w) => format!("FAILED ({w})"),
                },
            };
            out.push_str(k);
            out.push('=');
            out.push_str(&rendered);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Json {
        let mut map = Map::new();
        for (k, v) in &self.entries {
            let j = match v {
                Value::Bool(b) => json!(b),
                Value::Int(n) => json!(n),
                Value::Text(s) => json!(s),
                Value::Coords { text, coordinates } => {
                    json!({ "text": text, "coordinates": coordinates })
                }
                Value::Check(c) => json!({ "passed": c.passed, "witness": c.witness }),
            };
            map.insert(k.clone(), j);
        }
        Json::Object(map)
    }

    /// Keys of the human rendering, in order. Keys may contain `=` only
    /// with a space on both sides, so the separator is the first bare `=`.
    pub fn human_keys(text: &str) -> Vec<String> {
        text.lines()
            .filter_map(|l| separator(l).map(|i| l[..i].to_string()))
            .collect()
    }
}

/// Byte index of the first `=` not flanked by spaces on both sides.
fn separator(line: &str) -> Option<usize> {
    let bytes = line.as_bytes();
    (0..bytes.len()).find(|&i| {
        bytes[i] == b'=' && !(i > 0 && bytes[i - 1] == b' ' && bytes.get(i + 1) == Some(&b' '))
    })
}
