//! Axiom verification on basis elements; multilinearity makes that sufficient.

use super::{HopfData, Level};
use crate::check::CheckResult;
use crate::exact::Matrix;

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub declared: Level,
    /// Highest level whose axioms all pass.
    pub attained: Option<Level>,
    pub checks: Vec<CheckResult>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.attained.is_some_and(|l| l >= self.declared)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn first_failure<I, F>(iter: I, mut ok: F) -> Option<String>
where
    I: IntoIterator,
    F: FnMut(&I::Item) -> Option<String>,
{
    iter.into_iter().find_map(|x| ok(&x))
}

pub fn verify_axioms(h: &HopfData) -> AxiomReport {
    let n = h.dim();
    let l = |i: usize| h.labels()[i].clone();
    let mut checks = Vec::new();
    let mut attained = None;

    let assoc = first_failure(
        (0..n * n * n).map(|t| (t / (n * n), (t / n) % n, t % n)),
        |&(i, j, k)| {
            let (a, b, c) = (h.basis(i), h.basis(j), h.basis(k));
            (h.mul(&h.mul(&a, &b), &c) != h.mul(&a, &h.mul(&b, &c)))
                .then(|| format!("({}, {}, {})", l(i), l(j), l(k)))
        },
    );
    checks.push(CheckResult::from_witness("associativity", assoc));
    let unit = first_failure(0..n, |&i| {
        let a = h.basis(i);
        (h.mul(h.unit(), &a) != a || h.mul(&a, h.unit()) != a).then(|| l(i))
    });
    checks.push(CheckResult::from_witness("unit", unit));
    if checks.iter().all(|c| c.passed) {
        attained = Some(Level::Algebra);
    }

    let Some(eps) = h.counit() else {
        return AxiomReport {
            declared: h.level(),
            attained,
            checks,
        };
    };
    let one = h.field().one();
    let aug = if eps.dot(h.unit()) != one {
        Some("1".to_string())
    } else {
        first_failure((0..n * n).map(|t| (t / n, t % n)), |&(i, j)| {
            (eps.dot(&h.mul(&h.basis(i), &h.basis(j))) != eps.get(i) * eps.get(j))
                .then(|| format!("({}, {})", l(i), l(j)))
        })
    };
    checks.push(CheckResult::from_witness(
        "augmentation multiplicative",
        aug,
    ));
    if attained.is_some() && checks.iter().all(|c| c.passed) {
        attained = Some(Level::AugmentedAlgebra);
    }

    if !h.has_comul() {
        return AxiomReport {
            declared: h.level(),
            attained,
            checks,
        };
    }
    let coassoc = first_failure(0..n, |&i| {
        let a = h.basis(i);
        (h.comul_left_twice(&a).ok() != h.comul_right_twice(&a).ok()).then(|| l(i))
    });
    checks.push(CheckResult::from_witness("coassociativity", coassoc));
    let counit = first_failure(0..n, |&i| {
        let a = h.basis(i);
        let d = h.comul(&a).expect("comul present");
        let left = d.transpose().apply(eps);
        let right = d.apply(eps);
        (left != a || right != a).then(|| l(i))
    });
    checks.push(CheckResult::from_witness("counit", counit));
    let delta_one =
        h.comul(h.unit()).expect("comul present") == h.simple_tensor(h.unit(), h.unit());
    let delta_mul = if !delta_one {
        Some("1".to_string())
    } else {
        first_failure((0..n * n).map(|t| (t / n, t % n)), |&(i, j)| {
            let (a, b) = (h.basis(i), h.basis(j));
            let lhs = h.comul(&h.mul(&a, &b)).expect("comul present");
            let rhs = h.tensor_mul(&h.comul(&a).unwrap(), &h.comul(&b).unwrap());
            (lhs != rhs).then(|| format!("({}, {})", l(i), l(j)))
        })
    };
    checks.push(CheckResult::from_witness(
        "comultiplication multiplicative",
        delta_mul,
    ));
    if attained == Some(Level::AugmentedAlgebra) && checks.iter().all(|c| c.passed) {
        attained = Some(Level::Bialgebra);
    }

    if let Some(s) = h.antipode() {
        let (left, right) = antipode_axioms(h, s);
        checks.push(CheckResult::from_witness("antipode left", left));
        checks.push(CheckResult::from_witness("antipode right", right));
        checks.push(CheckResult::from_bool(
            "antipode invertible",
            h.antipode_inverse().is_some(),
            || "singular antipode matrix".into(),
        ));
        if attained == Some(Level::Bialgebra) && checks.iter().all(|c| c.passed) {
            attained = Some(Level::Hopf);
        }
    }

    AxiomReport {
        declared: h.level(),
        attained,
        checks,
    }
}

/// Witnesses for `Σ S(a_1)a_2 = ε(a)1` and `Σ a_1 S(a_2) = ε(a)1`.
pub(crate) fn antipode_axioms(h: &HopfData, s: &Matrix) -> (Option<String>, Option<String>) {
    let n = h.dim();
    let eps = h.counit().expect("bialgebra has counit");
    let mut left = None;
    let mut right = None;
    for i in 0..n {
        let target = h.unit().scale(eps.get(i));
        let mut l_sum = h.zero();
        let mut r_sum = h.zero();
        for (j, k, c) in h.comul_entries(i) {
            let sj = s.column(*j);
            let sk = s.column(*k);
            l_sum.axpy(c, &h.mul(&sj, &h.basis(*k)));
            r_sum.axpy(c, &h.mul(&h.basis(*j), &sk));
        }
        if left.is_none() && l_sum != target {
            left = Some(h.labels()[i].clone());
        }
        if right.is_none() && r_sum != target {
            right = Some(h.labels()[i].clone());
        }
    }
    (left, right)
}
