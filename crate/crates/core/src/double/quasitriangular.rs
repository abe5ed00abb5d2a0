//! The R-matrix equations, checked on explicit tensors.

use std::collections::BTreeMap;

use crate::check::CheckResult;
use crate::error::Result;
use crate::exact::{Matrix, Scalar, Vector};
use crate::hopf::HopfData;

/// A sparse element of `A ⊗ A ⊗ A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor3(BTreeMap<(usize, usize, usize), Scalar>);

impl Tensor3 {
    fn add(&mut self, key: (usize, usize, usize), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.0.remove(&key);
                }
            }
            None => {
                self.0.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.0.iter()
    }

    /// First index where the two tensors differ.
    fn first_difference(&self, other: &Tensor3) -> Option<(usize, usize, usize)> {
        let keys = self.0.keys().chain(other.0.keys());
        keys.copied().find(|k| self.0.get(k) != other.0.get(k))
    }
}

/// `R^{-1}` in `A ⊗ A`, or `None` when `R` is singular. Found from the first
/// linear dependence among the powers of `R`: if `R^k = Σ_{i<k} c_i R^i`
/// with `c_0 ≠ 0`, the inverse is a polynomial in `R`, and `c_0 = 0` means
/// the minimal polynomial has root zero.
pub fn tensor_inverse(a: &HopfData, r: &Matrix) -> Result<Option<Matrix>> {
    let n = a.dim();
    let field = a.field();
    let one = a.simple_tensor(a.unit(), a.unit());
    let mut powers = vec![one.clone()];
    loop {
        let next = a.tensor_mul(powers.last().unwrap(), r);
        let cols: Vec<Vector> = powers.iter().map(Matrix::flatten).collect();
        let basis = Matrix::from_columns(field, n * n, &cols);
        if let Some(c) = basis.solve(&next.flatten())? {
            if c.get(0).is_zero() {
                return Ok(None);
            }
            // R · (R^{k-1} - Σ_{i≥1} c_i R^{i-1}) = c_0 · 1
            let mut q = powers.last().unwrap().clone();
            for i in 1..powers.len() {
                q = q.sub(&powers[i - 1].scale(c.get(i)));
            }
            let inv = q.scale(&c.get(0).inv()?);
            let ok = a.tensor_mul(r, &inv) == one && a.tensor_mul(&inv, r) == one;
            return Ok(ok.then_some(inv));
        }
        powers.push(next);
        if powers.len() > n * n + 1 {
            return Ok(None);
        }
    }
}

fn comul_left(a: &HopfData, r: &Matrix) -> Tensor3 {
    let mut out = Tensor3::default();
    for (p, q, c) in r.nonzeros() {
        for (i, j, d) in a.comul_entries(p) {
            out.add((*i, *j, q), c * d);
        }
    }
    out
}

fn comul_right(a: &HopfData, r: &Matrix) -> Tensor3 {
    let mut out = Tensor3::default();
    for (p, q, c) in r.nonzeros() {
        for (i, j, d) in a.comul_entries(q) {
            out.add((p, *i, *j), c * d);
        }
    }
    out
}

/// `R_13 R_23 = Σ z_i ⊗ z_j ⊗ w_i w_j`.
fn r13_r23(a: &HopfData, r: &Matrix) -> Tensor3 {
    let terms: Vec<_> = r.nonzeros().collect();
    let mut out = Tensor3::default();
    for &(p, q, c) in &terms {
        for &(p2, q2, c2) in &terms {
            let cc = c * c2;
            for (k, m) in a.mul_entries(q, q2) {
                out.add((p, p2, *k), &cc * m);
            }
        }
    }
    out
}

/// `R_13 R_12 = Σ z_i z_j ⊗ w_j ⊗ w_i`.
fn r13_r12(a: &HopfData, r: &Matrix) -> Tensor3 {
    let terms: Vec<_> = r.nonzeros().collect();
    let mut out = Tensor3::default();
    for &(p, q, c) in &terms {
        for &(p2, q2, c2) in &terms {
            let cc = c * c2;
            for (k, m) in a.mul_entries(p, p2) {
                out.add((*k, q2, q), &cc * m);
            }
        }
    }
    out
}

fn labels3(a: &HopfData, (i, j, k): (usize, usize, usize)) -> String {
    let l = a.labels();
    format!("coefficient of {} (x) {} (x) {}", l[i], l[j], l[k])
}

/// Invertibility and the three defining equations of a universal R-matrix.
pub fn quasitriangular_checks(a: &HopfData, r: &Matrix) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let inv = tensor_inverse(a, r)?;
    out.push(CheckResult::from_bool(
        "R invertible",
        inv.is_some(),
        || "singular".into(),
    ));
    if let Some(inv) = &inv {
        let s = a.antipode().expect("hopf algebra");
        let expected = a.tensor_map(s, &Matrix::identity(a.field(), a.dim()), r);
        out.push(CheckResult::from_bool(
            "R^-1 = (S (x) Id)R",
            *inv == expected,
            || "inverse differs".into(),
        ));
    }

    let mut witness = None;
    for i in 0..a.dim() {
        let d = a.comul(&a.basis(i))?;
        if a.tensor_mul(r, &d) != a.tensor_mul(&d.transpose(), r) {
            witness = Some(format!("at {}", a.labels()[i]));
            break;
        }
    }
    out.push(CheckResult::from_witness(
        "R Delta(a) R^-1 = Delta^op(a)",
        witness,
    ));

    let diff = comul_left(a, r).first_difference(&r13_r23(a, r));
    out.push(CheckResult::from_witness(
        "(Delta (x) Id)R = R13 R23",
        diff.map(|k| labels3(a, k)),
    ));
    let diff = comul_right(a, r).first_difference(&r13_r12(a, r));
    out.push(CheckResult::from_witness(
        "(Id (x) Delta)R = R13 R12",
        diff.map(|k| labels3(a, k)),
    ));
    Ok(out)
}
