//! Integrals, norms and the modular function of an augmented Frobenius algebra.

use super::FrobeniusSystem;
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::hopf::{Element, Functional, HopfData};

#[derive(Clone, Debug)]
pub struct AugmentedReport {
    pub right_integrals: Vec<Element>,
    pub left_integrals: Vec<Element>,
    /// The right integral with `φ(n b) = ε(b)`.
    pub right_norm: Element,
    /// The left integral with `φ(b n) = ε(b)`.
    pub left_norm: Element,
    /// `m(a) = φ(a n)`, so that `a n = m(a) n`.
    pub modular: Functional,
    pub unimodular: bool,
    pub checks: Vec<CheckResult>,
}

fn integral_space(h: &HopfData, eps: &Functional, right: bool) -> Vec<Element> {
    let n = h.dim();
    let blocks: Vec<Matrix> = (0..n)
        .map(|j| {
            let e = h.basis(j);
            let m = if right {
                h.right_mul_matrix(&e)
            } else {
                h.left_mul_matrix(&e)
            };
            m.sub(&Matrix::identity(h.field(), n).scale(eps.get(j)))
        })
        .collect();
    Matrix::vstack(h.field(), n, &blocks).kernel_basis()
}

/// Basis of `{t : t a = ε(a) t}`.
pub fn right_integrals(h: &HopfData) -> Result<Vec<Element>> {
    Ok(integral_space(h, h.require_counit()?, true))
}

/// Basis of `{t : a t = ε(a) t}`.
pub fn left_integrals(h: &HopfData) -> Result<Vec<Element>> {
    Ok(integral_space(h, h.require_counit()?, false))
}

pub fn integrals_and_norms(sys: &FrobeniusSystem) -> Result<AugmentedReport> {
    let h = sys.host();
    let eps = h.require_counit()?.clone();
    let right_integrals = right_integrals(h)?;
    let left_integrals = left_integrals(h)?;
    let right_norm = sys
        .gram()
        .transpose()
        .solve(&eps)?
        .ok_or(Error::NormNotFound)?;
    let left_norm = sys.gram().solve(&eps)?.ok_or(Error::NormNotFound)?;
    let modular = h.functional_left(&right_norm, sys.phi());
    let unimodular = modular == eps;

    let mut checks = Vec::new();
    let fmt = |a: &Element| h.format_element(a);
    checks.push(CheckResult::from_bool(
        "integral spaces one-dimensional",
        right_integrals.len() == 1 && left_integrals.len() == 1,
        || {
            format!(
                "dims {} and {}",
                right_integrals.len(),
                left_integrals.len()
            )
        },
    ));
    let is_right =
        (0..h.dim()).all(|j| h.mul(&right_norm, &h.basis(j)) == right_norm.scale(eps.get(j)));
    checks.push(CheckResult::from_bool(
        "right norm is a right integral",
        is_right,
        || fmt(&right_norm),
    ));
    let is_left =
        (0..h.dim()).all(|j| h.mul(&h.basis(j), &left_norm) == left_norm.scale(eps.get(j)));
    checks.push(CheckResult::from_bool(
        "left norm is a left integral",
        is_left,
        || fmt(&left_norm),
    ));

    let modular_law =
        (0..h.dim()).find(|&j| h.mul(&h.basis(j), &right_norm) != right_norm.scale(modular.get(j)));
    checks.push(CheckResult::from_witness(
        "a n = m(a) n",
        modular_law.map(|j| h.labels()[j].clone()),
    ));

    let mut via_counit = h.zero();
    let mut via_modular = h.zero();
    for (x, y) in sys.xs().iter().zip(sys.ys()) {
        via_counit.axpy(&eps.dot(x), y);
        via_modular.axpy(&modular.dot(y), x);
    }
    checks.push(CheckResult::from_bool(
        "n = sum eps(x_i) y_i",
        via_counit == right_norm,
        || fmt(&via_counit),
    ));
    checks.push(CheckResult::from_bool(
        "n = sum x_i m(y_i)",
        via_modular == right_norm,
        || fmt(&via_modular),
    ));

    let m_alpha = sys.nakayama().transpose().apply(&modular);
    checks.push(CheckResult::from_bool(
        "m o alpha = eps",
        m_alpha == eps,
        || m_alpha.to_string(),
    ));

    let proportional = right_integrals
        .iter()
        .find(|t| right_norm.scale(&sys.eval(t)) != **t);
    checks.push(CheckResult::from_witness(
        "t = phi(t) n",
        proportional.map(fmt),
    ));

    Ok(AugmentedReport {
        right_integrals,
        left_integrals,
        right_norm,
        left_norm,
        modular,
        unimodular,
        checks,
    })
}
