//! Orders of `S`, `η`, `b` and `m`, with their divisibility bounds enforced.
//! Over a field the bounds are `dim H` for `b` and `m`, `4 dim H` for `S`
//! and `2 dim H` for `η`; a violation is a falsification, not a soft failure.

use super::FHProfile;
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::hopf::{Element, Functional, HopfData};

#[derive(Clone, Debug, Default)]
pub struct Orders {
    pub antipode: u64,
    pub eta: u64,
    pub b: u64,
    pub m: u64,
    pub checks: Vec<CheckResult>,
}

/// Least `k ≤ bound` with `a^k = 1`.
pub fn element_order(h: &HopfData, a: &Element, bound: u64) -> Result<u64> {
    let mut acc = a.clone();
    for k in 1..=bound {
        if acc == *h.unit() {
            return Ok(k);
        }
        acc = h.mul(&acc, a);
    }
    Err(Error::Falsification(format!(
        "order of {} exceeds {bound}",
        h.format_element(a)
    )))
}

/// Least `k ≤ bound` with `g^k = ε` under convolution.
pub fn functional_order(h: &HopfData, g: &Functional, bound: u64) -> Result<u64> {
    let eps = h.require_counit()?;
    let mut acc = g.clone();
    for k in 1..=bound {
        if acc == *eps {
            return Ok(k);
        }
        acc = h.convolve(&acc, g)?;
    }
    Err(Error::Falsification(format!(
        "convolution order of {g} exceeds {bound}"
    )))
}

fn map_order(m: &Matrix, what: &str, bound: u64) -> Result<u64> {
    m.order(bound)?
        .ok_or_else(|| Error::Falsification(format!("order of {what} exceeds {bound}")))
}

fn divides(name: &str, ord: u64, bound: u64) -> Result<CheckResult> {
    if !bound.is_multiple_of(ord) {
        return Err(Error::Falsification(format!(
            "ord({name}) = {ord} does not divide {bound}"
        )));
    }
    Ok(CheckResult::pass(format!("ord({name}) | {bound}")))
}

pub fn order_report(p: &FHProfile) -> Result<Orders> {
    let h = p.host();
    let n = h.dim() as u64;
    let antipode = map_order(&p.antipode, "S", 4 * n)?;
    let eta = map_order(&p.eta, "eta", 2 * n)?;
    let b = element_order(h, &p.b, n)?;
    let m = functional_order(h, &p.m, n)?;
    let mut checks = vec![
        divides("S", antipode, 4 * n)?,
        divides("eta", eta, 2 * n)?,
        divides("b", b, n)?,
        divides("m", m, n)?,
    ];
    let s_pow = p.antipode.pow(4 * n)?;
    checks.push(CheckResult::from_bool(
        format!("S^{} = Id", 4 * n),
        s_pow.is_identity(),
        String::new,
    ));
    let eta_pow = p.eta.pow(2 * n)?;
    checks.push(CheckResult::from_bool(
        format!("eta^{} = Id", 2 * n),
        eta_pow.is_identity(),
        String::new,
    ));
    Ok(Orders {
        antipode,
        eta,
        b,
        m,
        checks,
    })
}
