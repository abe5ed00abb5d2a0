//! Identity checks on an [`FHProfile`]. Each returns a [`CheckResult`] with
//! the first failing basis element (or tensor slot) as witness.

use super::{canonical_system, FHProfile};
use crate::catalog::Report;
use crate::check::CheckResult;
use crate::error::Result;
use crate::exact::{Matrix, Vector};
use crate::frobenius::{build_system, derivative, separability_element, FrobeniusSystem};
use crate::hopf::{convolution_inverse, dual_hopf, Element, Functional, HopfData};

fn basis_witness(h: &HopfData, mut bad: impl FnMut(&Element) -> bool) -> Option<String> {
    (0..h.dim())
        .find(|&j| bad(&h.basis(j)))
        .map(|j| h.labels()[j].clone())
}

fn slot_witness(h: &HopfData, lhs: &Matrix, rhs: &Matrix) -> Option<String> {
    let n = h.dim();
    (0..n * n)
        .find(|&ij| lhs.get(ij / n, ij % n) != rhs.get(ij / n, ij % n))
        .map(|ij| format!("{} ⊗ {}", h.labels()[ij / n], h.labels()[ij % n]))
}

/// `(t, S^{-1} f_2, f_1)` on `H*`, built by the same construction as the
/// canonical system with the roles of `f` and `t` exchanged.
pub fn check_dual_system(
    _h: &HopfData,
    dual: &HopfData,
    f: &Functional,
    t: &Element,
) -> Result<FrobeniusSystem> {
    canonical_system(dual.clone(), t, f)
}

/// `Σ t_2 ⊗ t_1 = Σ b^{-1} S²(t_1) ⊗ t_2`.
pub fn check_radford_element(p: &FHProfile) -> Result<CheckResult> {
    radford_with(p, &p.b_inv)
}

pub(crate) fn radford_with(p: &FHProfile, b_inv: &Element) -> Result<CheckResult> {
    let h = p.host();
    let dt = h.comul(&p.t)?;
    let lhs = dt.transpose();
    let left = h
        .left_mul_matrix(b_inv)
        .mul(&p.antipode.mul(&p.antipode)?)?;
    let rhs = h.tensor_map(&left, &Matrix::identity(h.field(), h.dim()), &dt);
    Ok(CheckResult::from_witness(
        "radford",
        slot_witness(h, &lhs, &rhs),
    ))
}

/// `S⁴(a) = b (m^{-1} ⇀ a ↼ m) b^{-1}` on every basis element; when
/// unimodular and counimodular, additionally `S⁴ = Id`.
pub fn check_s4(p: &FHProfile) -> Result<CheckResult> {
    let h = p.host();
    let s2 = p.antipode.mul(&p.antipode)?;
    let s4 = s2.mul(&s2)?;
    let mut err = None;
    let witness = basis_witness(h, |a| {
        let moved = h.act_right(a, &p.m).and_then(|x| h.act_left(&p.m_inv, &x));
        match moved {
            Ok(x) => s4.apply(a) != h.mul3(&p.b, &x, &p.b_inv),
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    if witness.is_none() && p.flags.unimodular && p.flags.counimodular && !s4.is_identity() {
        return Ok(CheckResult::fail(
            "S^4",
            "unimodular and counimodular but S^4 != Id",
        ));
    }
    Ok(CheckResult::from_witness("S^4", witness))
}

/// The remaining identities tying `f`, `t`, `b`, `m`, `η` and `S` together.
pub fn identity_checks(p: &FHProfile) -> Result<Vec<CheckResult>> {
    let h = p.host();
    let field = h.field();
    let one = h.one();
    let eps = h.require_counit()?;
    let s = &p.antipode;
    let s_inv = &p.antipode_inv;
    let s2 = s.mul(s)?;
    let s_inv2 = s_inv.mul(s_inv)?;
    let fmt = |a: &Element| h.format_element(a);
    let mut out = vec![check_radford_element(p)?, check_s4(p)?];

    out.push(CheckResult::from_bool(
        "f(t) = 1",
        p.f.dot(&p.t).is_one(),
        || p.f.dot(&p.t).to_string(),
    ));
    let tf = h.act_right(&p.t, &p.f)?;
    out.push(CheckResult::from_bool("t <- f = 1", tf == one, || fmt(&tf)));
    let fst = p.f.dot(&s_inv.apply(&p.t));
    out.push(CheckResult::from_bool(
        "f(S^-1 t) = 1",
        fst.is_one(),
        || fst.to_string(),
    ));
    let st = s.apply(&p.t);
    let tm = h.act_right(&p.t, &p.m)?;
    out.push(CheckResult::from_bool("S(t) = t <- m", st == tm, || {
        fmt(&tm)
    }));

    out.push(CheckResult::from_bool(
        "b group-like",
        h.is_group_like(&p.b)?,
        || fmt(&p.b),
    ));
    let m_mult = (0..h.dim() * h.dim()).find(|&ij| {
        let (i, j) = (ij / h.dim(), ij % h.dim());
        p.m.dot(&h.mul(&h.basis(i), &h.basis(j))) != p.m.get(i) * p.m.get(j)
    });
    let m_unit = p.m.dot(h.unit()).is_one();
    out.push(CheckResult::from_bool(
        "m algebra map",
        m_unit && m_mult.is_none(),
        || {
            m_mult.map_or("1".into(), |ij| {
                format!(
                    "({}, {})",
                    h.labels()[ij / h.dim()],
                    h.labels()[ij % h.dim()]
                )
            })
        },
    ));
    let conv = h.convolve(&p.m, &p.m_inv)?;
    out.push(CheckResult::from_bool(
        "m * m^-1 = eps",
        &conv == eps,
        || conv.to_string(),
    ));

    let mut err = None;
    let mut try_ = |r: Result<bool>| match r {
        Ok(b) => b,
        Err(e) => {
            err = Some(e);
            true
        }
    };
    let eta_w = basis_witness(h, |a| {
        let lemma = h.act_right(a, &p.m_inv).map(|x| s2.apply(&x));
        let alt = h.act_right(&s2.apply(a), &p.m_inv);
        try_(lemma.and_then(|l| alt.map(|r| l != r || p.eta.apply(a) != l)))
    });
    out.push(CheckResult::from_witness("eta = S^2(- <- m^-1)", eta_w));
    let eta_inv_w = basis_witness(h, |a| {
        try_(
            h.act_right(a, &p.m)
                .map(|x| s_inv2.apply(&x) != p.eta_inv.apply(a)),
        )
    });
    out.push(CheckResult::from_witness(
        "eta^-1 = S^-2(- <- m)",
        eta_inv_w,
    ));
    if let Some(e) = err {
        return Err(e);
    }
    let composed = p.eta.mul(&p.eta_inv)?;
    out.push(CheckResult::from_bool(
        "eta eta^-1 = Id",
        composed.is_identity(),
        String::new,
    ));

    let dt = h.comul(&p.t)?;
    let norm_formula: Vec<Vector> = (0..h.dim())
        .map(|j| {
            let mut acc = h.zero();
            for (p1, p2, c) in dt.nonzeros() {
                acc.axpy(
                    &(c * p.f.dot(&h.mul(&h.basis(p1), &h.basis(j)))),
                    &h.basis(p2),
                );
            }
            acc
        })
        .collect();
    let s_norm = Matrix::from_columns(field, h.dim(), &norm_formula);
    out.push(CheckResult::from_bool(
        "S(a) = sum f(t_1 a) t_2",
        &s_norm == s,
        || basis_witness(h, |a| s_norm.apply(a) != s.apply(a)).unwrap_or_default(),
    ));
    let conv_s = convolution_inverse(h, &Matrix::identity(field, h.dim()))?;
    out.push(CheckResult::from_bool(
        "S = convolution inverse of Id",
        conv_s.as_ref() == Some(s),
        || "convolution inverse differs".into(),
    ));

    // b is the derivative of f∘S^{-1} with respect to f
    let g = s_inv.transpose().apply(&p.f);
    let d = derivative(&p.system, &build_system(p.host_arc().clone(), g)?)?;
    out.push(CheckResult::from_bool(
        "b = d(S^-1 f)/df",
        d.left == p.b,
        || fmt(&d.left),
    ));
    let defining = (0..h.dim()).find(|&i| {
        let gi = h.basis(i);
        h.convolve(&gi, &p.f)
            .map(|x| x != p.f.scale(p.b.get(i)))
            .unwrap_or(true)
    });
    out.push(CheckResult::from_witness(
        "g f = g(b) f",
        defining.map(|i| format!("{}*", h.labels()[i])),
    ));

    let v = st;
    let left_law = basis_witness(h, |a| h.mul(&v, a) != v.scale(&p.m_inv.dot(a)));
    out.push(CheckResult::from_witness("S(t) a = m^-1(a) S(t)", left_law));
    Ok(out)
}

/// Separability of `H` and `H*`, and the conclusion `S² = Id` when both hold.
pub fn involutivity_report(p: &FHProfile) -> Result<Report> {
    let h = p.host();
    let mut r = Report::new();
    if !h.field().int_is_unit(2) {
        r.text(
            "involutivity theorem",
            "hypothesis 2 != 0 violated; theorem not applicable",
        );
        r.flag("involutive", p.flags.involutive);
        return Ok(r);
    }
    let dual = dual_hopf(h)?;
    let separable = separability_element(&p.system)?.is_some();
    let coseparable = separability_element(&check_dual_system(h, &dual, &p.f, &p.t)?)?.is_some();
    r.flag("separable", separable)
        .flag("coseparable", coseparable)
        .flag("involutive", p.flags.involutive);
    if separable && coseparable {
        r.check(CheckResult::from_bool(
            "separable and coseparable imply S^2 = Id",
            p.flags.involutive,
            || "S^2 != Id".into(),
        ));
    } else {
        r.text("involutivity theorem", "hypotheses not met; no claim");
    }
    Ok(r)
}
