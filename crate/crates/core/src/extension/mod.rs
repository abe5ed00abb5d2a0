//! Hopf subalgebra pairs `K ⊆ H` as β-Frobenius extensions: the relative
//! Frobenius map `E`, the twist `β`, the elements `Λ̂` and `Λ`, the
//! comparison with `F` built from the Frobenius system of `K`, and the
//! composition of relative systems.

mod relative;

use std::sync::Arc;

use relative::pullback;
pub use relative::{compose_transitive, ground_algebra, identity_extension, RelativeSystem};

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Vector};
use crate::fh::{fh_profile, FHProfile};
use crate::frobenius::{derivative, integrals_and_norms, FrobeniusSystem};
use crate::hopf::{Element, Functional, HopfData};

#[derive(Clone, Debug)]
pub struct SubalgebraPair {
    pub h: Arc<HopfData>,
    pub k: Arc<HopfData>,
    /// `dim H × dim K`, columns are `ι(e_i)`.
    pub embedding: Matrix,
    pub profile_h: FHProfile,
    pub profile_k: FHProfile,
}

impl SubalgebraPair {
    pub fn embed(&self, x: &Vector) -> Element {
        self.embedding.apply(x)
    }

    /// `K` coordinates of an element of `ι(K)`.
    pub fn restrict(&self, a: &Element) -> Option<Vector> {
        pullback(&self.embedding, a)
    }
}

fn not_sub(condition: &str, witness: impl Into<String>) -> Error {
    Error::NotHopfSubalgebra {
        condition: condition.to_string(),
        witness: witness.into(),
    }
}

/// `C` with `(ι ⊗ ι)(C) = T`, if `T ∈ ι(K) ⊗ ι(K)`.
fn pullback_tensor(iota: &Matrix, t: &Matrix) -> Option<Matrix> {
    // T = ι C ιᵀ: pull back the columns of T, then the rows of the result.
    let u: Vec<Vector> = (0..t.cols())
        .map(|j| pullback(iota, &t.column(j)))
        .collect::<Option<_>>()?;
    let u = Matrix::from_columns(t.field(), iota.cols(), &u);
    let c_t: Vec<Vector> = (0..u.rows())
        .map(|p| pullback(iota, &u.row(p)))
        .collect::<Option<_>>()?;
    Some(Matrix::from_columns(t.field(), iota.cols(), &c_t).transpose())
}

/// Checks that `ι` is injective, unital, multiplicative, closed under `Δ`
/// and `S`, and compatible with the structure maps of `K`; then profiles both.
pub fn verify_pair(
    h: impl Into<Arc<HopfData>>,
    k: impl Into<Arc<HopfData>>,
    embedding: Matrix,
) -> Result<SubalgebraPair> {
    let (h, k): (Arc<HopfData>, Arc<HopfData>) = (h.into(), k.into());
    if h.field() != k.field() || embedding.field() != h.field() {
        return Err(Error::FieldMismatch("subalgebra pair".into()));
    }
    if embedding.rows() != h.dim() || embedding.cols() != k.dim() {
        return Err(Error::DimensionMismatch(format!(
            "embedding is {}x{}, expected {}x{}",
            embedding.cols(),
            embedding.rows(),
            k.dim(),
            h.dim()
        )));
    }
    let lk = |i: usize| k.labels()[i].clone();
    let iota = &embedding;
    if iota.rank() != k.dim() {
        return Err(not_sub(
            "injective",
            format!("rank {} < dim K = {}", iota.rank(), k.dim()),
        ));
    }
    if iota.apply(k.unit()) != *h.unit() {
        return Err(not_sub("unital", "1"));
    }
    let kn = k.dim();
    for ij in 0..kn * kn {
        let (i, j) = (ij / kn, ij % kn);
        if iota.apply(&k.mul(&k.basis(i), &k.basis(j))) != h.mul(&iota.column(i), &iota.column(j)) {
            return Err(not_sub("multiplicative", format!("({}, {})", lk(i), lk(j))));
        }
    }
    let (s_h, _) = h.require_antipode()?;
    for i in 0..kn {
        let image = iota.column(i);
        let Some(c) = pullback_tensor(iota, &h.comul(&image)?) else {
            return Err(not_sub("comultiplication closed", lk(i)));
        };
        if k.has_comul() && c != k.comul(&k.basis(i))? {
            return Err(not_sub("comultiplication compatible", lk(i)));
        }
        let Some(s) = pullback(iota, &s_h.apply(&image)) else {
            return Err(not_sub("antipode closed", lk(i)));
        };
        if k.antipode().is_some_and(|sk| sk.column(i) != s) {
            return Err(not_sub("antipode compatible", lk(i)));
        }
        if k.counit()
            .is_some_and(|e| e.get(i) != &h.counit_of(&image).unwrap_or_else(|_| h.field().zero()))
        {
            return Err(not_sub("counit compatible", lk(i)));
        }
    }
    let profile_h = fh_profile(h.clone())?;
    let profile_k = fh_profile(k.clone())?;
    Ok(SubalgebraPair {
        h,
        k,
        embedding,
        profile_h,
        profile_k,
    })
}

#[derive(Clone, Debug)]
pub struct RelativeFrobeniusSystem {
    /// `(E, S^{-1} Λ_2, Λ_1)` with twist `β`.
    pub system: RelativeSystem,
    /// `χ = m_H * m_K^{-1}` on `K`.
    pub chi: Functional,
    /// `t_H = Λ̂ t_K`.
    pub lambda_hat: Element,
    /// `Λ = η_H(S^{-1} Λ̂)`.
    pub lambda: Element,
}

impl RelativeFrobeniusSystem {
    pub fn beta(&self) -> &Matrix {
        self.system.beta()
    }
}

/// Builds `(E, S^{-1}Λ_2, Λ_1)` with `E(a) = Σ f(a_1 S^{-1}(t_K)) a_2`,
/// computing `β` both as `η_K ∘ η_H^{-1}` and as `x ↦ x ↼ χ`.
pub fn relative_system(pair: &SubalgebraPair) -> Result<RelativeFrobeniusSystem> {
    let (h, k) = (&*pair.h, &*pair.k);
    let (ph, pk) = (&pair.profile_h, &pair.profile_k);
    let field = h.field();
    let t_k = pair.embed(&pk.t);

    let lambda_hat = h
        .right_mul_matrix(&t_k)
        .solve(&ph.t)?
        .ok_or(Error::LambdaHatUnsolvable)?;
    if h.mul(&lambda_hat, &t_k) != ph.t {
        return Err(Error::LambdaHatUnsolvable);
    }
    let lambda = ph.eta.apply(&ph.antipode_inv.apply(&lambda_hat));

    let s_inv_tk = ph.antipode_inv.apply(&t_k);
    let mut e_cols = Vec::with_capacity(h.dim());
    for j in 0..h.dim() {
        let mut acc = h.zero();
        for (p, q, c) in h.comul_entries(j) {
            let coeff = ph.f.dot(&h.mul(&h.basis(*p), &s_inv_tk));
            acc.axpy(&(c * &coeff), &h.basis(*q));
        }
        let restricted = pair
            .restrict(&acc)
            .ok_or_else(|| Error::Falsification(format!("E({}) is not in K", h.labels()[j])))?;
        e_cols.push(restricted);
    }
    let e_map = Matrix::from_columns(field, k.dim(), &e_cols);

    let mut via_nakayama = Vec::with_capacity(k.dim());
    for i in 0..k.dim() {
        let moved = ph.eta_inv.apply(&pair.embedding.column(i));
        let back = pair.restrict(&moved).ok_or_else(|| {
            Error::Falsification(format!("eta_H^-1 moves {} out of K", k.labels()[i]))
        })?;
        via_nakayama.push(pk.eta.apply(&back));
    }
    let beta = Matrix::from_columns(field, k.dim(), &via_nakayama);
    let m_h_on_k = pair.embedding.transpose().apply(&ph.m);
    let chi = k.convolve(&m_h_on_k, &pk.m_inv)?;
    let via_chi: Vec<Vector> = (0..k.dim())
        .map(|i| k.act_right(&k.basis(i), &chi))
        .collect::<Result<_>>()?;
    let beta_chi = Matrix::from_columns(field, k.dim(), &via_chi);
    if beta != beta_chi {
        return Err(Error::Falsification(
            "eta_K eta_H^-1 differs from the chi-twist".into(),
        ));
    }

    let dl = h.comul(&lambda)?;
    let xs = (0..h.dim())
        .map(|j| ph.antipode_inv.apply(&dl.row(j)))
        .collect();
    let ys = (0..h.dim()).map(|j| h.basis(j)).collect();
    let system = RelativeSystem::from_parts(
        pair.h.clone(),
        pair.k.clone(),
        pair.embedding.clone(),
        e_map,
        beta,
        xs,
        ys,
    )?;
    Ok(RelativeFrobeniusSystem {
        system,
        chi,
        lambda_hat,
        lambda,
    })
}

#[derive(Clone, Debug)]
pub struct RelativeDerivative {
    /// `F(a) = Σ f(a z_j) w_j`, `dim K × dim H`.
    pub f_map: Matrix,
    /// `Σ F(S^{-1}Λ_2) Λ_1`, a scalar multiple of `1`.
    pub d: Element,
    /// The scalar `(S^{-1}f)(n Λ)`.
    pub scalar: Scalar,
    pub checks: Vec<CheckResult>,
}

/// `F` and `d` from the Frobenius system `(g, z_j, w_j)` of `K`.
pub fn relative_f_and_derivative(
    pair: &SubalgebraPair,
    rel: &RelativeFrobeniusSystem,
    sys_k: &FrobeniusSystem,
) -> Result<RelativeDerivative> {
    let n = integrals_and_norms(sys_k)?.right_norm;
    relative_f_from_bases(pair, rel, sys_k.phi(), sys_k.xs(), sys_k.ys(), &n)
}

/// As [`relative_f_and_derivative`] with `z_j = S^{-1}(n_2)`, `w_j = n_1`
/// read off an arbitrary `n ∈ K`.
pub fn relative_f_from_norm(
    pair: &SubalgebraPair,
    rel: &RelativeFrobeniusSystem,
    g: &Functional,
    n: &Vector,
) -> Result<RelativeDerivative> {
    let k = &*pair.k;
    let dn = k.comul(n)?;
    let s_inv = &pair.profile_k.antipode_inv;
    let zs: Vec<Vector> = (0..k.dim()).map(|j| s_inv.apply(&dn.row(j))).collect();
    let ws: Vec<Vector> = (0..k.dim()).map(|j| k.basis(j)).collect();
    relative_f_from_bases(pair, rel, g, &zs, &ws, n)
}

fn relative_f_from_bases(
    pair: &SubalgebraPair,
    rel: &RelativeFrobeniusSystem,
    g: &Functional,
    zs: &[Vector],
    ws: &[Vector],
    n: &Vector,
) -> Result<RelativeDerivative> {
    let (h, k) = (&*pair.h, &*pair.k);
    let ph = &pair.profile_h;
    let cols: Vec<Vector> = (0..h.dim())
        .map(|j| {
            let mut acc = Vector::zeros(k.field(), k.dim());
            for (z, w) in zs.iter().zip(ws) {
                acc.axpy(&ph.f.dot(&h.mul(&h.basis(j), &pair.embed(z))), w);
            }
            acc
        })
        .collect();
    let f_map = Matrix::from_columns(h.field(), k.dim(), &cols);
    let sys = &rel.system;
    let mut d = h.zero();
    for (x, y) in sys.xs().iter().zip(sys.ys()) {
        d = d.add(&h.mul(&pair.embed(&f_map.apply(x)), y));
    }
    let scalar = d
        .scalar_multiple_of(h.unit())
        .filter(|c| !c.is_zero())
        .ok_or_else(|| {
            Error::Falsification(format!(
                "derivative {} is not a unit scalar",
                h.format_element(&d)
            ))
        })?;
    let expected =
        ph.f.dot(&ph.antipode_inv.apply(&h.mul(&pair.embed(n), &rel.lambda)));
    let mut checks = vec![CheckResult::from_bool(
        "d = (S^-1 f)(n Lambda) 1",
        scalar == expected,
        || format!("{scalar} vs {expected}"),
    )];
    checks.push(CheckResult::from_bool(
        "F = E d",
        f_map == sys.e_map().scale(&scalar),
        || "F differs from E d".into(),
    ));
    let gf = f_map.transpose().apply(g);
    checks.push(CheckResult::from_bool("f = g F", gf == ph.f, || {
        gf.to_string()
    }));
    Ok(RelativeDerivative {
        f_map,
        d,
        scalar,
        checks,
    })
}

/// `β^{-1}(n) Λ = Λ̂ n d` and `m_H(x) = m_K(β(x))` on every basis element of `K`.
pub fn check_norm_identities(
    pair: &SubalgebraPair,
    rel: &RelativeFrobeniusSystem,
    d: &Scalar,
) -> Result<CheckResult> {
    let (h, k) = (&*pair.h, &*pair.k);
    let n = &pair.profile_k.t;
    let beta_inv = rel.beta().inverse()?.ok_or(Error::NotInvertible)?;
    let mut failures = Vec::new();
    let lhs = h.mul(&pair.embed(&beta_inv.apply(n)), &rel.lambda);
    let rhs = h.mul(&rel.lambda_hat, &pair.embed(n)).scale(d);
    if lhs != rhs {
        failures.push(format!(
            "beta^-1(n) Lambda = Lambda-hat n d ({} vs {})",
            h.format_element(&lhs),
            h.format_element(&rhs)
        ));
    }
    let m_h_on_k = pair.embedding.transpose().apply(&pair.profile_h.m);
    for i in 0..k.dim() {
        let mk_beta = pair.profile_k.m.dot(&rel.beta().column(i));
        if m_h_on_k.get(i) != &mk_beta {
            failures.push(format!("m_H(x) = m_K(beta(x)) at {}", k.labels()[i]));
            break;
        }
    }
    Ok(CheckResult::from_witness(
        "norm identities",
        (!failures.is_empty()).then(|| failures.join("; ")),
    ))
}

/// Composes `(E, S^{-1}Λ_2, Λ_1)` with the canonical system of `K` and
/// returns the derivative of the result against the canonical system of `H`.
pub fn transitive_derivative(
    pair: &SubalgebraPair,
    rel: &RelativeFrobeniusSystem,
) -> Result<(RelativeSystem, Element)> {
    let inner = RelativeSystem::from_frobenius(&pair.profile_k.system);
    let composed = compose_transitive(&rel.system, &inner)?;
    let phi = composed.e_map().row(0);
    let as_frobenius = FrobeniusSystem::from_parts(
        pair.h.clone(),
        phi,
        composed.xs().to_vec(),
        composed.ys().to_vec(),
    )?;
    let d = derivative(&as_frobenius, &pair.profile_h.system)?;
    if d.left != d.right {
        return Err(Error::Falsification(
            "transitive derivative is not central".into(),
        ));
    }
    Ok((composed, d.left))
}

/// Checks that a plain system seen over `k·1` has the frobenius-module
/// Nakayama map, in both of its relative forms.
pub fn check_ground_nakayama(sys: &FrobeniusSystem) -> CheckResult {
    let rel = RelativeSystem::from_frobenius(sys);
    match rel.ground_nakayama() {
        Some((eta, eta_inv)) => {
            let ok = &eta == sys.nakayama() && eta.mul(&eta_inv).is_ok_and(|m| m.is_identity());
            CheckResult::from_bool("relative Nakayama over k", ok, || {
                "differs from the algebra Nakayama map".into()
            })
        }
        None => CheckResult::fail("relative Nakayama over k", "base is not k"),
    }
}

/// Subgroup and group-like inclusions used by the examples and tests.
pub fn coordinate_embedding(h: &HopfData, images: &[Element]) -> Matrix {
    Matrix::from_columns(h.field(), h.dim(), images)
}

#[cfg(test)]
mod tests;
