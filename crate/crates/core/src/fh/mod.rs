//! Finite-dimensional Hopf algebras as Frobenius algebras: the integral
//! functional `f`, the right norm `t`, the distinguished group-likes `b`
//! and `m`, and the identities relating them to `S` and the Nakayama map.

mod identities;
mod orders;

use std::sync::Arc;

pub use identities::{
    check_dual_system, check_radford_element, check_s4, identity_checks, involutivity_report,
};
pub use orders::{element_order, functional_order, order_report, Orders};

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::frobenius::{
    build_system, integrals_and_norms, right_integrals, separability_element, symmetric_test,
    AugmentedReport, FrobeniusSystem,
};
use crate::hopf::{dual_hopf, Element, Functional, HopfData};

#[derive(Clone, Debug)]
pub struct Flags {
    pub unimodular: bool,
    pub counimodular: bool,
    pub separable: bool,
    pub coseparable: bool,
    pub involutive: bool,
    pub symmetric: bool,
}

#[derive(Clone, Debug)]
pub struct FHProfile {
    /// Spans the right integrals of `H*`: `Σ f(a_1) a_2 = f(a) 1`.
    pub f: Functional,
    /// Right norm for `f`: `f(t b) = ε(b)`, hence `f(t) = 1`.
    pub t: Element,
    /// `b = f ⇀ t`, with `g f = g(b) f` for all `g ∈ H*`.
    pub b: Element,
    pub b_inv: Element,
    /// `a t = m(a) t`.
    pub m: Functional,
    /// `m^{-1} = m ∘ S`.
    pub m_inv: Functional,
    /// Nakayama automorphism of `f`.
    pub eta: Matrix,
    pub eta_inv: Matrix,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    /// `(f, S^{-1} t_2, t_1)`.
    pub system: FrobeniusSystem,
    pub augmented: AugmentedReport,
    pub flags: Flags,
    pub orders: Orders,
}

impl FHProfile {
    pub fn host(&self) -> &HopfData {
        self.system.host()
    }

    pub fn host_arc(&self) -> &Arc<HopfData> {
        self.system.host_arc()
    }
}

/// `(f, S^{-1} t_2, t_1)` as explicit dual bases: grouping `Δt = Σ T[j][k] e_j ⊗ e_k`
/// by `j` gives `x_j = Σ_k T[j][k] S^{-1} e_k` and `y_j = e_j`.
pub fn canonical_system(
    h: impl Into<Arc<HopfData>>,
    f: &Functional,
    t: &Element,
) -> Result<FrobeniusSystem> {
    let h = h.into();
    let (_, s_inv) = h.require_antipode()?;
    let dt = h.comul(t)?;
    let n = h.dim();
    let xs = (0..n).map(|j| s_inv.apply(&dt.row(j))).collect();
    let ys = (0..n).map(|j| h.basis(j)).collect();
    FrobeniusSystem::from_parts(h, f.clone(), xs, ys)
}

/// The right integral of `H*`, unique up to scale over a field.
pub fn integral_functional(h: &HopfData) -> Result<Functional> {
    let mut space = right_integrals(&dual_hopf(h)?)?;
    if space.len() != 1 {
        return Err(Error::NotFrobenius(format!(
            "right integrals of the dual have dimension {}",
            space.len()
        )));
    }
    Ok(space.remove(0))
}

pub fn fh_profile(h: impl Into<Arc<HopfData>>) -> Result<FHProfile> {
    let h: Arc<HopfData> = h.into();
    let (s, s_inv) = h.require_antipode()?;
    let (antipode, antipode_inv) = (s.clone(), s_inv.clone());
    let f = integral_functional(&h)?;
    let t = match build_system(h.clone(), f.clone()) {
        Ok(sys) => integrals_and_norms(&sys)?.right_norm,
        Err(Error::DegenerateFunctional) => {
            return Err(Error::NotFrobenius(
                "integral functional is degenerate".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    let system = canonical_system(h.clone(), &f, &t)?;
    let augmented = integrals_and_norms(&system)?;
    if augmented.right_norm != t {
        return Err(Error::Internal(
            "canonical system changed the right norm".into(),
        ));
    }
    let b = h.act_left(&f, &t)?;
    let b_inv = antipode.apply(&b);
    let m = augmented.modular.clone();
    let m_inv = antipode.transpose().apply(&m);
    let eta = system.nakayama().clone();
    let eta_inv = eta
        .inverse()?
        .ok_or_else(|| Error::Internal("Nakayama map is singular".into()))?;

    let eps = h.require_counit()?;
    let dual = dual_hopf(&h)?;
    let dual_sys = check_dual_system(&h, &dual, &f, &t)?;
    let flags = Flags {
        unimodular: &m == eps,
        counimodular: b == h.one(),
        separable: separability_element(&system)?.is_some(),
        coseparable: separability_element(&dual_sys)?.is_some(),
        involutive: antipode.mul(&antipode)?.is_identity(),
        symmetric: symmetric_test(&system)?.symmetric,
    };
    let mut profile = FHProfile {
        f,
        t,
        b,
        b_inv,
        m,
        m_inv,
        eta,
        eta_inv,
        antipode,
        antipode_inv,
        system,
        augmented,
        flags,
        orders: Orders::default(),
    };
    profile.orders = order_report(&profile)?;
    Ok(profile)
}

/// Every check attached to a profile: the augmented-system checks, the
/// frobenius structural checks, and the identities of [`identity_checks`].
pub fn all_checks(p: &FHProfile) -> Result<Vec<CheckResult>> {
    let mut out = p.system.structural_checks();
    out.extend(p.augmented.checks.iter().cloned());
    out.extend(identity_checks(p)?);
    out.extend(p.orders.checks.iter().cloned());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{preset, PRESET_NAMES};

    #[test]
    fn sweedler_profile() {
        let h = preset("sweedler4").unwrap();
        let p = fh_profile(h.clone()).unwrap();
        assert_eq!(p.f.dot(&p.t), h.scalar(1));
        assert!(p
            .t
            .scalar_multiple_of(&h.basis(2).sub(&h.basis(3)))
            .is_some());
        assert_eq!(p.b, h.basis(1));
        assert_eq!(p.m.get(1), &h.scalar(-1));
        assert!(!p.flags.unimodular);
        assert!(!p.flags.involutive);
        assert_eq!(
            (p.orders.antipode, p.orders.eta, p.orders.b, p.orders.m),
            (4, 2, 2, 2)
        );
    }

    #[test]
    fn c2_profile() {
        let h = preset("group:C2").unwrap();
        let p = fh_profile(h.clone()).unwrap();
        assert!(p.t.scalar_multiple_of(&h.one().add(&h.basis(1))).is_some());
        assert_eq!(p.b, h.one());
        assert_eq!(&p.m, h.counit().unwrap());
        assert!(p.flags.unimodular && p.flags.symmetric && p.flags.involutive);
        assert!(p.flags.separable && p.flags.coseparable);
    }

    #[test]
    fn every_preset_and_its_dual_is_fh() {
        for name in PRESET_NAMES.iter().filter(|n| !n.starts_with("truncpoly")) {
            let h = preset(name).unwrap();
            let p = fh_profile(h.clone()).unwrap();
            for c in all_checks(&p).unwrap() {
                assert!(c.passed, "{name}: {c}");
            }
            assert!(fh_profile(dual_hopf(&h).unwrap()).is_ok(), "dual of {name}");
        }
    }

    #[test]
    fn taft_orders() {
        let p = fh_profile(preset("taft:3:13").unwrap()).unwrap();
        assert_eq!(p.orders.b, 3);
        assert_eq!(p.orders.antipode, 6);
        assert_eq!(36 % p.orders.antipode, 0);
    }

    #[test]
    fn cyclic_group_like_order() {
        let h = preset("group:C5").unwrap();
        assert_eq!(element_order(&h, &h.basis(1), 5).unwrap(), 5);
    }

    #[test]
    fn algebras_without_antipode_are_rejected() {
        assert!(matches!(
            fh_profile(preset("truncpoly:3").unwrap()),
            Err(Error::MissingStructure(_))
        ));
    }
}
