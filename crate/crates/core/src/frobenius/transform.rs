//! Transport of systems along (anti-)automorphisms, and tensor products.

use super::{
    algebra_map_failure, anti_map_failure, build_system, integrals_and_norms, FrobeniusSystem,
};
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::hopf::tensor_algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Automorphism,
    AntiAutomorphism,
}

/// `(φ∘θ^{-1}, θ(x_i), θ(y_i))` for an automorphism and
/// `(φ∘θ^{-1}, θ(y_i), θ(x_i))` for an anti-automorphism. When
/// `eps_invariant` is set, also checks that `θ` carries the right norm to
/// the new right norm (automorphism) or the left norm to it
/// (anti-automorphism), and likewise for the other chirality.
pub fn transform_system(
    sys: &FrobeniusSystem,
    theta: &crate::exact::Matrix,
    kind: MapKind,
    eps_invariant: bool,
) -> Result<(FrobeniusSystem, Vec<CheckResult>)> {
    let h = sys.host();
    let inv = theta.inverse()?.ok_or(Error::NotInvertible)?;
    let failure = match kind {
        MapKind::Automorphism => algebra_map_failure(h, theta),
        MapKind::AntiAutomorphism => anti_map_failure(h, theta),
    };
    if let Some(w) = failure {
        return Err(Error::AxiomFailure(format!(
            "map is not of the stated kind at {w}"
        )));
    }
    let phi = inv.transpose().apply(sys.phi());
    let image = |v: &[crate::hopf::Element]| v.iter().map(|a| theta.apply(a)).collect::<Vec<_>>();
    let (xs, ys) = match kind {
        MapKind::Automorphism => (image(sys.xs()), image(sys.ys())),
        MapKind::AntiAutomorphism => (image(sys.ys()), image(sys.xs())),
    };
    let out = FrobeniusSystem::from_parts(sys.host_arc().clone(), phi, xs, ys)?;
    let mut checks = Vec::new();
    if eps_invariant {
        let eps = h.require_counit()?;
        if theta.transpose().apply(eps) != *eps {
            return Err(Error::AxiomFailure(
                "map does not preserve the counit".into(),
            ));
        }
        let before = integrals_and_norms(sys)?;
        let after = integrals_and_norms(&out)?;
        let (to_right, to_left) = match kind {
            MapKind::Automorphism => (&before.right_norm, &before.left_norm),
            MapKind::AntiAutomorphism => (&before.left_norm, &before.right_norm),
        };
        let fmt = |a| h.format_element(a);
        let mapped = theta.apply(to_right);
        checks.push(CheckResult::from_bool(
            "right norm transported",
            mapped == after.right_norm,
            || fmt(&mapped),
        ));
        let mapped = theta.apply(to_left);
        checks.push(CheckResult::from_bool(
            "left norm transported",
            mapped == after.left_norm,
            || fmt(&mapped),
        ));
    }
    Ok((out, checks))
}

/// `(φ_A ⊗ φ_B, x_i ⊗ x'_j, y_i ⊗ y'_j)` on `A ⊗ B`.
pub fn tensor_system(a: &FrobeniusSystem, b: &FrobeniusSystem) -> Result<FrobeniusSystem> {
    let host = tensor_algebra(a.host(), b.host())?;
    let phi = a.phi().kron_vec(b.phi());
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (x, y) in a.xs().iter().zip(a.ys()) {
        for (x2, y2) in b.xs().iter().zip(b.ys()) {
            xs.push(x.kron_vec(x2));
            ys.push(y.kron_vec(y2));
        }
    }
    let sys = FrobeniusSystem::from_parts(host, phi.clone(), xs, ys)?;
    debug_assert!(build_system(sys.host_arc().clone(), phi).is_ok());
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::exact::Matrix;

    #[test]
    fn identity_transform_is_trivial() {
        let h = preset("group:S3").unwrap();
        let sys = build_system(h.clone(), h.basis(0)).unwrap();
        let (out, checks) = transform_system(
            &sys,
            &Matrix::identity(h.field(), 6),
            MapKind::Automorphism,
            true,
        )
        .unwrap();
        assert_eq!(out.phi(), sys.phi());
        assert_eq!(out.ys(), sys.ys());
        assert!(checks.iter().all(|c| c.passed));
    }

    #[test]
    fn antipode_sends_right_norm_to_left_norm() {
        let h = preset("sweedler4").unwrap();
        let sys = build_system(h.clone(), h.basis(2)).unwrap();
        let s = h.antipode().unwrap().clone();
        let (out, checks) = transform_system(&sys, &s, MapKind::AntiAutomorphism, true).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        let before = integrals_and_norms(&sys).unwrap();
        let after = integrals_and_norms(&out).unwrap();
        assert_eq!(after.left_norm, s.apply(&before.right_norm));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let h = preset("sweedler4").unwrap();
        let sys = build_system(h.clone(), h.basis(2)).unwrap();
        let s = h.antipode().unwrap().clone();
        assert!(transform_system(&sys, &s, MapKind::Automorphism, false).is_err());
    }

    #[test]
    fn tensor_of_truncpoly_systems() {
        let t = preset("truncpoly:2").unwrap();
        let sys = build_system(t.clone(), t.basis(1)).unwrap();
        let sq = tensor_system(&sys, &sys).unwrap();
        assert_eq!(sq.host().dim(), 4);
        let r = integrals_and_norms(&sq).unwrap();
        assert_eq!(r.right_norm, t.basis(1).kron_vec(&t.basis(1)));
        assert!(sq.structural_checks().iter().all(|c| c.passed));
    }
}
