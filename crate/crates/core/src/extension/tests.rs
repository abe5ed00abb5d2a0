use super::*;
use crate::catalog::preset;

/// Embeds `C_N` by sending its generator to `gen` in `h`.
fn cyclic_embedding(h: &HopfData, order: usize, gen: &Element) -> Matrix {
    let images: Vec<Element> = (0..order).map(|i| h.power(gen, i as u64)).collect();
    coordinate_embedding(h, &images)
}

fn index_of(h: &HopfData, label: &str) -> usize {
    h.labels().iter().position(|l| l == label).unwrap()
}

fn c3_in_s3() -> SubalgebraPair {
    let h = preset("group:S3").unwrap();
    let c = h.basis(index_of(&h, "(123)"));
    let iota = cyclic_embedding(&h, 3, &c);
    verify_pair(h, preset("group:C3").unwrap(), iota).unwrap()
}

fn g_in_h4() -> SubalgebraPair {
    let h = preset("sweedler4").unwrap();
    let iota = cyclic_embedding(&h, 2, &h.basis(1));
    verify_pair(h, preset("group:C2").unwrap(), iota).unwrap()
}

fn unit_in_h4() -> SubalgebraPair {
    let h = preset("sweedler4").unwrap();
    let iota = coordinate_embedding(&h, &[h.one()]);
    verify_pair(h, preset("group:C1").unwrap(), iota).unwrap()
}

#[test]
fn pairs_are_verified() {
    c3_in_s3();
    g_in_h4();
    unit_in_h4();
}

#[test]
fn span_of_one_and_x_is_rejected() {
    let h = preset("sweedler4").unwrap();
    let iota = coordinate_embedding(&h, &[h.one(), h.basis(2)]);
    let err = verify_pair(h, preset("truncpoly:2").unwrap(), iota).unwrap_err();
    let Error::NotHopfSubalgebra { condition, witness } = err else {
        panic!("unexpected {err:?}");
    };
    assert_eq!(condition, "comultiplication closed");
    assert_eq!(witness, "X");
}

#[test]
fn non_multiplicative_embedding_is_rejected() {
    let h = preset("sweedler4").unwrap();
    let iota = coordinate_embedding(&h, &[h.one(), h.basis(2)]);
    let err = verify_pair(h, preset("group:C2").unwrap(), iota).unwrap_err();
    assert!(
        matches!(err, Error::NotHopfSubalgebra { ref condition, .. } if condition == "multiplicative")
    );
}

#[test]
fn subgroup_projection() {
    let pair = c3_in_s3();
    let rel = relative_system(&pair).unwrap();
    let (h, k) = (&*pair.h, &*pair.k);
    assert!(rel.beta().is_identity());
    assert_eq!(&rel.chi, k.counit().unwrap());
    let e = rel.system.e_map();
    let mut scale = None;
    for j in 0..h.dim() {
        let v = e.column(j);
        match pair.restrict(&h.basis(j)) {
            Some(kx) => {
                let c = v.scalar_multiple_of(&kx).unwrap();
                assert!(!c.is_zero());
                assert_eq!(*scale.get_or_insert(c.clone()), c);
            }
            None => assert!(v.is_zero(), "E({}) = {v}", h.labels()[j]),
        }
    }
}

#[test]
fn sweedler_twist() {
    let pair = g_in_h4();
    let rel = relative_system(&pair).unwrap();
    let k = &*pair.k;
    assert_eq!(rel.beta().column(1), k.basis(1).neg());
    assert_eq!(rel.chi.get(1), &k.scalar(-1));
    assert!(rel.system.checks().iter().all(|c| c.passed));
}

#[test]
fn improper_pair() {
    let h = preset("taft:3:13").unwrap();
    let id = Matrix::identity(h.field(), h.dim());
    let pair = verify_pair(h.clone(), h.clone(), id).unwrap();
    let rel = relative_system(&pair).unwrap();
    assert!(rel.beta().is_identity());
    let e = rel.system.e_map();
    assert!(e.column(0).scalar_multiple_of(&h.one()).is_some());
    assert!(rel
        .lambda
        .scalar_multiple_of(&h.one())
        .is_some_and(|c| !c.is_zero()));
}

#[test]
fn unit_subalgebra_recovers_f_and_t() {
    let pair = unit_in_h4();
    let rel = relative_system(&pair).unwrap();
    assert_eq!(rel.system.e_map().row(0), pair.profile_h.f);
    assert_eq!(rel.lambda, pair.profile_h.t);
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system).unwrap();
    assert!(der.checks.iter().all(|c| c.passed), "{:?}", der.checks);
    assert_eq!(der.f_map.row(0), pair.profile_h.f);
}

#[test]
fn subgroup_derivative_is_a_unit_scalar() {
    let pair = c3_in_s3();
    let rel = relative_system(&pair).unwrap();
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system).unwrap();
    assert!(!der.scalar.is_zero());
    assert!(der.checks.iter().all(|c| c.passed), "{:?}", der.checks);
    assert!(
        check_norm_identities(&pair, &rel, &der.scalar)
            .unwrap()
            .passed
    );
}

#[test]
fn scaling_the_norm_scales_d() {
    let pair = g_in_h4();
    let rel = relative_system(&pair).unwrap();
    let g = pair.profile_k.f.clone();
    let n = pair.profile_k.t.clone();
    let base = relative_f_from_norm(&pair, &rel, &g, &n).unwrap();
    let two = pair.k.scalar(2);
    let doubled = relative_f_from_norm(&pair, &rel, &g, &n.scale(&two)).unwrap();
    assert_eq!(doubled.scalar, &base.scalar * &two);
    let fe = doubled.checks.iter().find(|c| c.name == "F = E d").unwrap();
    assert!(fe.passed);
    let dcheck = doubled
        .checks
        .iter()
        .find(|c| c.name.starts_with("d = "))
        .unwrap();
    assert!(dcheck.passed);
}

#[test]
fn sweedler_norm_identities_and_mutation() {
    let pair = g_in_h4();
    let rel = relative_system(&pair).unwrap();
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system).unwrap();
    assert!(der.checks.iter().all(|c| c.passed), "{:?}", der.checks);
    assert!(
        check_norm_identities(&pair, &rel, &der.scalar)
            .unwrap()
            .passed
    );

    let mut broken = rel.clone();
    let k = &*pair.k;
    broken.system = unchecked_with_beta(&rel, Matrix::identity(k.field(), k.dim()));
    let res = check_norm_identities(&pair, &broken, &der.scalar).unwrap();
    assert!(!res.passed);
    assert!(res.witness.unwrap().contains("m_H(x) = m_K(beta(x)) at g"));
}

/// The twisted bimodule law rejects `β = Id`, so build the mutant directly.
fn unchecked_with_beta(rel: &RelativeFrobeniusSystem, beta: Matrix) -> RelativeSystem {
    rel.system.clone().with_beta_unchecked(beta).unwrap()
}

#[test]
fn transitivity_over_subgroup() {
    let pair = c3_in_s3();
    let rel = relative_system(&pair).unwrap();
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system).unwrap();
    let (composed, d_prime) = transitive_derivative(&pair, &rel).unwrap();
    assert_eq!(composed.base().dim(), 1);
    assert_eq!(d_prime, pair.h.one().scale(&der.scalar));
}

#[test]
fn transitivity_with_twist() {
    let pair = g_in_h4();
    let rel = relative_system(&pair).unwrap();
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system).unwrap();
    let (composed, d_prime) = transitive_derivative(&pair, &rel).unwrap();
    assert!(composed.checks().iter().all(|c| c.passed));
    assert!(composed.beta().is_identity());
    assert_eq!(d_prime, pair.h.one().scale(&der.scalar));
}

#[test]
fn identity_inner_extension_changes_nothing() {
    let pair = g_in_h4();
    let rel = relative_system(&pair).unwrap();
    let inner = identity_extension(pair.k.clone()).unwrap();
    let composed = compose_transitive(&rel.system, &inner).unwrap();
    assert_eq!(composed.e_map(), rel.system.e_map());
    assert_eq!(composed.beta(), rel.system.beta());
    assert_eq!(composed.xs(), rel.system.xs());
    assert_eq!(composed.ys(), rel.system.ys());
}

#[test]
fn ground_nakayama_matches() {
    for name in ["sweedler4", "group:S3", "truncpoly:3"] {
        let h = preset(name).unwrap();
        let phi = crate::frobenius::find_frobenius_functional(&h).unwrap();
        let sys = crate::frobenius::build_system(h, phi).unwrap();
        assert!(check_ground_nakayama(&sys).passed, "{name}");
    }
}
