//! Library results against structure written out by hand.

use fhalg::catalog::{preset, AlgebraSpec};
use fhalg::exact::{Field, Vector};
use fhalg::fh::fh_profile;
use fhalg::frobenius::right_integrals;
use fhalg::hopf::{dual_hopf, HopfData};

/// H₄ on `1, g, x, gx` from `g² = 1`, `x² = 0`, `xg = -gx`.
fn hand_sweedler() -> HopfData {
    let q = Field::Rational;
    // word (a, b) = g^a x^b; product of g^a x^b and g^c x^d is (-1)^{bc} g^{a+c} x^{b+d}
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut triples = Vec::new();
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d > 1 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            triples.push((
                idx(a, b),
                idx(c, d),
                idx((a + c) % 2, b + d),
                q.from_int(sign),
            ));
        }
    }
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let one = Vector::from_ints(q, &[1, 0, 0, 0]);
    // Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
    let comul = vec![
        (0, 0, 0, q.one()),
        (1, 1, 1, q.one()),
        (2, 2, 0, q.one()),
        (2, 1, 2, q.one()),
        (3, 3, 1, q.one()),
        (3, 0, 3, q.one()),
    ];
    // S(g) = g, S(x) = -gx, S(gx) = x
    let s = fhalg::exact::Matrix::from_int_rows(
        q,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
    );
    HopfData::from_mul_triples(q, labels, one, triples)
        .unwrap()
        .with_counit(Vector::from_ints(q, &[1, 1, 0, 0]))
        .unwrap()
        .with_comul_triples(comul)
        .unwrap()
        .with_antipode(s)
        .unwrap()
}

#[test]
fn sweedler_preset_matches_hand_tables() {
    let hand = hand_sweedler();
    let lib = preset("sweedler4").unwrap();
    let strip = |h: &HopfData| {
        let mut spec = AlgebraSpec::from_hopf(h);
        spec.frobenius = None;
        spec
    };
    assert_eq!(strip(&hand), strip(&lib));
}

#[test]
fn sweedler_integrals_and_modular_function() {
    let h = hand_sweedler();
    // t = x - gx: t g = x g - g x g = -gx + x = t, g t = gx - x = -t.
    let q = h.field();
    let t = Vector::from_ints(q, &[0, 0, 1, -1]);
    let space = right_integrals(&h).unwrap();
    assert_eq!(space.len(), 1);
    assert!(space[0].scalar_multiple_of(&t).is_some());

    let p = fh_profile(h.clone()).unwrap();
    assert!(p.t.scalar_multiple_of(&t).is_some());
    assert_eq!(p.m, Vector::from_ints(q, &[1, -1, 0, 0]));
    assert_eq!(p.b, h.basis(1));
    assert_eq!(p.orders.antipode, 4);
    assert_eq!(p.orders.eta, 2);
    assert!(!p.flags.unimodular && !p.flags.counimodular && !p.flags.involutive);

    // the right integrals of H₄* are spanned by x*
    let dual = dual_hopf(&h).unwrap();
    let space = right_integrals(&dual).unwrap();
    assert_eq!(space.len(), 1);
    assert!(space[0].scalar_multiple_of(&h.basis(2)).is_some());
}

#[test]
fn cyclic_group_integral_is_the_sum() {
    for n in [2usize, 3, 5] {
        let h = preset(&format!("group:C{n}")).unwrap();
        let p = fh_profile(h.clone()).unwrap();
        let sum = Vector::from_ints(h.field(), &vec![1; n]);
        assert!(p.t.scalar_multiple_of(&sum).is_some());
        assert!(
            p.flags.unimodular && p.flags.separable && p.flags.coseparable && p.flags.symmetric
        );
        assert_eq!(p.orders.antipode, if n == 2 { 1 } else { 2 });
    }
}

#[test]
fn taft_antipode_has_order_twice_n() {
    let p = fh_profile(preset("taft:3:13").unwrap()).unwrap();
    assert_eq!(p.orders.antipode, 6);
    assert_eq!(p.orders.b, 3);
    assert!(!p.antipode.pow(4).unwrap().is_identity());
}

#[test]
fn truncated_polynomial_norm_is_top_power() {
    use fhalg::frobenius::{build_system, find_frobenius_functional, integrals_and_norms};
    for n in 2..=5usize {
        let h = preset(&format!("truncpoly:{n}")).unwrap();
        let sys = build_system(h.clone(), find_frobenius_functional(&h).unwrap()).unwrap();
        let aug = integrals_and_norms(&sys).unwrap();
        assert_eq!(aug.right_norm, h.basis(n - 1));
        assert!(aug.unimodular);
    }
}
