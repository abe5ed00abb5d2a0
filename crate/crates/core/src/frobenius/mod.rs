//! Frobenius systems `(φ, x_i, y_i)` with `Σ x_i φ(y_i a) = a = Σ φ(a x_i) y_i`,
//! their Nakayama automorphisms, derivatives and the augmented theory.

mod augmented;
mod symmetry;
mod transform;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use augmented::{integrals_and_norms, left_integrals, right_integrals, AugmentedReport};
pub use symmetry::{symmetric_test, SymmetryReport};
pub use transform::{tensor_system, transform_system, MapKind};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Vector};
use crate::hopf::{Element, Functional, HopfData};

/// Seed for every randomized search; results are reproducible.
pub(crate) const SEARCH_SEED: u64 = 0x5eed_f40b;
pub(crate) const SEARCH_TRIES: usize = 64;

#[derive(Clone, Debug)]
pub struct FrobeniusSystem {
    host: Arc<HopfData>,
    phi: Functional,
    xs: Vec<Element>,
    ys: Vec<Element>,
    gram: Matrix,
    nakayama: Matrix,
}

/// `G[i][j] = φ(e_i e_j)`.
pub fn gram_matrix(h: &HopfData, phi: &Functional) -> Matrix {
    let n = h.dim();
    let mut g = Matrix::zeros(h.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = h.field().zero();
            for (k, m) in h.mul_entries(i, j) {
                acc = acc + m * phi.get(*k);
            }
            g.set(i, j, acc);
        }
    }
    g
}

/// Builds the system with `x_i = e_i` and `y_i` read off `G^{-1}`.
pub fn build_system(host: impl Into<Arc<HopfData>>, phi: Functional) -> Result<FrobeniusSystem> {
    let host = host.into();
    if phi.len() != host.dim() {
        return Err(Error::DimensionMismatch("functional length".into()));
    }
    let gram = gram_matrix(&host, &phi);
    let inv = gram.inverse()?.ok_or(Error::DegenerateFunctional)?;
    let xs = (0..host.dim()).map(|i| host.basis(i)).collect();
    let ys = (0..host.dim()).map(|i| inv.row(i)).collect();
    FrobeniusSystem::assemble(host, phi, xs, ys, gram)
}

impl FrobeniusSystem {
    /// A system from explicit dual bases, verified on every basis element.
    pub fn from_parts(
        host: impl Into<Arc<HopfData>>,
        phi: Functional,
        xs: Vec<Element>,
        ys: Vec<Element>,
    ) -> Result<FrobeniusSystem> {
        let host = host.into();
        if xs.len() != ys.len() {
            return Err(Error::DimensionMismatch(
                "dual bases of unequal length".into(),
            ));
        }
        let gram = gram_matrix(&host, &phi);
        if gram.inverse()?.is_none() {
            return Err(Error::DegenerateFunctional);
        }
        Self::assemble(host, phi, xs, ys, gram)
    }

    fn assemble(
        host: Arc<HopfData>,
        phi: Functional,
        xs: Vec<Element>,
        ys: Vec<Element>,
        gram: Matrix,
    ) -> Result<Self> {
        let mut sys = FrobeniusSystem {
            nakayama: Matrix::identity(host.field(), host.dim()),
            host,
            phi,
            xs,
            ys,
            gram,
        };
        if let Some(w) = sys.dual_bases_failure() {
            return Err(Error::NotFrobenius(format!(
                "dual-bases equation fails at {w}"
            )));
        }
        sys.nakayama = sys.compute_nakayama()?;
        Ok(sys)
    }

    pub fn host(&self) -> &HopfData {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<HopfData> {
        &self.host
    }

    pub fn phi(&self) -> &Functional {
        &self.phi
    }

    pub fn xs(&self) -> &[Element] {
        &self.xs
    }

    pub fn ys(&self) -> &[Element] {
        &self.ys
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn nakayama(&self) -> &Matrix {
        &self.nakayama
    }

    pub fn eval(&self, a: &Element) -> crate::exact::Scalar {
        self.phi.dot(a)
    }

    fn dual_bases_failure(&self) -> Option<String> {
        let h = &*self.host;
        (0..h.dim()).find_map(|j| {
            let a = h.basis(j);
            let mut left = h.zero();
            let mut right = h.zero();
            for (x, y) in self.xs.iter().zip(&self.ys) {
                left.axpy(&self.eval(&h.mul(y, &a)), x);
                right.axpy(&self.eval(&h.mul(&a, x)), y);
            }
            (left != a || right != a).then(|| h.labels()[j].clone())
        })
    }

    /// `α(a) = Σ φ(x_i a) y_i`, checked to be an algebra automorphism with `φ∘α = φ`.
    fn compute_nakayama(&self) -> Result<Matrix> {
        let h = &*self.host;
        let n = h.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                let a = h.basis(j);
                let mut out = h.zero();
                for (x, y) in self.xs.iter().zip(&self.ys) {
                    out.axpy(&self.eval(&h.mul(x, &a)), y);
                }
                out
            })
            .collect();
        let alpha = Matrix::from_columns(h.field(), n, &cols);
        if let Some(w) = algebra_map_failure(h, &alpha) {
            return Err(Error::Internal(format!(
                "Nakayama map is not multiplicative at {w}"
            )));
        }
        if alpha.inverse()?.is_none() {
            return Err(Error::Internal("Nakayama map is singular".into()));
        }
        if (0..n).any(|j| self.eval(&cols[j]) != *self.phi.get(j)) {
            return Err(Error::Internal("phi is not Nakayama-invariant".into()));
        }
        Ok(alpha)
    }

    /// `e = Σ x_i ⊗ y_i`.
    pub fn frobenius_element(&self) -> Matrix {
        let h = &*self.host;
        let mut e = Matrix::zeros(h.field(), h.dim(), h.dim());
        for (x, y) in self.xs.iter().zip(&self.ys) {
            e = e.add(&h.simple_tensor(x, y));
        }
        e
    }

    /// `Σ x_i y_i`.
    pub fn casimir_trace(&self) -> Element {
        let h = &*self.host;
        let mut acc = h.zero();
        for (x, y) in self.xs.iter().zip(&self.ys) {
            acc = acc.add(&h.mul(x, y));
        }
        acc
    }

    /// `Σ x_i a y_i`, the averaging map applied to `a`.
    pub fn average(&self, a: &Element) -> Element {
        let h = &*self.host;
        let mut acc = h.zero();
        for (x, y) in self.xs.iter().zip(&self.ys) {
            acc = acc.add(&h.mul3(x, a, y));
        }
        acc
    }

    /// The system `(φ d, x_i, d^{-1} y_i)` for invertible `d`, i.e. `b ↦ φ(d b)`.
    pub fn rescale(&self, d: &Element) -> Result<FrobeniusSystem> {
        let h = &*self.host;
        let dinv = h.inverse_element(d).ok_or(Error::NotInvertible)?;
        let phi = h.functional_right(&self.phi, d);
        let ys = self.ys.iter().map(|y| h.mul(&dinv, y)).collect();
        Self::from_parts(self.host.clone(), phi, self.xs.clone(), ys)
    }

    /// Structural checks every system satisfies: dual bases, Casimir property,
    /// central `Σ x_i y_i`, and the exchange identity
    /// `Σ x_i a ⊗ y_i = Σ x_i ⊗ α(a) y_i`.
    pub fn structural_checks(&self) -> Vec<crate::check::CheckResult> {
        use crate::check::CheckResult;
        let h = &*self.host;
        let n = h.dim();
        let e = self.frobenius_element();
        let label = |j: usize| h.labels()[j].clone();
        let casimir = (0..n).find(|&j| {
            let a = h.basis(j);
            let one = h.one();
            h.tensor_mul(&h.simple_tensor(&a, &one), &e)
                != h.tensor_mul(&e, &h.simple_tensor(&one, &a))
        });
        let c = self.casimir_trace();
        let exchange = (0..n).find(|&j| {
            let a = h.basis(j);
            let alpha_a = self.nakayama.column(j);
            let mut lhs = Matrix::zeros(h.field(), n, n);
            let mut rhs = Matrix::zeros(h.field(), n, n);
            for (x, y) in self.xs.iter().zip(&self.ys) {
                lhs = lhs.add(&h.simple_tensor(&h.mul(x, &a), y));
                rhs = rhs.add(&h.simple_tensor(x, &h.mul(&alpha_a, y)));
            }
            lhs != rhs
        });
        vec![
            CheckResult::from_witness("dual bases", self.dual_bases_failure()),
            CheckResult::from_witness("casimir", casimir.map(label)),
            CheckResult::from_bool("central casimir trace", h.is_central(&c), || {
                h.format_element(&c)
            }),
            CheckResult::from_witness("exchange", exchange.map(label)),
            CheckResult::from_witness(
                "nakayama multiplicative",
                algebra_map_failure(h, &self.nakayama),
            ),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr {
            phi: Vec<String>,
            xs: Vec<Vec<String>>,
            ys: Vec<Vec<String>>,
        }
        let strs = |v: &Vector| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        serde_json::to_value(Repr {
            phi: strs(&self.phi),
            xs: self.xs.iter().map(strs).collect(),
            ys: self.ys.iter().map(strs).collect(),
        })
        .expect("system serialization")
    }
}

/// First basis pair at which `θ(ab) ≠ θ(a)θ(b)` (or `θ(1) ≠ 1`).
pub(crate) fn algebra_map_failure(h: &HopfData, theta: &Matrix) -> Option<String> {
    if theta.apply(h.unit()) != *h.unit() {
        return Some("1".into());
    }
    let n = h.dim();
    (0..n * n).find_map(|ij| {
        let (i, j) = (ij / n, ij % n);
        let lhs = theta.apply(&h.mul(&h.basis(i), &h.basis(j)));
        let rhs = h.mul(&theta.column(i), &theta.column(j));
        (lhs != rhs).then(|| format!("({}, {})", h.labels()[i], h.labels()[j]))
    })
}

/// Like [`algebra_map_failure`] for `θ(ab) = θ(b)θ(a)`.
pub(crate) fn anti_map_failure(h: &HopfData, theta: &Matrix) -> Option<String> {
    if theta.apply(h.unit()) != *h.unit() {
        return Some("1".into());
    }
    let n = h.dim();
    (0..n * n).find_map(|ij| {
        let (i, j) = (ij / n, ij % n);
        let lhs = theta.apply(&h.mul(&h.basis(i), &h.basis(j)));
        let rhs = h.mul(&theta.column(j), &theta.column(i));
        (lhs != rhs).then(|| format!("({}, {})", h.labels()[i], h.labels()[j]))
    })
}

/// Searches a span for a vector satisfying `pred`: basis vectors first, then
/// seeded random small-integer combinations.
pub(crate) fn search_span(
    basis: &[Vector],
    mut pred: impl FnMut(&Vector) -> bool,
) -> Option<Vector> {
    if let Some(v) = basis.iter().find(|v| pred(v)) {
        return Some(v.clone());
    }
    let first = basis.first()?;
    let field = first.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for _ in 0..SEARCH_TRIES {
        let mut v = Vector::zeros(field, first.len());
        for b in basis {
            v.axpy(&field.from_int(rng.gen_range(-3..=3)), b);
        }
        if pred(&v) {
            return Some(v);
        }
    }
    None
}

/// The host's preferred Frobenius functional, else the first nondegenerate
/// functional found by [`search_span`] over the dual basis.
pub fn find_frobenius_functional(h: &HopfData) -> Result<Functional> {
    if let Some(phi) = h.frobenius_hint() {
        return Ok(phi.clone());
    }
    let duals: Vec<Vector> = (0..h.dim()).map(|i| h.basis(i)).collect();
    search_span(&duals, |phi| gram_matrix(h, phi).rank() == h.dim())
        .ok_or_else(|| Error::NotFrobenius("no nondegenerate functional found".into()))
}

/// `ψ = d φ` (that is `ψ(b) = φ(b d)`) together with the right derivative
/// `ψ = φ d'` (`ψ(b) = φ(d' b)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivative {
    pub left: Element,
    pub right: Element,
}

pub fn derivative(sys1: &FrobeniusSystem, sys2: &FrobeniusSystem) -> Result<Derivative> {
    let h = sys1.host();
    if h != sys2.host() {
        return Err(Error::DimensionMismatch(
            "derivative across different hosts".into(),
        ));
    }
    let solve = |m: &Matrix| -> Result<Element> {
        m.solve(sys2.phi())?
            .ok_or_else(|| Error::Internal("derivative system is inconsistent".into()))
    };
    let left = solve(sys1.gram())?;
    let right = solve(&sys1.gram().transpose())?;
    for d in [&left, &right] {
        let inv = h
            .inverse_element(d)
            .ok_or_else(|| Error::Internal("derivative is not invertible".into()))?;
        if h.mul(&inv, d) != h.one() || h.mul(d, &inv) != h.one() {
            return Err(Error::Internal("derivative inverse is one-sided".into()));
        }
    }
    Ok(Derivative { left, right })
}

/// Solves `Σ x_i a y_i = 1`; a solution exists iff the algebra is separable.
pub fn separability_element(sys: &FrobeniusSystem) -> Result<Option<Element>> {
    let h = sys.host();
    let cols: Vec<Vector> = (0..h.dim()).map(|j| sys.average(&h.basis(j))).collect();
    Matrix::from_columns(h.field(), h.dim(), &cols).solve(h.unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::exact::Field;

    fn trace_system(name: &str) -> FrobeniusSystem {
        let h = preset(name).unwrap();
        let phi = h.basis(0);
        build_system(h, phi).unwrap()
    }

    #[test]
    fn truncpoly_dual_bases_reverse_powers() {
        let h = preset("truncpoly:4").unwrap();
        let phi = h.frobenius_hint().unwrap().clone();
        let sys = build_system(h.clone(), phi).unwrap();
        for i in 0..4 {
            assert_eq!(sys.xs()[i], h.basis(i));
            assert_eq!(sys.ys()[i], h.basis(3 - i));
        }
        assert!(sys.nakayama().is_identity());
    }

    #[test]
    fn group_trace_form_pairs_inverses() {
        let sys = trace_system("group:C2");
        let h = sys.host();
        assert_eq!(sys.ys()[1], h.basis(1));
        let s3 = trace_system("group:S3");
        let h = s3.host();
        for (i, y) in s3.ys().iter().enumerate() {
            assert_eq!(h.mul(&h.basis(i), y), h.one());
        }
    }

    #[test]
    fn counit_is_degenerate_on_c2() {
        let h = preset("group:C2").unwrap();
        let eps = h.counit().unwrap().clone();
        assert!(matches!(
            build_system(h, eps),
            Err(Error::DegenerateFunctional)
        ));
    }

    #[test]
    fn from_parts_rejects_wrong_dual_bases() {
        let sys = trace_system("group:C2");
        let mut ys = sys.ys().to_vec();
        ys.swap(0, 1);
        let err = FrobeniusSystem::from_parts(
            sys.host_arc().clone(),
            sys.phi().clone(),
            sys.xs().to_vec(),
            ys,
        );
        assert!(matches!(err, Err(Error::NotFrobenius(_))));
    }

    #[test]
    fn structural_identities_hold() {
        for name in ["sweedler4", "group:S3", "truncpoly:3", "taft:3:13"] {
            let h = preset(name).unwrap();
            let phi = find_frobenius_functional(&h).unwrap();
            let sys = build_system(h, phi).unwrap();
            for c in sys.structural_checks() {
                assert!(c.passed, "{name}: {c}");
            }
        }
    }

    #[test]
    fn sweedler_nakayama_from_integral_functional() {
        let h = preset("sweedler4").unwrap();
        // the right integral of H* is the functional dual to x
        let sys = build_system(h.clone(), h.basis(2)).unwrap();
        let alpha = sys.nakayama();
        assert_eq!(alpha.column(1), h.basis(1).neg());
        assert_eq!(alpha.column(2), h.basis(2));
    }

    #[test]
    fn rescaling_by_central_element_keeps_nakayama() {
        let sys = trace_system("group:S3");
        let h = sys.host();
        let two = h.one().scale(&h.scalar(2));
        let r = sys.rescale(&two).unwrap();
        assert_eq!(r.nakayama(), sys.nakayama());
        let d = derivative(&sys, &r).unwrap();
        assert_eq!(d.left, two);
        assert_eq!(d.right, two);
        assert_eq!(derivative(&sys, &sys).unwrap().left, h.one());
    }

    #[test]
    fn rescaling_conjugates_nakayama() {
        let h = preset("sweedler4").unwrap();
        let sys = build_system(h.clone(), h.basis(2)).unwrap();
        let d = h.basis(1).add(&h.basis(2));
        let r = sys.rescale(&d).unwrap();
        let dinv = h.inverse_element(&d).unwrap();
        for j in 0..h.dim() {
            let expected = h.mul3(&dinv, &sys.nakayama().column(j), &d);
            assert_eq!(r.nakayama().column(j), expected);
        }
    }

    #[test]
    fn separability() {
        let sys = trace_system("group:C2");
        let h = sys.host();
        let a = separability_element(&sys).unwrap().unwrap();
        assert_eq!(a, h.one().scale(&Field::Rational.fraction(1, 2).unwrap()));

        let c2 = preset("group:C2").unwrap();
        let spec = crate::catalog::AlgebraSpec {
            field: Field::prime(2).unwrap(),
            ..crate::catalog::AlgebraSpec::from_hopf(&c2)
        };
        let f2 = spec.build().unwrap();
        let sys = build_system(f2.clone(), f2.basis(0)).unwrap();
        assert_eq!(separability_element(&sys).unwrap(), None);

        let t = preset("truncpoly:2").unwrap();
        let sys = build_system(t.clone(), t.basis(1)).unwrap();
        assert_eq!(separability_element(&sys).unwrap(), None);
    }

    #[test]
    fn functional_search_without_hint() {
        let h = preset("group:S3").unwrap();
        let phi = find_frobenius_functional(&h).unwrap();
        assert!(build_system(h, phi).is_ok());
    }

    #[test]
    fn system_json_shape() {
        let sys = trace_system("group:C2");
        let j = sys.to_json();
        assert_eq!(j["phi"], serde_json::json!(["1", "0"]));
        assert_eq!(j["ys"][1], serde_json::json!(["0", "1"]));
    }
}
