//! Three independent symmetry criteria, cross-checked against each other.

use super::{search_span, FrobeniusSystem};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Vector};
use crate::hopf::{Element, HopfData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    /// Invertible `d` with `b ↦ φ(d b)` a trace.
    pub trace_rescaling: Option<Element>,
    /// Invertible `d` with `α(a) = d^{-1} a d`.
    pub inner_nakayama: Option<Element>,
    /// Invertible `c` with `Σ x_i ⊗ c y_i` fixed by the flip.
    pub symmetric_element: Option<Element>,
}

/// Solution space of a homogeneous system whose `l`-th unknown contributes
/// `column(l)`.
fn solution_space(h: &HopfData, column: impl Fn(&Element) -> Vector) -> Vec<Element> {
    let cols: Vec<Vector> = (0..h.dim()).map(|l| column(&h.basis(l))).collect();
    let rows = cols.first().map_or(0, Vector::len);
    Matrix::from_columns(h.field(), rows, &cols).kernel_basis()
}

fn invertible_in(h: &HopfData, space: &[Element]) -> Option<Element> {
    search_span(space, |d| h.inverse_element(d).is_some())
}

pub fn symmetric_test(sys: &FrobeniusSystem) -> Result<SymmetryReport> {
    let h = sys.host();
    let n = h.dim();
    let alpha = sys.nakayama();

    let trace_space = solution_space(h, |d| {
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (ea, eb) = (h.basis(a), h.basis(b));
                let commutator = h.mul(&ea, &eb).sub(&h.mul(&eb, &ea));
                out.push(sys.eval(&h.mul(d, &commutator)));
            }
        }
        Vector::new(h.field(), out)
    });
    let inner_space = solution_space(h, |d| {
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            let diff = h.mul(d, &alpha.column(a)).sub(&h.mul(&h.basis(a), d));
            out.extend(diff.into_vec());
        }
        Vector::new(h.field(), out)
    });
    let element_space = solution_space(h, |c| {
        let mut e = Matrix::zeros(h.field(), n, n);
        for (x, y) in sys.xs().iter().zip(sys.ys()) {
            e = e.add(&h.simple_tensor(x, &h.mul(c, y)));
        }
        e.sub(&e.transpose()).flatten()
    });

    let trace_rescaling = invertible_in(h, &trace_space);
    let inner_nakayama = invertible_in(h, &inner_space);
    let symmetric_element = invertible_in(h, &element_space);
    let flags = [&trace_rescaling, &inner_nakayama, &symmetric_element].map(Option::is_some);
    if flags.iter().any(|&f| f != flags[0]) {
        return Err(Error::Internal(format!(
            "symmetry criteria disagree (trace {}, inner {}, element {})",
            flags[0], flags[1], flags[2]
        )));
    }
    Ok(SymmetryReport {
        symmetric: flags[0],
        trace_rescaling,
        inner_nakayama,
        symmetric_element,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::frobenius::{build_system, find_frobenius_functional};

    fn test(name: &str) -> (HopfData, SymmetryReport) {
        let h = preset(name).unwrap();
        let phi = find_frobenius_functional(&h).unwrap();
        let r = symmetric_test(&build_system(h.clone(), phi).unwrap()).unwrap();
        (h, r)
    }

    #[test]
    fn truncpoly_is_symmetric_with_unit_witness() {
        for n in 2..=5 {
            let (h, r) = test(&format!("truncpoly:{n}"));
            assert!(r.symmetric);
            assert_eq!(r.trace_rescaling, Some(h.one()));
        }
    }

    #[test]
    fn sweedler_is_not_symmetric() {
        let (_, r) = test("sweedler4");
        assert!(!r.symmetric);
        assert_eq!(r.inner_nakayama, None);
    }

    #[test]
    fn group_algebras_are_symmetric() {
        for name in ["group:S3", "group:Q8", "group:D4"] {
            assert!(test(name).1.symmetric, "{name}");
        }
    }

    #[test]
    fn witnesses_are_genuine() {
        let h = preset("group:S3").unwrap();
        // a non-trace functional, so the rescaling is nontrivial
        let phi = Vector::from_ints(h.field(), &[1, 2, 0, 0, 0, 0]);
        let sys = build_system(h.clone(), phi).unwrap();
        let r = symmetric_test(&sys).unwrap();
        let d = r.trace_rescaling.unwrap();
        let psi = h.functional_right(sys.phi(), &d);
        for a in 0..6 {
            for b in 0..6 {
                let (ea, eb) = (h.basis(a), h.basis(b));
                assert_eq!(psi.dot(&h.mul(&ea, &eb)), psi.dot(&h.mul(&eb, &ea)));
            }
        }
    }
}
