//! Convolution of linear maps `H → H` and the harpoon actions of `H*`.

use super::{Element, Functional, HopfData};
use crate::error::Result;
use crate::exact::{Matrix, Vector};

/// Which harpoon: `Left` is `g ⇀ a = Σ a_1 g(a_2)`, `Right` is
/// `a ↼ g = Σ g(a_1) a_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn act(h: &HopfData, g: &Functional, a: &Element, side: Side) -> Result<Element> {
    match side {
        Side::Left => h.act_left(g, a),
        Side::Right => h.act_right(a, g),
    }
}

/// `(G * F)(a) = Σ G(a_1) F(a_2)`.
pub fn convolve_maps(h: &HopfData, g: &Matrix, f: &Matrix) -> Result<Matrix> {
    let n = h.dim();
    let comul = h.require_comul()?;
    let mut cols = Vec::with_capacity(n);
    for terms in comul {
        let mut acc = h.zero();
        for (j, k, c) in terms {
            acc.axpy(c, &h.mul(&g.column(*j), &f.column(*k)));
        }
        cols.push(acc);
    }
    Ok(Matrix::from_columns(h.field(), n, &cols))
}

/// The map `a ↦ ε(a) 1`, the unit of the convolution algebra.
pub fn convolution_unit(h: &HopfData) -> Result<Matrix> {
    let eps = h.require_counit()?;
    let n = h.dim();
    let cols: Vec<Vector> = (0..n).map(|i| h.unit().scale(eps.get(i))).collect();
    Ok(Matrix::from_columns(h.field(), n, &cols))
}

/// Solves `G * F = u ε` for `G` as an `n²`-unknown linear system, then
/// accepts `G` only if `F * G = u ε` as well.
pub fn convolution_inverse(h: &HopfData, f: &Matrix) -> Result<Option<Matrix>> {
    let n = h.dim();
    let field = h.field();
    let comul = h.require_comul()?;
    let eps = h.require_counit()?;
    // unknown G[p][j] at column p * n + j; equation (i, s) at row i * n + s
    let mut a = Matrix::zeros(field, n * n, n * n);
    let mut rhs = Vector::zeros(field, n * n);
    for (i, terms) in comul.iter().enumerate() {
        for (j, k, c) in terms {
            let y = f.column(*k).scale(c);
            for p in 0..n {
                let w = h.mul(&h.basis(p), &y);
                for (s, ws) in w.nonzeros() {
                    a.add_at(i * n + s, p * n + j, ws);
                }
            }
        }
        for (s, u) in h.unit().nonzeros() {
            rhs.set(i * n + s, eps.get(i) * u);
        }
    }
    let Some(sol) = a.solve(&rhs)? else {
        return Ok(None);
    };
    let g = Matrix::from_flat(n, n, &sol);
    let unit = convolution_unit(h)?;
    Ok((convolve_maps(h, f, &g)? == unit).then_some(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{monoid_bialgebra, preset};

    #[test]
    fn antipode_of_c2_is_identity_on_group_elements() {
        let h = preset("group:C2").unwrap();
        let id = Matrix::identity(h.field(), 2);
        assert_eq!(convolution_inverse(&h, &id).unwrap().unwrap(), id);
    }

    #[test]
    fn stored_antipodes_agree_with_convolution_inverse() {
        for name in [
            "sweedler4",
            "group:S3",
            "group:Q8",
            "taft:3:13",
            "dual-group:S3",
        ] {
            let h = preset(name).unwrap();
            let id = Matrix::identity(h.field(), h.dim());
            let s = convolution_inverse(&h, &id).unwrap().unwrap();
            assert_eq!(&s, h.antipode().unwrap(), "{name}");
            let unit = convolution_unit(&h).unwrap();
            assert_eq!(convolve_maps(&h, &s, &id).unwrap(), unit);
            assert_eq!(convolve_maps(&h, &id, &s).unwrap(), unit);
        }
    }

    #[test]
    fn sweedler_antipode_values() {
        let h = preset("sweedler4").unwrap();
        let s = convolution_inverse(&h, &Matrix::identity(h.field(), 4))
            .unwrap()
            .unwrap();
        assert_eq!(s.column(1), h.basis(1));
        assert_eq!(s.column(2), h.basis(3).neg());
    }

    #[test]
    fn idempotent_monoid_has_no_antipode() {
        let h = monoid_bialgebra();
        let id = Matrix::identity(h.field(), 2);
        assert_eq!(convolution_inverse(&h, &id).unwrap(), None);
    }

    #[test]
    fn counit_is_the_convolution_unit() {
        let h = preset("dual-group:S3").unwrap();
        let eps = h.counit().unwrap().clone();
        for i in 0..h.dim() {
            let f = h.basis(i);
            assert_eq!(h.convolve(&eps, &f).unwrap(), f);
            assert_eq!(h.convolve(&f, &eps).unwrap(), f);
        }
    }

    #[test]
    fn act_dispatches_by_side() {
        let h = preset("sweedler4").unwrap();
        // the character g -> -1, x -> 0
        let m = Vector::from_ints(h.field(), &[1, -1, 0, 0]);
        let g = h.basis(1);
        assert_eq!(act(&h, &m, &g, Side::Right).unwrap(), g.neg());
        assert_eq!(act(&h, &m, &g, Side::Left).unwrap(), g.neg());
    }
}
