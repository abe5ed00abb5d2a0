//! Dual, opposite/co-opposite and tensor-product constructions.

use super::{HopfData, Level};
use crate::error::{Error, Result};

/// Which structure maps a [`variant`] reverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

/// The dual `H*`: multiplication is the transposed comultiplication and
/// vice versa, the unit is `ε`, the counit is evaluation at `1`, and the
/// antipode is the transpose of `S`. Applying it twice returns the
/// original tensors under the identification `H ≅ H**`, `x ↦ ev_x`.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData> {
    let n = h.dim();
    let eps = h.require_counit()?.clone();
    let comul = h.require_comul()?;
    let mul_triples = comul
        .iter()
        .enumerate()
        .flat_map(|(i, terms)| terms.iter().map(move |(j, k, c)| (*j, *k, i, c.clone())))
        .collect::<Vec<_>>();
    let comul_triples = (0..n * n)
        .flat_map(|ij| {
            h.mul_entries(ij / n, ij % n)
                .iter()
                .map(move |(k, m)| (*k, ij / n, ij % n, m.clone()))
        })
        .collect::<Vec<_>>();
    let labels = h.labels().iter().map(|l| dual_label(l)).collect();
    let mut d = HopfData::from_mul_triples(h.field(), labels, eps, mul_triples)?
        .with_counit(h.unit().clone())?
        .with_comul_triples(comul_triples)?;
    if let Some(s) = h.antipode() {
        d = d.with_antipode(s.transpose())?;
    }
    d.with_level(h.level().max(Level::Bialgebra))
}

/// `op` reverses the factors of multiplication, `cop` those of
/// comultiplication. The antipode of a one-sided variant is `S^{-1}`.
pub fn variant(h: &HopfData, which: Variant) -> Result<HopfData> {
    let n = h.dim();
    let flip_mul = matches!(which, Variant::Op | Variant::OpCop);
    let flip_comul = matches!(which, Variant::Cop | Variant::OpCop);
    let mul_triples = (0..n * n)
        .flat_map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let (a, b) = if flip_mul { (j, i) } else { (i, j) };
            h.mul_entries(a, b)
                .iter()
                .map(move |(k, m)| (i, j, *k, m.clone()))
        })
        .collect::<Vec<_>>();
    let mut out = HopfData::from_mul_triples(h.field(), h.labels().to_vec(), h.one(), mul_triples)?;
    if let Some(eps) = h.counit() {
        out = out.with_counit(eps.clone())?;
    }
    if h.has_comul() {
        let triples = (0..n)
            .flat_map(|i| {
                h.comul_entries(i).iter().map(move |(j, k, c)| {
                    if flip_comul {
                        (i, *k, *j, c.clone())
                    } else {
                        (i, *j, *k, c.clone())
                    }
                })
            })
            .collect::<Vec<_>>();
        out = out.with_comul_triples(triples)?;
    }
    if let Some(s) = h.antipode() {
        let antipode = match which {
            Variant::OpCop => s.clone(),
            _ => h.antipode_inverse().ok_or(Error::NotInvertible)?.clone(),
        };
        out = out.with_antipode(antipode)?;
    }
    if let Some(phi) = h.frobenius_hint() {
        out = out.with_frobenius_hint(phi.clone())?;
    }
    out.with_level(h.level())
}

/// `A ⊗ B` with basis `e_i ⊗ f_j` at index `i * dim B + j`.
pub fn tensor_algebra(a: &HopfData, b: &HopfData) -> Result<HopfData> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch("tensor factors".into()));
    }
    let (na, nb) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * nb + j;
    let mut labels = Vec::with_capacity(na * nb);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("{la}⊗{lb}"));
        }
    }
    let unit = a.unit().kron_vec(b.unit());
    let mut mul_triples = Vec::new();
    for i in 0..na {
        for k in 0..na {
            for (p, x) in a.mul_entries(i, k) {
                for j in 0..nb {
                    for l in 0..nb {
                        for (q, y) in b.mul_entries(j, l) {
                            mul_triples.push((idx(i, j), idx(k, l), idx(*p, *q), x * y));
                        }
                    }
                }
            }
        }
    }
    let mut out = HopfData::from_mul_triples(a.field(), labels, unit, mul_triples)?;
    if let (Some(ea), Some(eb)) = (a.counit(), b.counit()) {
        out = out.with_counit(ea.kron_vec(eb))?;
    }
    if a.has_comul() && b.has_comul() {
        let mut triples = Vec::new();
        for i in 0..na {
            for (p, r, x) in a.comul_entries(i) {
                for j in 0..nb {
                    for (q, s, y) in b.comul_entries(j) {
                        triples.push((idx(i, j), idx(*p, *q), idx(*r, *s), x * y));
                    }
                }
            }
        }
        out = out.with_comul_triples(triples)?;
    }
    if let (Some(sa), Some(sb)) = (a.antipode(), b.antipode()) {
        out = out.with_antipode(sa.kron(sb))?;
    }
    if let (Some(pa), Some(pb)) = (a.frobenius_hint(), b.frobenius_hint()) {
        out = out.with_frobenius_hint(pa.kron_vec(pb))?;
    }
    out.with_level(a.level().min(b.level()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::hopf::verify_axioms;

    #[test]
    fn double_dual_is_identity() {
        for name in ["sweedler4", "group:S3", "taft:3:13"] {
            let h = preset(name).unwrap();
            let dd = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
            assert_eq!(dd, h, "{name}");
        }
    }

    #[test]
    fn duals_pass_axioms() {
        for name in ["sweedler4", "group:C2", "group:Q8"] {
            let d = dual_hopf(&preset(name).unwrap()).unwrap();
            assert!(verify_axioms(&d).passes(), "{name}");
        }
    }

    #[test]
    fn dual_of_c2_is_function_algebra() {
        let d = dual_hopf(&preset("group:C2").unwrap()).unwrap();
        assert!(d.is_commutative());
        // dual basis vectors are orthogonal idempotents summing to 1
        let (p0, p1) = (d.basis(0), d.basis(1));
        assert_eq!(d.mul(&p0, &p0), p0);
        assert!(d.mul(&p0, &p1).is_zero());
        assert_eq!(p0.add(&p1), d.one());
    }

    #[test]
    fn op_of_commutative_is_unchanged() {
        let h = preset("group:C2").unwrap();
        assert_eq!(variant(&h, Variant::Op).unwrap(), h);
    }

    #[test]
    fn cop_is_an_involution() {
        let h = preset("sweedler4").unwrap();
        let cc = variant(&variant(&h, Variant::Cop).unwrap(), Variant::Cop).unwrap();
        assert_eq!(cc, h);
        assert!(verify_axioms(&variant(&h, Variant::OpCop).unwrap()).passes());
        assert!(verify_axioms(&variant(&h, Variant::Op).unwrap()).passes());
    }

    #[test]
    fn tensor_of_c2_matches_klein_four() {
        let c2 = preset("group:C2").unwrap();
        let t = tensor_algebra(&c2, &c2).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(verify_axioms(&t).passes());
        // every basis element is an involutive group-like, as in C2 x C2
        for i in 0..4 {
            let g = t.basis(i);
            assert!(t.is_group_like(&g).unwrap());
            assert_eq!(t.mul(&g, &g), t.one());
        }
        assert!(t.is_commutative());
    }
}
