//! Structure-constant representation of algebras, bialgebras and Hopf
//! algebras, together with the operations every other module builds on.
//!
//! Multiplication is stored as `e_i e_j = Σ_k m[i][j][k] e_k` and
//! comultiplication as `Δ(e_i) = Σ_{j,k} c[i][j][k] e_j ⊗ e_k`, both sparse
//! and sorted so that equal structures compare equal. Elements of `H ⊗ H` are
//! `dim × dim` matrices whose `(j, k)` entry is the coefficient of
//! `e_j ⊗ e_k`; linear maps are matrices whose `j`-th column is the image of
//! `e_j`.

mod axioms;
mod constructions;
mod convolution;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use axioms::{verify_axioms, AxiomReport};
pub use constructions::{dual_hopf, tensor_algebra, variant, Variant};
pub use convolution::{act, convolution_inverse, Side};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Vector};

/// An element of the algebra, in coordinates over its basis.
pub type Element = Vector;
/// A linear functional, in coordinates over the dual basis.
pub type Functional = Vector;

pub(crate) type SparseVec = Vec<(usize, Scalar)>;
pub(crate) type SparseTensor = Vec<(usize, usize, Scalar)>;

/// How much structure a value claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Algebra,
    AugmentedAlgebra,
    Bialgebra,
    Hopf,
}

impl Level {
    pub fn as_str(&self) -> &'static str {
        match self {
            Level::Algebra => "algebra",
            Level::AugmentedAlgebra => "augmented-algebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    unit: Vector,
    mul: Vec<SparseVec>,
    comul: Option<Vec<SparseTensor>>,
    counit: Option<Vector>,
    antipode: Option<Matrix>,
    antipode_inv: Option<Matrix>,
    frobenius_hint: Option<Vector>,
    level: Level,
}

fn sparse_from_map<K: Ord + Copy>(map: BTreeMap<K, Scalar>) -> Vec<(K, Scalar)> {
    map.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

impl HopfData {
    /// An algebra from multiplication triples `(i, j, k, m[i][j][k])`.
    /// Repeated triples accumulate.
    pub fn from_mul_triples(
        field: Field,
        labels: Vec<String>,
        unit: Vector,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "dimension must be positive".into(),
            ));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {} but dim is {dim}",
                unit.len()
            )));
        }
        if unit.field() != field {
            return Err(Error::FieldMismatch("unit".into()));
        }
        let mut maps: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * dim];
        for (i, j, k, s) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "mul index ({i}, {j}, {k}) with dim {dim}"
                )));
            }
            if s.field() != field {
                return Err(Error::FieldMismatch("mul entry".into()));
            }
            let e = maps[i * dim + j].entry(k).or_insert_with(|| field.zero());
            *e = &*e + &s;
        }
        Ok(HopfData {
            field,
            dim,
            labels,
            unit,
            mul: maps.into_iter().map(sparse_from_map).collect(),
            comul: None,
            counit: None,
            antipode: None,
            antipode_inv: None,
            frobenius_hint: None,
            level: Level::Algebra,
        })
    }

    /// An algebra from dense products: `products[i * dim + j] = e_i e_j`.
    pub fn from_products(
        field: Field,
        labels: Vec<String>,
        unit: Vector,
        products: &[Vector],
    ) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch("product table size".into()));
        }
        let triples = products.iter().enumerate().flat_map(|(ij, v)| {
            v.nonzeros()
                .map(move |(k, s)| (ij / dim, ij % dim, k, s.clone()))
                .collect::<Vec<_>>()
        });
        Self::from_mul_triples(field, labels, unit, triples)
    }

    pub fn with_counit(mut self, counit: Vector) -> Result<Self> {
        if counit.len() != self.dim || counit.field() != self.field {
            return Err(Error::DimensionMismatch("counit".into()));
        }
        self.counit = Some(counit);
        self.level = self.level.max(Level::AugmentedAlgebra);
        Ok(self)
    }

    /// Comultiplication triples `(i, j, k, c[i][j][k])`; requires a counit.
    pub fn with_comul_triples(
        mut self,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        if self.counit.is_none() {
            return Err(Error::MissingStructure(
                "counit (required with comultiplication)",
            ));
        }
        let dim = self.dim;
        let mut maps: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); dim];
        for (i, j, k, s) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "comul index ({i}, {j}, {k}) with dim {dim}"
                )));
            }
            if s.field() != self.field {
                return Err(Error::FieldMismatch("comul entry".into()));
            }
            let e = maps[i].entry((j, k)).or_insert_with(|| self.field.zero());
            *e = &*e + &s;
        }
        self.comul = Some(
            maps.into_iter()
                .map(|m| {
                    sparse_from_map(m)
                        .into_iter()
                        .map(|((j, k), s)| (j, k, s))
                        .collect()
                })
                .collect(),
        );
        self.level = self.level.max(Level::Bialgebra);
        Ok(self)
    }

    /// Comultiplication from `Δ(e_i)` given as `dim × dim` coefficient matrices.
    pub fn with_comul(self, comul: &[Matrix]) -> Result<Self> {
        if comul.len() != self.dim {
            return Err(Error::DimensionMismatch(
                "comultiplication table size".into(),
            ));
        }
        let triples: Vec<_> = comul
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.nonzeros().map(move |(j, k, s)| (i, j, k, s.clone())))
            .collect();
        self.with_comul_triples(triples)
    }

    /// Attaches an antipode matrix (columns are `S(e_j)`).
    pub fn with_antipode(mut self, antipode: Matrix) -> Result<Self> {
        if self.comul.is_none() {
            return Err(Error::MissingStructure(
                "comultiplication (required with antipode)",
            ));
        }
        if antipode.rows() != self.dim || antipode.cols() != self.dim {
            return Err(Error::DimensionMismatch("antipode matrix".into()));
        }
        if antipode.field() != self.field {
            return Err(Error::FieldMismatch("antipode".into()));
        }
        self.antipode_inv = antipode.inverse()?;
        self.antipode = Some(antipode);
        self.level = Level::Hopf;
        Ok(self)
    }

    /// Lowers the claimed level; claiming more than the data supports fails.
    pub fn with_level(mut self, level: Level) -> Result<Self> {
        let available = self.available_level();
        if level > available {
            return Err(Error::MissingStructure(match level {
                Level::AugmentedAlgebra => "counit for augmented-algebra level",
                Level::Bialgebra => "comultiplication for bialgebra level",
                _ => "antipode for hopf level",
            }));
        }
        self.level = level;
        Ok(self)
    }

    /// A preferred Frobenius functional, used when the structure carries no
    /// canonical one.
    pub fn with_frobenius_hint(mut self, phi: Functional) -> Result<Self> {
        if phi.len() != self.dim || phi.field() != self.field {
            return Err(Error::DimensionMismatch("frobenius functional".into()));
        }
        self.frobenius_hint = Some(phi);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch("label count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Drops coalgebra structure, keeping the algebra (and counit if asked).
    pub fn algebra_part(&self, keep_counit: bool) -> HopfData {
        let mut a = self.clone();
        a.comul = None;
        a.antipode = None;
        a.antipode_inv = None;
        if !keep_counit {
            a.counit = None;
        }
        a.level = a.available_level();
        a
    }

    fn available_level(&self) -> Level {
        match (&self.counit, &self.comul, &self.antipode) {
            (_, Some(_), Some(_)) => Level::Hopf,
            (_, Some(_), None) => Level::Bialgebra,
            (Some(_), None, _) => Level::AugmentedAlgebra,
            _ => Level::Algebra,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn one(&self) -> Element {
        self.unit.clone()
    }

    pub fn zero(&self) -> Element {
        Vector::zeros(self.field, self.dim)
    }

    pub fn basis(&self, i: usize) -> Element {
        Vector::unit(self.field, self.dim, i)
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.field.from_int(n)
    }

    pub fn counit(&self) -> Option<&Functional> {
        self.counit.as_ref()
    }

    pub fn has_comul(&self) -> bool {
        self.comul.is_some()
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inv.as_ref()
    }

    pub fn frobenius_hint(&self) -> Option<&Functional> {
        self.frobenius_hint.as_ref()
    }

    pub(crate) fn require_counit(&self) -> Result<&Functional> {
        self.counit
            .as_ref()
            .ok_or(Error::MissingStructure("counit"))
    }

    pub(crate) fn require_comul(&self) -> Result<&[SparseTensor]> {
        self.comul
            .as_deref()
            .ok_or(Error::MissingStructure("comultiplication"))
    }

    pub(crate) fn require_antipode(&self) -> Result<(&Matrix, &Matrix)> {
        let s = self
            .antipode
            .as_ref()
            .ok_or(Error::MissingStructure("antipode"))?;
        let inv = self.antipode_inv.as_ref().ok_or(Error::NotInvertible)?;
        Ok((s, inv))
    }

    /// Sparse product `e_i e_j`.
    pub fn mul_entries(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mul[i * self.dim + j]
    }

    /// Sparse coproduct `Δ(e_i)`.
    pub fn comul_entries(&self, i: usize) -> &[(usize, usize, Scalar)] {
        self.comul.as_ref().map_or(&[], |c| &c[i])
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        let bnz: Vec<(usize, &Scalar)> = b.nonzeros().collect();
        for (i, x) in a.nonzeros() {
            for &(j, y) in &bnz {
                let c = x * y;
                for (k, m) in self.mul_entries(i, j) {
                    out.set(*k, out.get(*k) + &(&c * m));
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &Element, b: &Element, c: &Element) -> Element {
        self.mul(&self.mul(a, b), c)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self, a: &Element) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &Element) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn power(&self, a: &Element, exp: u64) -> Element {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Two-sided inverse, if one exists.
    pub fn inverse_element(&self, a: &Element) -> Option<Element> {
        let x = self.left_mul_matrix(a).solve(&self.unit).ok()??;
        (self.mul(&x, a) == self.unit).then_some(x)
    }

    pub fn is_central(&self, a: &Element) -> bool {
        (0..self.dim).all(|j| {
            let e = self.basis(j);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.mul_entries(i, j) == self.mul_entries(j, i)))
    }

    pub fn eval(&self, f: &Functional, a: &Element) -> Scalar {
        f.dot(a)
    }

    pub fn counit_of(&self, a: &Element) -> Result<Scalar> {
        Ok(self.require_counit()?.dot(a))
    }

    pub fn comul(&self, a: &Element) -> Result<Matrix> {
        let comul = self.require_comul()?;
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, x) in a.nonzeros() {
            for (j, k, c) in &comul[i] {
                out.add_at(*j, *k, &(x * c));
            }
        }
        Ok(out)
    }

    pub fn antipode_of(&self, a: &Element) -> Result<Element> {
        Ok(self.require_antipode()?.0.apply(a))
    }

    pub fn antipode_inverse_of(&self, a: &Element) -> Result<Element> {
        Ok(self.require_antipode()?.1.apply(a))
    }

    /// Convolution product in `H*`: `(fg)(x) = Σ f(x_1) g(x_2)`.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Result<Functional> {
        let comul = self.require_comul()?;
        let mut out = self.zero();
        for (i, terms) in comul.iter().enumerate() {
            let mut acc = self.field.zero();
            for (j, k, c) in terms {
                let (a, b) = (f.get(*j), g.get(*k));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + c * a * b;
                }
            }
            out.set(i, acc);
        }
        Ok(out)
    }

    /// `g ⇀ a = Σ a_1 g(a_2)`.
    pub fn act_left(&self, g: &Functional, a: &Element) -> Result<Element> {
        let comul = self.require_comul()?;
        let mut out = self.zero();
        for (i, x) in a.nonzeros() {
            for (j, k, c) in &comul[i] {
                let gk = g.get(*k);
                if !gk.is_zero() {
                    out.set(*j, out.get(*j) + &(x * c * gk));
                }
            }
        }
        Ok(out)
    }

    /// `a ↼ g = Σ g(a_1) a_2`.
    pub fn act_right(&self, a: &Element, g: &Functional) -> Result<Element> {
        let comul = self.require_comul()?;
        let mut out = self.zero();
        for (i, x) in a.nonzeros() {
            for (j, k, c) in &comul[i] {
                let gj = g.get(*j);
                if !gj.is_zero() {
                    out.set(*k, out.get(*k) + &(x * c * gj));
                }
            }
        }
        Ok(out)
    }

    /// `(a f)(b) = f(b a)`.
    pub fn functional_left(&self, a: &Element, f: &Functional) -> Functional {
        let cols = (0..self.dim).map(|j| f.dot(&self.mul(&self.basis(j), a)));
        Vector::new(self.field, cols.collect())
    }

    /// `(f a)(b) = f(a b)`.
    pub fn functional_right(&self, f: &Functional, a: &Element) -> Functional {
        let cols = (0..self.dim).map(|j| f.dot(&self.mul(a, &self.basis(j))));
        Vector::new(self.field, cols.collect())
    }

    /// Product in the algebra `H ⊗ H`.
    pub fn tensor_mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(self.field, n, n);
        let bnz: Vec<(usize, usize, &Scalar)> = b.nonzeros().collect();
        for (p, q, x) in a.nonzeros() {
            for &(r, s, y) in &bnz {
                let c = x * y;
                for (k1, m1) in self.mul_entries(p, r) {
                    let c1 = &c * m1;
                    for (k2, m2) in self.mul_entries(q, s) {
                        out.add_at(*k1, *k2, &(&c1 * m2));
                    }
                }
            }
        }
        out
    }

    /// `(A ⊗ B)(T)` for linear maps `A`, `B` and a tensor `T`.
    pub fn tensor_map(&self, left: &Matrix, right: &Matrix, t: &Matrix) -> Matrix {
        left.mul(t)
            .and_then(|m| m.mul(&right.transpose()))
            .expect("tensor map dimensions")
    }

    /// `a ⊗ b` as a tensor.
    pub fn simple_tensor(&self, a: &Element, b: &Element) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, x) in a.nonzeros() {
            for (j, y) in b.nonzeros() {
                out.set(i, j, x * y);
            }
        }
        out
    }

    pub fn is_group_like(&self, a: &Element) -> Result<bool> {
        Ok(self.comul(a)? == self.simple_tensor(a, a) && self.counit_of(a)?.is_one())
    }

    /// `(Δ ⊗ Id)Δ(a)` flattened with index `(i * n + j) * n + k`.
    pub fn comul_left_twice(&self, a: &Element) -> Result<Vector> {
        let n = self.dim;
        let d = self.comul(a)?;
        let mut out = Vector::zeros(self.field, n * n * n);
        for (p, q, x) in d.nonzeros() {
            for (i, j, c) in self.comul_entries(p) {
                let idx = (i * n + j) * n + q;
                out.set(idx, out.get(idx) + &(x * c));
            }
        }
        Ok(out)
    }

    /// `(Id ⊗ Δ)Δ(a)` flattened like [`HopfData::comul_left_twice`].
    pub fn comul_right_twice(&self, a: &Element) -> Result<Vector> {
        let n = self.dim;
        let d = self.comul(a)?;
        let mut out = Vector::zeros(self.field, n * n * n);
        for (p, q, x) in d.nonzeros() {
            for (j, k, c) in self.comul_entries(q) {
                let idx = (p * n + j) * n + k;
                out.set(idx, out.get(idx) + &(x * c));
            }
        }
        Ok(out)
    }

    /// Nonzero terms `(i, j, k, c)` of `Δ²(a) = Σ c e_i ⊗ e_j ⊗ e_k`.
    pub fn comul2_terms(&self, a: &Element) -> Result<Vec<(usize, usize, usize, Scalar)>> {
        let n = self.dim;
        let flat = self.comul_left_twice(a)?;
        Ok(flat
            .nonzeros()
            .map(|(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c.clone()))
            .collect())
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, a: &Element) -> String {
        format_combination(&self.labels, a)
    }

    /// Label of `a` when it is exactly a basis element.
    pub fn basis_label(&self, a: &Element) -> Option<&str> {
        let mut nz = a.nonzeros();
        let (i, c) = nz.next()?;
        (nz.next().is_none() && c.is_one()).then(|| self.labels[i].as_str())
    }
}

pub(crate) fn format_combination(labels: &[String], a: &Vector) -> String {
    let mut out = String::new();
    for (i, c) in a.nonzeros() {
        let label = &labels[i];
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == "1" {
            out.push_str(label);
        } else {
            let _ = write!(out, "{mag}*{label}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;

    #[test]
    fn sweedler_products() {
        let h = preset("sweedler4").unwrap();
        let (g, x) = (h.basis(1), h.basis(2));
        assert_eq!(h.mul(&g, &g), h.one());
        assert!(h.mul(&x, &x).is_zero());
        assert_eq!(h.mul(&x, &g), h.basis(3).neg());
        assert_eq!(h.format_element(&h.basis(2).sub(&h.basis(3))), "x - gx");
    }

    #[test]
    fn counit_acts_trivially() {
        let h = preset("sweedler4").unwrap();
        let eps = h.counit().unwrap().clone();
        for i in 0..h.dim() {
            let a = h.basis(i);
            assert_eq!(h.act_left(&eps, &a).unwrap(), a);
            assert_eq!(h.act_right(&a, &eps).unwrap(), a);
        }
    }

    #[test]
    fn characters_act_on_group_likes_by_scalars() {
        let h = preset("group:C2").unwrap();
        let g = h.basis(1);
        let chi = Vector::from_ints(h.field(), &[1, -1]);
        assert_eq!(h.act_right(&g, &chi).unwrap(), g.scale(&h.scalar(-1)));
    }

    #[test]
    fn harpoon_module_laws() {
        for name in ["sweedler4", "group:S3", "taft:3:13"] {
            let h = preset(name).unwrap();
            let n = h.dim();
            for a in 0..n {
                let a = h.basis(a);
                for i in 0..n {
                    for j in 0..n {
                        let (g, k) = (h.basis(i), h.basis(j));
                        let gk = h.convolve(&g, &k).unwrap();
                        let lhs = h.act_left(&gk, &a).unwrap();
                        let rhs = h.act_left(&g, &h.act_left(&k, &a).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "{name}: left action");
                        let lhs = h.act_right(&a, &gk).unwrap();
                        let rhs = h.act_right(&h.act_right(&a, &g).unwrap(), &k).unwrap();
                        assert_eq!(lhs, rhs, "{name}: right action");
                        let lhs = h.act_right(&h.act_left(&g, &a).unwrap(), &k).unwrap();
                        let rhs = h.act_left(&g, &h.act_right(&a, &k).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "{name}: bimodule");
                    }
                }
            }
        }
    }

    #[test]
    fn group_likes_are_inverted_by_the_antipode() {
        for name in ["group:S3", "group:Q8", "sweedler4", "taft:3:13"] {
            let h = preset(name).unwrap();
            let g = h.basis(1);
            assert!(h.is_group_like(&g).unwrap());
            let sg = h.antipode_of(&g).unwrap();
            assert_eq!(h.mul(&sg, &g), h.one(), "{name}");
        }
    }

    #[test]
    fn inverse_element_detects_non_units() {
        let a = preset("truncpoly:3").unwrap();
        assert!(a.inverse_element(&a.basis(1)).is_none());
        let u = a.one().add(&a.basis(1));
        let inv = a.inverse_element(&u).unwrap();
        assert_eq!(a.mul(&u, &inv), a.one());
    }
}
