//! Relative Frobenius systems `(E, x_i, y_i)` for an extension `A/S` with
//! twist `β`: `E(s a s') = β(s) E(a) s'` and
//! `Σ β^{-1}(E(a x_i)) y_i = a = Σ x_i E(y_i a)`.
//!
//! The base `S` is a separate algebra embedded in `A`; `E` takes values in
//! base coordinates. A plain Frobenius system is the case `S = k·1`.

use std::sync::Arc;

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Vector};
use crate::frobenius::FrobeniusSystem;
use crate::hopf::{Element, HopfData};

/// The one-dimensional algebra `k`.
pub fn ground_algebra(field: Field) -> HopfData {
    HopfData::from_mul_triples(
        field,
        vec!["1".into()],
        Vector::from_ints(field, &[1]),
        [(0, 0, 0, field.one())],
    )
    .expect("ground algebra")
}

/// Solves `ι c = v`; `None` when `v` is outside the image.
pub(crate) fn pullback(iota: &Matrix, v: &Vector) -> Option<Vector> {
    let c = iota.solve(v).ok()??;
    (iota.apply(&c) == *v).then_some(c)
}

#[derive(Clone, Debug)]
pub struct RelativeSystem {
    host: Arc<HopfData>,
    base: Arc<HopfData>,
    /// Columns are the images of the base basis in the host.
    embedding: Matrix,
    /// `dim S × dim A`: column `j` is `E(e_j)` in base coordinates.
    e_map: Matrix,
    beta: Matrix,
    beta_inv: Matrix,
    xs: Vec<Element>,
    ys: Vec<Element>,
}

impl RelativeSystem {
    /// Verifies the twisted bimodule law and both dual-bases equations.
    pub fn from_parts(
        host: Arc<HopfData>,
        base: Arc<HopfData>,
        embedding: Matrix,
        e_map: Matrix,
        beta: Matrix,
        xs: Vec<Element>,
        ys: Vec<Element>,
    ) -> Result<RelativeSystem> {
        let beta_inv = beta.inverse()?.ok_or(Error::NotInvertible)?;
        let sys = RelativeSystem {
            host,
            base,
            embedding,
            e_map,
            beta,
            beta_inv,
            xs,
            ys,
        };
        for c in sys.checks() {
            if !c.passed {
                return Err(Error::NotFrobenius(c.to_string()));
            }
        }
        Ok(sys)
    }

    /// `(φ, x_i, y_i)` viewed over `k·1`.
    pub fn from_frobenius(sys: &FrobeniusSystem) -> RelativeSystem {
        let h = sys.host();
        let field = h.field();
        let base = Arc::new(ground_algebra(field));
        let embedding = Matrix::from_columns(field, h.dim(), &[h.one()]);
        let e_map = Matrix::from_rows(field, vec![sys.phi().as_slice().to_vec()])
            .expect("1 x n functional");
        RelativeSystem {
            host: sys.host_arc().clone(),
            base,
            embedding,
            e_map,
            beta: Matrix::identity(field, 1),
            beta_inv: Matrix::identity(field, 1),
            xs: sys.xs().to_vec(),
            ys: sys.ys().to_vec(),
        }
    }

    pub fn host(&self) -> &HopfData {
        &self.host
    }

    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    pub fn e_map(&self) -> &Matrix {
        &self.e_map
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn xs(&self) -> &[Element] {
        &self.xs
    }

    pub fn ys(&self) -> &[Element] {
        &self.ys
    }

    /// `E(a)` in base coordinates.
    pub fn apply_e(&self, a: &Element) -> Vector {
        self.e_map.apply(a)
    }

    fn embed(&self, s: &Vector) -> Element {
        self.embedding.apply(s)
    }

    pub fn checks(&self) -> Vec<CheckResult> {
        let (a, s) = (&*self.host, &*self.base);
        let (na, ns) = (a.dim(), s.dim());
        let bimodule = (0..ns * na * ns).find_map(|t| {
            let (i, j, k) = (t / (na * ns), (t / ns) % na, t % ns);
            let (b, x, b2) = (s.basis(i), a.basis(j), s.basis(k));
            let lhs = self.apply_e(&a.mul3(&self.embed(&b), &x, &self.embed(&b2)));
            let rhs = s.mul3(&self.beta.apply(&b), &self.apply_e(&x), &b2);
            (lhs != rhs)
                .then(|| format!("({}, {}, {})", s.labels()[i], a.labels()[j], s.labels()[k]))
        });
        let dual = (0..na).find_map(|j| {
            let x = a.basis(j);
            let mut left = a.zero();
            let mut right = a.zero();
            for (xi, yi) in self.xs.iter().zip(&self.ys) {
                let e = self.beta_inv.apply(&self.apply_e(&a.mul(&x, xi)));
                left = left.add(&a.mul(&self.embed(&e), yi));
                right = right.add(&a.mul(xi, &self.embed(&self.apply_e(&a.mul(yi, &x)))));
            }
            (left != x || right != x).then(|| a.labels()[j].clone())
        });
        vec![
            CheckResult::from_witness("twisted bimodule", bimodule),
            CheckResult::from_witness("relative dual bases", dual),
        ]
    }

    /// Relative Nakayama map `η(c) = Σ β^{-1}(E(x_i c)) y_i` and its
    /// inverse `η^{-1}(c) = Σ x_i E(c y_i)`, defined on all of the host when
    /// the base is `k·1` (the centralizer is then the whole host).
    pub fn ground_nakayama(&self) -> Option<(Matrix, Matrix)> {
        if self.base.dim() != 1 {
            return None;
        }
        let a = &*self.host;
        let (mut eta, mut eta_inv) = (Vec::new(), Vec::new());
        for j in 0..a.dim() {
            let c = a.basis(j);
            let (mut fwd, mut bwd) = (a.zero(), a.zero());
            for (x, y) in self.xs.iter().zip(&self.ys) {
                let e = self.beta_inv.apply(&self.apply_e(&a.mul(x, &c)));
                fwd = fwd.add(&a.mul(&self.embed(&e), y));
                bwd = bwd.add(&a.mul(x, &self.embed(&self.apply_e(&a.mul(&c, y)))));
            }
            eta.push(fwd);
            eta_inv.push(bwd);
        }
        let f = a.field();
        Some((
            Matrix::from_columns(f, a.dim(), &eta),
            Matrix::from_columns(f, a.dim(), &eta_inv),
        ))
    }
}

/// `(E_T ∘ E_S, x_i z_j, β^{-1}(w_j) y_i)` for `A/S` with twist `β` and
/// `S/T` with twist `γ`; the composite has twist `γ ∘ β` restricted to `T`.
pub fn compose_transitive(
    outer: &RelativeSystem,
    inner: &RelativeSystem,
) -> Result<RelativeSystem> {
    if outer.base() != inner.host() {
        return Err(Error::DimensionMismatch(
            "inner host is not the outer base".into(),
        ));
    }
    let (s, t) = (inner.host(), inner.base());
    // β(T) = T, with β restricted to T in T coordinates
    let mut beta_t = Vec::with_capacity(t.dim());
    for j in 0..t.dim() {
        let image = outer.beta.apply(&inner.embedding.column(j));
        beta_t.push(pullback(&inner.embedding, &image).ok_or(Error::TwistDoesNotPreserveBase)?);
    }
    let beta_t = Matrix::from_columns(t.field(), t.dim(), &beta_t);
    let twist = inner.beta.mul(&beta_t)?;
    let embedding = outer.embedding.mul(&inner.embedding)?;
    let e_map = inner.e_map.mul(&outer.e_map)?;
    let a = outer.host();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (x, y) in outer.xs.iter().zip(&outer.ys) {
        for (z, w) in inner.xs.iter().zip(&inner.ys) {
            xs.push(a.mul(x, &outer.embed(z)));
            ys.push(a.mul(&outer.embed(&outer.beta_inv.apply(w)), y));
        }
    }
    debug_assert_eq!(s.dim(), outer.embedding.cols());
    RelativeSystem::from_parts(
        outer.host.clone(),
        inner.base.clone(),
        embedding,
        e_map,
        twist,
        xs,
        ys,
    )
}

/// The extension `S/S` with `E = Id` and dual bases `1, 1`.
pub fn identity_extension(s: Arc<HopfData>) -> Result<RelativeSystem> {
    let n = s.dim();
    let id = Matrix::identity(s.field(), n);
    RelativeSystem::from_parts(
        s.clone(),
        s.clone(),
        id.clone(),
        id.clone(),
        id,
        vec![s.one()],
        vec![s.one()],
    )
}

impl RelativeSystem {
    /// Replaces `β` without re-verifying the system, so that mutated
    /// twists can be fed to the identity checks.
    pub fn with_beta_unchecked(mut self, beta: Matrix) -> Result<Self> {
        self.beta_inv = beta.inverse()?.ok_or(Error::NotInvertible)?;
        self.beta = beta;
        Ok(self)
    }
}
