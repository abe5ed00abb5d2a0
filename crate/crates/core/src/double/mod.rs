//! The Drinfel'd double `D(H) = H^{*cop} ⊗ H`.
//!
//! The basis element `e^i ⊗ e_j` of `D(H)` has index `i * n + j`, dual factor
//! first. Elements of `D ⊗ D` are `N × N` matrices as in [`crate::hopf`],
//! with `N = n²`.

mod quasitriangular;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub use quasitriangular::{quasitriangular_checks, tensor_inverse, Tensor3};

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Vector};
use crate::fh::{fh_profile, FHProfile};
use crate::frobenius::{build_system, symmetric_test};
use crate::hopf::{dual_hopf, verify_axioms, Element, Functional, HopfData};

/// Above this dimension of `H` the double gets expensive over ℚ.
pub const LARGE_INPUT_DIM: usize = 10;

pub struct DoubleData {
    host: Arc<HopfData>,
    dual: HopfData,
    double: Arc<HopfData>,
    /// `Σ_i (ε ⊗ e_i) ⊗ (e^i ⊗ 1)`.
    pub r: Matrix,
    pub r_inv: Matrix,
    /// `Σ S(w_i) z_i` for `R = Σ z_i ⊗ w_i`.
    pub u: Element,
    /// `T ⊗ t` with `T = S^{-1} f`.
    pub integral: Element,
    /// `S(t) ⊗ f` as a functional on `D(H)`.
    pub fh_functional: Functional,
    pub host_profile: FHProfile,
    /// Straightening agreement, factor embeddings and the axiom report.
    pub construction: Vec<CheckResult>,
    profile: OnceLock<Result<FHProfile>>,
}

impl DoubleData {
    pub fn host(&self) -> &HopfData {
        &self.host
    }

    pub fn dual(&self) -> &HopfData {
        &self.dual
    }

    pub fn double(&self) -> &HopfData {
        &self.double
    }

    pub fn double_arc(&self) -> &Arc<HopfData> {
        &self.double
    }

    /// `ε ⊗ x`.
    pub fn embed_primal(&self, x: &Element) -> Element {
        self.host.require_counit().expect("hopf host").kron_vec(x)
    }

    /// `g ⊗ 1`.
    pub fn embed_dual(&self, g: &Functional) -> Element {
        g.kron_vec(self.host.unit())
    }

    /// The FH profile of `D(H)` itself, computed once.
    pub fn profile(&self) -> Result<&FHProfile> {
        self.profile
            .get_or_init(|| fh_profile(self.double.clone()))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// `x g` for `x = e_j`, `g = e^k`, as an `n × n` matrix whose `(h, y)`
/// entry is the coefficient of `e^h ⊗ e_y`. Both straightening formulas are
/// evaluated independently.
struct Straightening {
    by_left_right: Vec<Matrix>,
    by_harpoons: Vec<Matrix>,
}

fn straighten(h: &HopfData, dual: &HopfData) -> Result<Straightening> {
    let n = h.dim();
    let field = h.field();
    let (_, s_inv) = h.require_antipode()?;
    let (_, dual_s_inv) = dual.require_antipode()?;
    let comul2: Vec<_> = (0..n)
        .map(|j| h.comul2_terms(&h.basis(j)))
        .collect::<Result<_>>()?;
    let dual_comul2: Vec<_> = (0..n)
        .map(|k| dual.comul2_terms(&dual.basis(k)))
        .collect::<Result<_>>()?;

    // sandwich[(r * n + p) * n + s] = S^{-1}(e_r) e_s e_p
    let mut sandwich: BTreeMap<usize, Vector> = BTreeMap::new();
    let mut by_left_right = vec![Matrix::zeros(field, n, n); n * n];
    let mut by_harpoons = vec![Matrix::zeros(field, n, n); n * n];
    for j in 0..n {
        for (p, q, r, c) in &comul2[j] {
            for s in 0..n {
                let w = sandwich
                    .entry((r * n + p) * n + s)
                    .or_insert_with(|| h.mul3(&s_inv.column(*r), &h.basis(s), &h.basis(*p)));
                for (k, wk) in w.nonzeros() {
                    by_left_right[j * n + k].add_at(s, *q, &(c * wk));
                }
            }
            for k in 0..n {
                for (a, b, g3, coef) in &dual_comul2[k] {
                    if g3 != p {
                        continue;
                    }
                    let pairing = dual_s_inv.get(*r, *a);
                    if !pairing.is_zero() {
                        by_harpoons[j * n + k].add_at(*b, *q, &(coef * c * pairing));
                    }
                }
            }
        }
    }
    Ok(Straightening {
        by_left_right,
        by_harpoons,
    })
}

fn straightening_check(h: &HopfData, st: &Straightening) -> CheckResult {
    let n = h.dim();
    let witness = (0..n * n)
        .find(|&jk| st.by_left_right[jk] != st.by_harpoons[jk])
        .map(|jk| format!("x = {}, g = {}*", h.labels()[jk / n], h.labels()[jk % n]));
    CheckResult::from_witness("straightening formulas agree", witness)
}

fn double_labels(h: &HopfData, dual: &HopfData) -> Vec<String> {
    let mut out = Vec::with_capacity(h.dim() * h.dim());
    for g in dual.labels() {
        for x in h.labels() {
            out.push(format!("{g}⊗{x}"));
        }
    }
    out
}

/// The double as a Hopf algebra, from `H` and `H*` and the straightening `x g`.
fn assemble(h: &HopfData, dual: &HopfData, xg: &[Matrix]) -> Result<HopfData> {
    let n = h.dim();
    let field = h.field();
    let eps = h.require_counit()?;
    let one = h.unit();

    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xg_jk = &xg[j * n + k];
                for l in 0..n {
                    for (hh, y, c) in xg_jk.nonzeros() {
                        for (u, cu) in dual.mul_entries(i, hh) {
                            let cu = c * cu;
                            for (v, cv) in h.mul_entries(y, l) {
                                mul.push((i * n + j, k * n + l, u * n + v, &cu * cv));
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = eps.kron_vec(one);
    let counit = one.kron_vec(eps);

    let mut comul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (a, b, c1) in dual.comul_entries(i) {
                for (p, q, c2) in h.comul_entries(j) {
                    comul.push((i * n + j, b * n + p, a * n + q, c1 * c2));
                }
            }
        }
    }

    let d = HopfData::from_mul_triples(field, double_labels(h, dual), unit, mul)?
        .with_counit(counit)?
        .with_comul_triples(comul)?;

    // S'(g ⊗ x) = (ε ⊗ S x)(S^{-1} g ⊗ 1)
    let (s, _) = h.require_antipode()?;
    let (_, dual_s_inv) = dual.require_antipode()?;
    let columns: Vec<Vector> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let left = eps.kron_vec(&s.column(j));
            let right = dual_s_inv.column(i).kron_vec(one);
            d.mul(&left, &right)
        })
        .collect();
    d.with_antipode(Matrix::from_columns(field, n * n, &columns))
}

/// `H` and `H^{*cop}` sit inside `D(H)` as sub-bialgebras.
fn embedding_checks(h: &HopfData, dual: &HopfData, d: &HopfData) -> Result<Vec<CheckResult>> {
    let n = h.dim();
    let eps = h.require_counit()?;
    let one = h.unit();
    let primal = |x: &Element| eps.kron_vec(x);
    let dualemb = |g: &Functional| g.kron_vec(one);
    let tensor = |emb: &dyn Fn(&Vector) -> Vector, t: &Matrix| {
        let mut out = Matrix::zeros(h.field(), n * n, n * n);
        for (p, q, c) in t.nonzeros() {
            out = out.add(
                &d.simple_tensor(&emb(&h.basis(p)), &emb(&h.basis(q)))
                    .scale(c),
            );
        }
        out
    };
    let mut primal_witness = None;
    let mut dual_witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let (x, y) = (h.basis(a), h.basis(b));
            if d.mul(&primal(&x), &primal(&y)) != primal(&h.mul(&x, &y)) {
                primal_witness = Some(format!("{} * {}", h.labels()[a], h.labels()[b]));
                break 'outer;
            }
        }
    }
    if primal_witness.is_none() {
        for a in 0..n {
            let x = h.basis(a);
            if d.comul(&primal(&x))? != tensor(&primal, &h.comul(&x)?) {
                primal_witness = Some(format!("comultiplication at {}", h.labels()[a]));
                break;
            }
        }
    }
    'outer2: for a in 0..n {
        for b in 0..n {
            let (g, k) = (dual.basis(a), dual.basis(b));
            if d.mul(&dualemb(&g), &dualemb(&k)) != dualemb(&dual.mul(&g, &k)) {
                dual_witness = Some(format!("{} * {}", dual.labels()[a], dual.labels()[b]));
                break 'outer2;
            }
        }
    }
    if dual_witness.is_none() {
        for a in 0..n {
            let g = dual.basis(a);
            if d.comul(&dualemb(&g))? != tensor(&dualemb, &dual.comul(&g)?.transpose()) {
                dual_witness = Some(format!("comultiplication at {}", dual.labels()[a]));
                break;
            }
        }
    }
    Ok(vec![
        CheckResult::from_witness("H is a sub-bialgebra", primal_witness),
        CheckResult::from_witness("H^{*cop} is a sub-bialgebra", dual_witness),
    ])
}

fn drinfeld_r(h: &HopfData, d: &HopfData) -> Result<Matrix> {
    let n = h.dim();
    let eps = h.require_counit()?;
    let mut r = Matrix::zeros(h.field(), n * n, n * n);
    for i in 0..n {
        let z = eps.kron_vec(&h.basis(i));
        let w = h.basis(i).kron_vec(h.unit());
        r = r.add(&d.simple_tensor(&z, &w));
    }
    Ok(r)
}

/// `Σ S(w_i) z_i` for `R = Σ z_i ⊗ w_i`.
pub fn drinfeld_element(d: &HopfData, r: &Matrix) -> Result<Element> {
    let mut u = d.zero();
    for (p, q, c) in r.nonzeros() {
        let term = d.mul(&d.antipode_of(&d.basis(q))?, &d.basis(p));
        u.axpy(c, &term);
    }
    Ok(u)
}

pub fn build_double(h: impl Into<Arc<HopfData>>) -> Result<DoubleData> {
    let host: Arc<HopfData> = h.into();
    host.require_antipode()?;
    let dual = dual_hopf(&host)?;
    let st = straighten(&host, &dual)?;
    let agree = straightening_check(&host, &st);
    if !agree.passed {
        return Err(Error::Falsification(agree.to_string()));
    }
    let double = assemble(&host, &dual, &st.by_left_right)?;
    let axioms = verify_axioms(&double);
    if !axioms.passes() {
        let failures: Vec<String> = axioms.failures().map(ToString::to_string).collect();
        return Err(Error::Falsification(format!(
            "double: {}",
            failures.join("; ")
        )));
    }
    let mut construction = vec![agree];
    construction.extend(axioms.checks);
    construction.extend(embedding_checks(&host, &dual, &double)?);

    let r = drinfeld_r(&host, &double)?;
    let r_inv = tensor_inverse(&double, &r)?
        .ok_or_else(|| Error::Falsification("R is not invertible".into()))?;
    let u = drinfeld_element(&double, &r)?;

    let host_profile = fh_profile(host.clone())?;
    let big_t = dual.antipode_inverse_of(&host_profile.f)?;
    let integral = big_t.kron_vec(&host_profile.t);
    let fh_functional = host.antipode_of(&host_profile.t)?.kron_vec(&host_profile.f);

    Ok(DoubleData {
        host,
        dual,
        double: Arc::new(double),
        r,
        r_inv,
        u,
        integral,
        fh_functional,
        host_profile,
        construction,
        profile: OnceLock::new(),
    })
}

pub fn check_quasitriangular(dd: &DoubleData) -> Result<CheckResult> {
    let checks = quasitriangular_checks(dd.double(), &dd.r)?;
    Ok(CheckResult::combine("quasitriangular", &checks))
}

fn first_basis_failure(
    d: &HopfData,
    fails: impl Fn(&Element) -> Result<bool>,
) -> Result<Option<String>> {
    for i in 0..d.dim() {
        if fails(&d.basis(i))? {
            return Ok(Some(format!("at {}", d.labels()[i])));
        }
    }
    Ok(None)
}

/// The identities around `T ⊗ t` and `S(t) ⊗ f`, given the profile of `H`
/// they are built from.
pub fn double_integral_checks(dd: &DoubleData, p: &FHProfile) -> Result<Vec<CheckResult>> {
    let h = dd.host();
    let dual = dd.dual();
    let d = dd.double();
    let field = h.field();
    let n = h.dim();
    let big_t = dual.antipode_inverse_of(&p.f)?;
    let tt = big_t.kron_vec(&p.t);
    let eps_d = d.require_counit()?;
    let mut out = Vec::new();

    // Σ S^{-1}t_3 b^{-1} t_1 ⊗ t_2 = 1 ⊗ t
    let mut lhs = Matrix::zeros(field, n, n);
    for (i, j, k, c) in h.comul2_terms(&p.t)? {
        let left = h.mul3(&h.antipode_inverse_of(&h.basis(k))?, &p.b_inv, &h.basis(i));
        lhs = lhs.add(&h.simple_tensor(&left, &h.basis(j)).scale(&c));
    }
    let rhs = h.simple_tensor(&h.one(), &p.t);
    out.push(CheckResult::from_bool(
        "S^-1 t_3 b^-1 t_1 (x) t_2 = 1 (x) t",
        lhs == rhs,
        || "tensors differ".into(),
    ));

    // Σ T_2 ⊗ T_3 m S^{-1}T_1 = T ⊗ 1
    let mut lhs = Matrix::zeros(field, n, n);
    for (i, j, k, c) in dual.comul2_terms(&big_t)? {
        let right = dual.mul3(
            &dual.basis(k),
            &p.m,
            &dual.antipode_inverse_of(&dual.basis(i))?,
        );
        lhs = lhs.add(&dual.simple_tensor(&dual.basis(j), &right).scale(&c));
    }
    let rhs = dual.simple_tensor(&big_t, &dual.one());
    out.push(CheckResult::from_bool(
        "T_2 (x) T_3 m S^-1 T_1 = T (x) 1",
        lhs == rhs,
        || "tensors differ".into(),
    ));

    let right = first_basis_failure(d, |a| Ok(d.mul(&tt, a) != tt.scale(&eps_d.dot(a))))?;
    out.push(CheckResult::from_witness(
        "T (x) t is a right integral",
        right,
    ));
    let left = first_basis_failure(d, |a| Ok(d.mul(a, &tt) != tt.scale(&eps_d.dot(a))))?;
    out.push(CheckResult::from_witness(
        "T (x) t is a left integral",
        left,
    ));

    // S(t) ⊗ f is a right integral of D*: λ ψ = ψ(1) λ.
    let lambda = h.antipode_of(&p.t)?.kron_vec(&p.f);
    let one_d = d.unit();
    let mut witness = None;
    for k in 0..d.dim() {
        let psi = Vector::unit(field, d.dim(), k);
        if d.convolve(&lambda, &psi)? != lambda.scale(one_d.get(k)) {
            witness = Some(format!("against {}*", d.labels()[k]));
            break;
        }
    }
    out.push(CheckResult::from_witness(
        "S(t) (x) f is a right integral of D*",
        witness,
    ));
    out.push(
        match build_system(dd.double_arc().clone(), lambda.clone()) {
            Ok(_) => CheckResult::pass("S(t) (x) f is nondegenerate"),
            Err(Error::DegenerateFunctional) => {
                CheckResult::fail("S(t) (x) f is nondegenerate", "singular Gram matrix")
            }
            Err(e) => return Err(e),
        },
    );
    let pairing = lambda.dot(&tt);
    out.push(CheckResult::from_bool(
        "(S(t) (x) f)(T (x) t) = 1",
        pairing.is_one(),
        || format!("value {pairing}"),
    ));
    let norm = d.functional_right(&lambda, &tt) == *eps_d;
    out.push(CheckResult::from_bool(
        "T (x) t is a right norm",
        norm,
        || "(S(t) (x) f)((T (x) t) -) != eps".into(),
    ));

    let profile = dd.profile()?;
    out.push(CheckResult::from_bool(
        "D(H) is unimodular",
        profile.flags.unimodular,
        || format!("m = {}", d.format_element(&profile.m)),
    ));
    Ok(out)
}

pub fn check_double_integrals(dd: &DoubleData, p: &FHProfile) -> Result<CheckResult> {
    Ok(CheckResult::combine(
        "double integrals",
        &double_integral_checks(dd, p)?,
    ))
}

pub fn double_symmetry_checks(dd: &DoubleData) -> Result<Vec<CheckResult>> {
    let d = dd.double();
    let mut out = Vec::new();
    let u_inv = d.inverse_element(&dd.u);
    out.push(CheckResult::from_bool(
        "u invertible",
        u_inv.is_some(),
        || "singular".into(),
    ));
    let s = d.antipode().expect("double has an antipode");
    let s2 = s.mul(s)?;
    let conj = first_basis_failure(d, |a| Ok(d.mul(&s2.apply(a), &dd.u) != d.mul(&dd.u, a)))?;
    out.push(CheckResult::from_witness("S^2(a) u = u a", conj));

    let profile = dd.profile()?;
    let sym = symmetric_test(&profile.system)?;
    out.push(CheckResult::from_bool(
        "D(H) is symmetric",
        sym.symmetric,
        || "no invertible trace rescaling".into(),
    ));
    out.push(CheckResult::from_bool(
        "Nakayama = S^2",
        profile.eta == s2,
        || "Nakayama map differs from S^2".into(),
    ));
    out.push(CheckResult::from_bool(
        "symmetric implies unimodular",
        !sym.symmetric || profile.flags.unimodular,
        || "symmetric but not unimodular".into(),
    ));
    Ok(out)
}

pub fn check_double_symmetric(dd: &DoubleData) -> Result<CheckResult> {
    Ok(CheckResult::combine(
        "double symmetric",
        &double_symmetry_checks(dd)?,
    ))
}

/// `ord(S_D)` divides `4 dim D(H)`.
pub fn double_order_check(dd: &DoubleData) -> Result<CheckResult> {
    let d = dd.double();
    let bound = 4 * d.dim() as u64;
    let order = d.antipode().expect("double has an antipode").order(bound)?;
    Ok(match order {
        Some(k) if bound.is_multiple_of(k) => CheckResult::pass(format!("ord(S_D) | {bound}")),
        Some(k) => CheckResult::fail(format!("ord(S_D) | {bound}"), format!("ord = {k}")),
        None => return Err(Error::Falsification(format!("ord(S_D) exceeds {bound}"))),
    })
}

/// Every check on the double, in a fixed order.
pub fn all_double_checks(dd: &DoubleData) -> Result<Vec<CheckResult>> {
    let mut out = dd.construction.clone();
    out.extend(quasitriangular_checks(dd.double(), &dd.r)?);
    out.extend(double_integral_checks(dd, &dd.host_profile)?);
    out.extend(double_symmetry_checks(dd)?);
    out.push(double_order_check(dd)?);
    Ok(out)
}
