//! Built-in structures: group algebras and their duals, Taft algebras
//! (Sweedler's among them) and truncated polynomial algebras.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Vector};
use crate::hopf::{dual_hopf, HopfData, Level};

/// Canonical names accepted by [`preset`], in a fixed order. Families
/// (`group:CN`, `taft:n:p`, `truncpoly:n`) are represented by their
/// standard members.
pub const PRESET_NAMES: &[&str] = &[
    "group:C2",
    "group:C3",
    "group:C5",
    "group:S3",
    "group:D4",
    "group:Q8",
    "dual-group:S3",
    "sweedler4",
    "taft:3:13",
    "truncpoly:2",
    "truncpoly:3",
    "truncpoly:4",
    "truncpoly:5",
];

fn unknown(name: &str, message: &str) -> Error {
    Error::Parse {
        location: format!("preset {name:?}"),
        message: message.to_string(),
    }
}

fn parse_num(name: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| unknown(name, "expected a positive integer parameter"))
}

pub fn preset(name: &str) -> Result<HopfData> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["sweedler4"] => sweedler4(),
        ["group", g] => group_algebra(&group(name, g)?),
        ["dual-group", g] => dual_hopf(&group_algebra(&group(name, g)?)?),
        ["taft", n, p] => {
            let n = parse_num(name, n)?;
            let p = parse_num(name, p)? as u64;
            taft(n, p)
        }
        ["truncpoly", n] => truncpoly(parse_num(name, n)?),
        _ => Err(unknown(name, "unknown preset")),
    }
}

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct Group {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == 0)
            .expect("group inverse")
    }

    pub fn cyclic(n: usize) -> Group {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Group { labels, table }
    }

    /// The subgroup of `Sym(degree)` generated by `gens`, listed in
    /// breadth-first order from the identity. Composition is `(στ)(i) = σ(τ(i))`.
    pub fn permutations(degree: usize, gens: &[Vec<usize>]) -> Group {
        let id: Vec<usize> = (0..degree).collect();
        let compose = |s: &[usize], t: &[usize]| t.iter().map(|&i| s[i]).collect::<Vec<_>>();
        let mut elems = vec![id];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elems[0].clone(), 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let next = compose(&elems[i], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            i += 1;
        }
        let table = elems
            .iter()
            .map(|s| elems.iter().map(|t| index[&compose(s, t)]).collect())
            .collect();
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Group { labels, table }
    }

    /// Quaternion units `±1, ±i, ±j, ±k`.
    pub fn quaternion() -> Group {
        // unit u in {1, i, j, k} with sign s is index 2u + s
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|e| format!("{}{}", if e % 2 == 1 { "-" } else { "" }, names[e / 2]))
            .collect();
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, neg) = UNIT[a / 2][b / 2];
                        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                        2 * u + sign as usize
                    })
                    .collect()
            })
            .collect();
        Group { labels, table }
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

fn group(name: &str, g: &str) -> Result<Group> {
    match g {
        "S3" => Ok(Group::permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])),
        "D4" => Ok(Group::permutations(
            4,
            &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]],
        )),
        "Q8" => Ok(Group::quaternion()),
        _ => match g.strip_prefix('C').map(str::parse::<usize>) {
            Some(Ok(n)) if n >= 1 => Ok(Group::cyclic(n)),
            _ => Err(unknown(name, "groups are CN (N >= 1), S3, D4 or Q8")),
        },
    }
}

/// `k[G]` over ℚ with group-like basis.
pub fn group_algebra(g: &Group) -> Result<HopfData> {
    let field = Field::Rational;
    let n = g.order();
    let one = field.one();
    let mul = (0..n * n).map(|ab| (ab / n, ab % n, g.table[ab / n][ab % n], one.clone()));
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s.set(g.inverse(a), a, one.clone());
    }
    HopfData::from_mul_triples(field, g.labels.clone(), Vector::unit(field, n, 0), mul)?
        .with_counit(Vector::new(field, vec![one.clone(); n]))?
        .with_comul_triples((0..n).map(|a| (a, a, a, one.clone())))?
        .with_antipode(s)
}

/// Sweedler's four-dimensional algebra over ℚ, basis `1, g, x, gx`.
pub fn sweedler4() -> Result<HopfData> {
    taft_over(Field::Rational, 2, Field::Rational.from_int(-1))
}

/// The Taft algebra of dimension `n²` over `𝔽_p`, using the smallest
/// primitive `n`-th root of unity.
pub fn taft(n: usize, p: u64) -> Result<HopfData> {
    let field = Field::prime(p)?;
    if n < 2 || !(p - 1).is_multiple_of(n as u64) {
        return Err(unknown(
            &format!("taft:{n}:{p}"),
            "requires n >= 2 dividing p - 1",
        ));
    }
    let q = smallest_primitive_root(field, n as u64).expect("n | p - 1 guarantees a root");
    taft_over(field, n, q)
}

/// Smallest residue of multiplicative order exactly `n`.
pub fn smallest_primitive_root(field: Field, n: u64) -> Option<Scalar> {
    (2..field.characteristic())
        .map(|r| field.from_int(r as i64))
        .find(|q| {
            q.pow(n as i64).unwrap().is_one() && (1..n).all(|k| !q.pow(k as i64).unwrap().is_one())
        })
}

fn taft_label(a: usize, b: usize) -> String {
    let g = match a {
        0 => String::new(),
        1 => "g".into(),
        _ => format!("g^{a}"),
    };
    let x = match b {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{b}"),
    };
    if a == 0 && b == 0 {
        "1".into()
    } else {
        g + &x
    }
}

/// Basis `g^a x^b` at index `a + n b`, with `x g = q g x`, `g^n = 1`, `x^n = 0`,
/// `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
fn taft_over(field: Field, n: usize, q: Scalar) -> Result<HopfData> {
    let idx = |a: usize, b: usize| a + n * b;
    let mut labels = Vec::with_capacity(n * n);
    for b in 0..n {
        for a in 0..n {
            labels.push(taft_label(a, b));
        }
    }
    let mut mul = Vec::new();
    for (a, b, c, d) in
        (0..n * n * n * n).map(|t| (t % n, (t / n) % n, (t / (n * n)) % n, t / (n * n * n)))
    {
        if b + d < n {
            mul.push((
                idx(a, b),
                idx(c, d),
                idx((a + c) % n, b + d),
                q.pow((b * c) as i64)?,
            ));
        }
    }
    let alg =
        HopfData::from_mul_triples(field, labels.clone(), Vector::unit(field, n * n, 0), mul)?;
    let (g, x) = (alg.basis(idx(1, 0)), alg.basis(idx(0, 1)));
    let dg = alg.simple_tensor(&g, &g);
    let dx = alg
        .simple_tensor(&x, &alg.one())
        .add(&alg.simple_tensor(&g, &x));
    let sg = alg.power(&g, n as u64 - 1);
    let sx = alg.mul(&sg, &x).neg();
    let mut comul = Vec::with_capacity(n * n);
    let mut antipode = Vec::with_capacity(n * n);
    for b in 0..n {
        for a in 0..n {
            let mut d = alg.simple_tensor(&alg.one(), &alg.one());
            for _ in 0..a {
                d = alg.tensor_mul(&d, &dg);
            }
            for _ in 0..b {
                d = alg.tensor_mul(&d, &dx);
            }
            comul.push(d);
            // S(g^a x^b) = S(x)^b S(g)^a
            antipode.push(alg.mul(&alg.power(&sx, b as u64), &alg.power(&sg, a as u64)));
        }
    }
    let eps = Vector::new(
        field,
        (0..n * n).map(|i| field.from_int((i < n) as i64)).collect(),
    );
    alg.with_counit(eps)?
        .with_comul(&comul)?
        .with_antipode(Matrix::from_columns(field, n * n, &antipode))
}

/// `k[X]/(Xⁿ)` over ℚ with `ε(X) = 0`, carrying the top-coefficient
/// functional as its Frobenius hint.
pub fn truncpoly(n: usize) -> Result<HopfData> {
    if n == 0 {
        return Err(unknown("truncpoly:0", "n must be positive"));
    }
    let field = Field::Rational;
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        })
        .collect();
    let mul = (0..n * n)
        .filter(|ij| ij / n + ij % n < n)
        .map(|ij| (ij / n, ij % n, ij / n + ij % n, field.one()));
    HopfData::from_mul_triples(field, labels, Vector::unit(field, n, 0), mul)?
        .with_counit(Vector::unit(field, n, 0))?
        .with_frobenius_hint(Vector::unit(field, n, n - 1))
}

/// The monoid bialgebra of `{1, z}` with `z² = z`; it has no antipode.
pub fn monoid_bialgebra() -> HopfData {
    let field = Field::Rational;
    let one = field.one();
    let labels = vec!["1".to_string(), "z".to_string()];
    let mul = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)].map(|(i, j, k)| (i, j, k, one.clone()));
    HopfData::from_mul_triples(field, labels, Vector::unit(field, 2, 0), mul)
        .and_then(|h| h.with_counit(Vector::from_ints(field, &[1, 1])))
        .and_then(|h| h.with_comul_triples([(0, 0, 0, one.clone()), (1, 1, 1, one.clone())]))
        .and_then(|h| h.with_level(Level::Bialgebra))
        .expect("static monoid bialgebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_axioms;

    #[test]
    fn every_preset_passes_its_axioms() {
        for name in PRESET_NAMES
            .iter()
            .copied()
            .chain(["group:C1", "taft:4:5", "truncpoly:1"])
        {
            let h = preset(name).unwrap();
            let report = verify_axioms(&h);
            assert!(
                report.passes(),
                "{name}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
        assert!(verify_axioms(&monoid_bialgebra()).passes());
    }

    #[test]
    fn group_orders_and_labels() {
        assert_eq!(preset("group:S3").unwrap().dim(), 6);
        assert_eq!(preset("group:D4").unwrap().dim(), 8);
        let q8 = preset("group:Q8").unwrap();
        assert_eq!(q8.labels()[..3], ["1", "-1", "i"]);
        // i^2 = -1, ij = k
        let (i, j) = (q8.basis(2), q8.basis(4));
        assert_eq!(q8.mul(&i, &i), q8.basis(1));
        assert_eq!(q8.format_element(&q8.mul(&i, &j)), "k");
        assert!(!q8.is_commutative());
        assert_eq!(preset("group:S3").unwrap().labels()[0], "1");
    }

    #[test]
    fn taft_root_choice() {
        let f13 = Field::prime(13).unwrap();
        assert_eq!(smallest_primitive_root(f13, 3), Some(f13.from_int(3)));
        assert!(preset("taft:3:7").is_ok());
        assert!(preset("taft:5:13").is_err());
        assert!(preset("taft:3:15").is_err());
        let t = preset("taft:3:13").unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.labels()[3], "x");
    }

    #[test]
    fn truncpoly_is_augmented_only() {
        let a = preset("truncpoly:3").unwrap();
        assert_eq!(a.level(), Level::AugmentedAlgebra);
        assert!(!a.has_comul());
        assert_eq!(a.labels(), ["1", "X", "X^2"]);
    }

    #[test]
    fn malformed_names_are_rejected() {
        for bad in ["group:C0", "group:A5", "taft:3", "truncpoly:x", "nonsense"] {
            assert!(preset(bad).is_err(), "{bad}");
        }
    }
}
