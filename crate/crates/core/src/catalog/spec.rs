//! JSON interchange format. Scalars are strings so values stay exact.
//! The antipode is a dense list of rows with row `i` holding `S(e_i)`; the
//! optional `frobenius` entry supplies a preferred Frobenius functional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Vector};
use crate::hopf::{verify_axioms, HopfData, Level};

pub type Triple = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
    pub level: Level,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<Vec<String>>,
}

fn scalar_strings(v: &Vector) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn parse_vector(field: Field, dim: usize, what: &str, raw: &[String]) -> Result<Vector> {
    if raw.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{what} has {} entries, expected {dim}",
            raw.len()
        )));
    }
    let data = raw
        .iter()
        .enumerate()
        .map(|(i, s)| parse_at(field, &format!("{what}[{i}]"), s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Vector::new(field, data))
}

fn parse_at(field: Field, location: &str, s: &str) -> Result<Scalar> {
    field.parse(s).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse {
            location: location.to_string(),
            message,
        },
        other => other,
    })
}

fn parse_triples(
    field: Field,
    dim: usize,
    what: &str,
    raw: &[Triple],
) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    raw.iter()
        .enumerate()
        .map(|(n, (i, j, k, s))| {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "{what}[{n}] = [{i}, {j}, {k}] with dim {dim}"
                )));
            }
            Ok((*i, *j, *k, parse_at(field, &format!("{what}[{n}]"), s)?))
        })
        .collect()
}

impl AlgebraSpec {
    pub fn from_hopf(h: &HopfData) -> AlgebraSpec {
        let n = h.dim();
        let mul = (0..n * n)
            .flat_map(|ij| {
                h.mul_entries(ij / n, ij % n)
                    .iter()
                    .map(move |(k, s)| (ij / n, ij % n, *k, s.to_string()))
            })
            .collect();
        let comul = h.has_comul().then(|| {
            (0..n)
                .flat_map(|i| {
                    h.comul_entries(i)
                        .iter()
                        .map(move |(j, k, s)| (i, *j, *k, s.to_string()))
                })
                .collect()
        });
        AlgebraSpec {
            field: h.field(),
            dim: n,
            basis: h.labels().to_vec(),
            unit: scalar_strings(h.unit()),
            mul,
            comul,
            counit: h.counit().map(scalar_strings),
            antipode: h
                .antipode()
                .map(|s| (0..n).map(|i| scalar_strings(&s.column(i))).collect()),
            level: h.level(),
            frobenius: h.frobenius_hint().map(scalar_strings),
        }
    }

    /// Builds the structure without checking axioms.
    pub fn build_unchecked(&self) -> Result<HopfData> {
        let (field, dim) = (self.field, self.dim);
        if let Field::Prime { p } = field {
            Field::prime(p)?;
        }
        if self.basis.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} labels, dim is {dim}",
                self.basis.len()
            )));
        }
        let unit = parse_vector(field, dim, "unit", &self.unit)?;
        let mul = parse_triples(field, dim, "mul", &self.mul)?;
        let mut h = HopfData::from_mul_triples(field, self.basis.clone(), unit, mul)?;
        if let Some(eps) = &self.counit {
            h = h.with_counit(parse_vector(field, dim, "counit", eps)?)?;
        }
        if let Some(comul) = &self.comul {
            h = h.with_comul_triples(parse_triples(field, dim, "comul", comul)?)?;
        }
        if let Some(rows) = &self.antipode {
            if rows.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "antipode has {} rows, dim is {dim}",
                    rows.len()
                )));
            }
            let images = rows
                .iter()
                .enumerate()
                .map(|(i, r)| parse_vector(field, dim, &format!("antipode[{i}]"), r))
                .collect::<Result<Vec<_>>>()?;
            h = h.with_antipode(Matrix::from_columns(field, dim, &images))?;
        }
        if let Some(phi) = &self.frobenius {
            h = h.with_frobenius_hint(parse_vector(field, dim, "frobenius", phi)?)?;
        }
        h.with_level(self.level)
    }

    /// Builds and rejects structures failing any axiom at the declared level,
    /// listing every failure with its witness.
    pub fn build(&self) -> Result<HopfData> {
        let h = self.build_unchecked()?;
        let report = verify_axioms(&h);
        if report.passes() {
            return Ok(h);
        }
        let failures: Vec<String> = report.failures().map(ToString::to_string).collect();
        Err(Error::AxiomFailure(failures.join("; ")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialization")
    }

    pub fn from_json(text: &str) -> Result<AlgebraSpec> {
        serde_json::from_str(text).map_err(json_error)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_spec(path: impl AsRef<Path>) -> Result<HopfData> {
    AlgebraSpec::from_json(&read(path.as_ref())?)?.build()
}

/// An embedding file: a JSON list of rows, row `i` holding the image of the
/// `i`-th basis element of the subalgebra. Returned with images as columns.
pub fn parse_embedding(text: &str, field: Field) -> Result<Matrix> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(json_error)?;
    let width = rows.first().map_or(0, Vec::len);
    let images = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(field, width, &format!("embedding[{i}]"), r))
        .collect::<Result<Vec<_>>>()?;
    if images.is_empty() {
        return Err(Error::DimensionMismatch("empty embedding".into()));
    }
    Ok(Matrix::from_columns(field, width, &images))
}

pub fn load_embedding(path: impl AsRef<Path>, field: Field) -> Result<Matrix> {
    parse_embedding(&read(path.as_ref())?, field)
}

pub fn embedding_to_json(iota: &Matrix) -> String {
    let rows: Vec<Vec<String>> = (0..iota.cols())
        .map(|i| scalar_strings(&iota.column(i)))
        .collect();
    serde_json::to_string_pretty(&rows).expect("embedding serialization")
}
