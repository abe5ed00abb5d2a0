use fhalg::exact::{Field, Matrix, Scalar, Vector};
use proptest::prelude::*;

fn matrix_strategy(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c)))
}

fn square_strategy(max: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1..=max).prop_flat_map(|n| (Just(n), prop::collection::vec(-3i64..=3, n * n)))
}

fn build(field: Field, rows: usize, cols: usize, data: &[i64]) -> Matrix {
    let rows: Vec<Vec<Scalar>> = data
        .chunks(cols)
        .take(rows)
        .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
        .collect();
    Matrix::from_rows(field, rows).unwrap()
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Scalar>], field: Field) -> Scalar {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, s)| s.clone())
                    .collect()
            })
            .collect();
        let term = a * &cofactor_det(&minor, field);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn dense(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).into_vec()).collect()
}

/// The adjugate formula, entry by entry.
fn adjugate_inverse(m: &Matrix) -> Option<Matrix> {
    let field = m.field();
    let d = dense(m);
    let det = cofactor_det(&d, field);
    if det.is_zero() {
        return None;
    }
    let n = m.rows();
    let det_inv = det.inv().unwrap();
    let mut out = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Scalar>> = d
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, s)| s.clone())
                        .collect()
                })
                .collect();
            let c = cofactor_det(&minor, field);
            let signed = if (i + j) % 2 == 0 { c } else { -c };
            out.set(i, j, signed * &det_inv);
        }
    }
    Some(out)
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(13).unwrap())
    ]
}

proptest! {
    #[test]
    fn solutions_resubstitute((r, c, data) in matrix_strategy(5), rhs in prop::collection::vec(-4i64..=4, 5), field in fields()) {
        let a = build(field, r, c, &data);
        let b = Vector::from_ints(field, &rhs[..r]);
        if let Some(x) = a.solve(&b).unwrap() {
            prop_assert_eq!(a.apply(&x), b);
        } else {
            // Inconsistent: appending b raises the rank.
            let mut cols = a.columns();
            cols.push(b);
            prop_assert!(Matrix::from_columns(field, r, &cols).rank() > a.rank());
        }
    }

    #[test]
    fn kernel_is_exact((r, c, data) in matrix_strategy(5), field in fields()) {
        let a = build(field, r, c, &data);
        let kernel = a.kernel_basis();
        prop_assert_eq!(kernel.len() + a.rank(), c);
        for v in &kernel {
            prop_assert!(a.apply(v).is_zero());
        }
        if !kernel.is_empty() {
            prop_assert_eq!(Matrix::from_columns(field, c, &kernel).rank(), kernel.len());
        }
    }

    #[test]
    fn inverse_matches_adjugate((n, data) in square_strategy(4), field in fields()) {
        let a = build(field, n, n, &data);
        prop_assert_eq!(a.inverse().unwrap(), adjugate_inverse(&a));
        prop_assert_eq!(a.rank() == n, !cofactor_det(&dense(&a), field).is_zero());
    }

    #[test]
    fn field_axioms(x in -50i64..50, y in -50i64..50, z in 1i64..50, field in fields()) {
        let (a, b, c) = (field.from_int(x), field.from_int(y), field.from_int(z));
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        if !c.is_zero() {
            prop_assert!((c.inv().unwrap() * &c).is_one());
        }
        prop_assert_eq!(field.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rationals_survive_overflow(x in i64::MAX / 2..i64::MAX, y in 2i64..1000) {
        let q = Field::Rational;
        let a = q.from_int(x);
        let big = &a * &a * &a;
        let back = big * a.inv().unwrap() * a.inv().unwrap();
        prop_assert_eq!(back, a.clone());
        let frac = q.fraction(x, y).unwrap();
        prop_assert_eq!(frac * q.from_int(y), a);
    }
}
