use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Field, data: Vec<Scalar>) -> Self {
        debug_assert!(data.iter().all(|s| s.field() == field));
        Vector { field, data }
    }

    pub fn zeros(field: Field, len: usize) -> Self {
        Vector {
            field,
            data: vec![field.zero(); len],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(field: Field, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.data[i] = field.one();
        v
    }

    pub fn from_ints(field: Field, ints: &[i64]) -> Self {
        Vector {
            field,
            data: ints.iter().map(|&n| field.from_int(n)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        self.data[i] = s;
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    /// `(index, coefficient)` for the nonzero coordinates.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.data.iter().enumerate().filter(|(_, s)| !s.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            field: self.field,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&-self.field.one())
    }

    /// `self += s * other`.
    pub fn axpy(&mut self, s: &Scalar, other: &Vector) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let mut acc = self.field.zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc + a * b;
            }
        }
        acc
    }

    /// Tensor product of coordinate vectors, index `i * other.len() + j`.
    pub fn kron_vec(&self, other: &Vector) -> Vector {
        let mut data = Vec::with_capacity(self.len() * other.len());
        for a in &self.data {
            for b in &other.data {
                data.push(a * b);
            }
        }
        Vector::new(self.field, data)
    }

    /// Returns `Some(c)` when `self == c * other`.
    pub fn scalar_multiple_of(&self, other: &Vector) -> Option<Scalar> {
        let (i, pivot) = other.nonzeros().next()?;
        let c = self.data[i].div_ref(pivot).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix. As a linear map, column `j` holds the image of
/// the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        if rows.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch("matrix entries".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(field: Field, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&n| field.from_int(n)).collect())
            .collect();
        Self::from_rows(field, data).expect("consistent integer rows")
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, s) in col.nonzeros() {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.data[i * self.cols + j] = s;
    }

    pub fn add_at(&mut self, i: usize, j: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let k = i * self.cols + j;
        self.data[k] = &self.data[k] + s;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(
            self.field,
            self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        )
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new(
            self.field,
            (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        )
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// `(row, col, coefficient)` for the nonzero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(k, s)| (k / cols, k % cols, s))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let s = self.get(i, j);
                    if i == j {
                        s.is_one()
                    } else {
                        s.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for (i, j, s) in self.nonzeros() {
            t.set(j, i, s.clone());
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("matrix product".into()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for (i, k, a) in self.nonzeros() {
            let row = &other.data[k * other.cols..(k + 1) * other.cols];
            for (j, b) in row.iter().enumerate() {
                if !b.is_zero() {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field() {
            return Err(Error::FieldMismatch("matrix-vector product".into()));
        }
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vector::zeros(self.field, self.rows);
        for (j, x) in v.nonzeros() {
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.set(i, out.get(i) + &(a * x));
                }
            }
        }
        Ok(out)
    }

    /// Applies the map; panics on dimension mismatch.
    pub fn apply(&self, v: &Vector) -> Vector {
        self.mul_vec(v).expect("matrix application")
    }

    /// Row-major entries as a vector.
    pub fn flatten(&self) -> Vector {
        Vector::new(self.field, self.data.clone())
    }

    /// Inverse of [`Matrix::flatten`].
    pub fn from_flat(rows: usize, cols: usize, v: &Vector) -> Matrix {
        assert_eq!(v.len(), rows * cols, "flat length mismatch");
        Matrix {
            field: v.field(),
            rows,
            cols,
            data: v.as_slice().to_vec(),
        }
    }

    /// Kronecker product, with row-major index pairing `(i, j) -> i * n + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in other.nonzeros() {
                out.set(i * other.rows + k, j * other.cols + l, a * b);
            }
        }
        out
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Gauss-Jordan elimination. Pivots are chosen deterministically: the
    /// first row (from the top) with a nonzero entry in the leftmost column
    /// that still has one.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..m.cols {
                    let k = r * m.cols + j;
                    if !m.data[k].is_zero() {
                        m.data[k] = &m.data[k] * &inv;
                    }
                }
            }
            let support: Vec<usize> = (c..m.cols).filter(|&j| !m.get(r, j).is_zero()).collect();
            let pivot_row: Vec<Scalar> = support.iter().map(|&j| m.get(r, j).clone()).collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (&j, pv) in support.iter().zip(&pivot_row) {
                    let k = i * m.cols + j;
                    m.data[k] = &m.data[k] - &(&factor * pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A solution of `self * x = b` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if self.field != b.field() {
            return Err(Error::FieldMismatch("solve right-hand side".into()));
        }
        if self.rows != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows but right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, j, s) in self.nonzeros() {
            aug.set(i, j, s.clone());
        }
        for (i, s) in b.nonzeros() {
            aug.set(i, self.cols, s.clone());
        }
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            x.set(c, ech.reduced.get(r, self.cols).clone());
        }
        Ok(Some(x))
    }

    /// Reduced-echelon basis of the null space, one vector per free column
    /// in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.set(f, self.field.one());
                for (r, &c) in ech.pivots.iter().enumerate() {
                    let s = ech.reduced.get(r, f);
                    if !s.is_zero() {
                        v.set(c, -s);
                    }
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for (i, j, s) in self.nonzeros() {
            aug.set(i, j, s.clone());
        }
        for i in 0..n {
            aug.set(i, n + i, self.field.one());
        }
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, ech.reduced.get(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }

    pub fn pow(&self, mut exp: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut sq = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Smallest `n <= bound` with `self^n = I`.
    pub fn order(&self, bound: u64) -> Result<Option<u64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut power = self.clone();
        for n in 1..=bound {
            if power.is_identity() {
                return Ok(Some(n));
            }
            power = power.mul(self)?;
        }
        Ok(None)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

/// Exact solve; see [`Matrix::solve`].
pub fn solve_linear(a: &Matrix, b: &Vector) -> Result<Option<Vector>> {
    a.solve(b)
}

pub fn kernel_basis(a: &Matrix) -> Vec<Vector> {
    a.kernel_basis()
}

pub fn matrix_order(m: &Matrix, bound: u64) -> Result<Option<u64>> {
    m.order(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(q(), 2);
        let b = Vector::from_ints(q(), &[1, 2]);
        assert_eq!(solve_linear(&a, &b).unwrap(), Some(b));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_int_rows(q(), &[&[1, 1], &[2, 2]]);
        let b = Vector::from_ints(q(), &[1, 3]);
        assert_eq!(solve_linear(&a, &b).unwrap(), None);
    }

    #[test]
    fn solve_mod_five() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::from_int_rows(f5, &[&[2]]);
        let b = Vector::from_ints(f5, &[3]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(x, Vector::from_ints(f5, &[4]));
    }

    #[test]
    fn solve_rejects_field_mismatch() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::identity(q(), 1);
        let b = Vector::from_ints(f5, &[1]);
        assert!(matches!(solve_linear(&a, &b), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let a = Matrix::from_int_rows(q(), &[&[1, 1, 0]]);
        let b = Vector::from_ints(q(), &[5]);
        assert_eq!(
            solve_linear(&a, &b).unwrap(),
            Some(Vector::from_ints(q(), &[5, 0, 0]))
        );
    }

    #[test]
    fn kernel_cases() {
        assert!(kernel_basis(&Matrix::identity(q(), 3)).is_empty());
        let z = Matrix::zeros(q(), 2, 2);
        assert_eq!(
            kernel_basis(&z),
            vec![
                Vector::from_ints(q(), &[1, 0]),
                Vector::from_ints(q(), &[0, 1])
            ]
        );
        let a = Matrix::from_int_rows(q(), &[&[1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k, vec![Vector::from_ints(q(), &[-1, 1])]);
        assert!(a.apply(&k[0]).is_zero());
    }

    #[test]
    fn orders() {
        assert_eq!(matrix_order(&Matrix::identity(q(), 3), 5).unwrap(), Some(1));
        let rot = Matrix::from_int_rows(q(), &[&[0, -1], &[1, 0]]);
        assert_eq!(matrix_order(&rot, 8).unwrap(), Some(4));
        let two = Matrix::from_int_rows(q(), &[&[2]]);
        assert_eq!(matrix_order(&two, 10).unwrap(), None);
        let rect = Matrix::zeros(q(), 1, 2);
        assert!(matches!(
            matrix_order(&rect, 3),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let a = Matrix::from_int_rows(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse().unwrap(), None);
        let b = Matrix::from_int_rows(q(), &[&[1, 2], &[3, 4]]);
        let inv = b.inverse().unwrap().unwrap();
        assert!(inv.mul(&b).unwrap().is_identity());
    }

    #[test]
    fn kron_pairs_row_major() {
        let a = Matrix::from_int_rows(q(), &[&[1, 2]]);
        let b = Matrix::from_int_rows(q(), &[&[0], &[1]]);
        let k = a.kron(&b);
        assert_eq!(k, Matrix::from_int_rows(q(), &[&[0, 0], &[1, 2]]));
    }
}
