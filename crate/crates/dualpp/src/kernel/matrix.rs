//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Q};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S = Q> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Field> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diag(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in entries.into_iter().enumerate() {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, S> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {bad} has length {}, expected {c}",
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer rows, mainly for fixtures.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<S>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| S::from_i64(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
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

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c.mul_ref(x)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -self.transpose()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, x);
                }
                acc
            })
            .collect()
    }

    /// Checked product.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, S> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j].add_mul(a, rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shapes differ"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce(None)
    }

    /// Reduces `self` to reduced row echelon form, applying the same row
    /// operations to `companion`; returns the rank.
    fn row_reduce(&mut self, mut companion: Option<&mut Matrix<S>>) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot, rank);
            if let Some(c) = companion.as_deref_mut() {
                c.swap_rows(pivot, rank);
            }
            let inv = S::one().div_ref(self.get(rank, col));
            self.scale_row(rank, &inv);
            if let Some(c) = companion.as_deref_mut() {
                c.scale_row(rank, &inv);
            }
            for r in 0..rows {
                if r == rank || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = -self.get(r, col).clone();
                self.add_row_multiple(r, rank, &factor);
                if let Some(c) = companion.as_deref_mut() {
                    c.add_row_multiple(r, rank, &factor);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &S) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = x.mul_ref(c);
        }
    }

    /// row[target] += c * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: &S) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            self.data[target * self.cols + j].add_mul(c, &s);
        }
    }
}

/// Flip on coefficient matrices of `A⊗A`: τ(u⊗v) = v⊗u is the transpose.
pub fn flip<S: Field>(m: &Matrix<S>) -> Result<Matrix<S>, S> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "flip needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    Ok(m.transpose())
}

/// Kronecker product: entry ((i·p + k), (j·q + l)) = a[i][j]·b[k][l] where b is p×q.
pub fn kron<S: Field>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let (p, q) = (b.rows, b.cols);
    let mut out = Matrix::zeros(a.rows * p, a.cols * q);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..p {
                for l in 0..q {
                    out.set(i * p + k, j * q + l, x.mul_ref(b.get(k, l)));
                }
            }
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn invert<S: Field>(m: &Matrix<S>) -> Result<Matrix<S>, S> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "inverse needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut work = m.clone();
    let mut inv = Matrix::identity(n);
    let rank = work.row_reduce(Some(&mut inv));
    if rank < n {
        return Err(Error::NotInvertible { rank, size: n });
    }
    Ok(inv)
}

impl<S: Field> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Self) -> Matrix<S> {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }
}

impl<S: Field> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Self) -> Matrix<S> {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }
}

impl<S: Field> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Self) -> Matrix<S> {
        self.try_mul(rhs).expect("matrix shapes incompatible for product")
    }
}

impl<S: Field> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.scale(&-S::one())
    }
}

impl<S: Field> Add for Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Self) -> Matrix<S> {
        &self + &rhs
    }
}

impl<S: Field> Sub for Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Self) -> Matrix<S> {
        &self - &rhs
    }
}

impl<S: Field> Mul for Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Self) -> Matrix<S> {
        &self * &rhs
    }
}

impl<S: Field> Neg for Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        -&self
    }
}

impl<S: Field> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::frac;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&Matrix::<Q>::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(flip(&m(&[&[0, 1], &[0, 0]])).unwrap(), m(&[&[0, 0], &[1, 0]]));
        assert!(matches!(flip(&Matrix::<Q>::zeros(2, 3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Matrix::<Q>::identity(2), &Matrix::identity(2)), Matrix::identity(4));
        assert!(kron(&Matrix::<Q>::zeros(2, 2), &m(&[&[1, 2], &[3, 4]])).is_zero());
        assert_eq!(kron(&m(&[&[1, 0], &[0, 2]]), &m(&[&[3]])), m(&[&[3, 0], &[0, 6]]));
    }

    #[test]
    fn kron_block_convention() {
        // (f⊗g)(e_i⊗e_p) = f(e_i)⊗g(e_p) with index i·m+p.
        let f = m(&[&[0, 1], &[0, 0]]);
        let g = m(&[&[1, 0], &[0, 0]]);
        let k = kron(&f, &g);
        assert_eq!(k.get(0, 2), &Q::from_i64(1));
        assert_eq!(k.column(2).iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&Matrix::<Q>::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(
            invert(&m(&[&[2]])).unwrap(),
            Matrix::from_rows(vec![vec![frac(1, 2)]]).unwrap()
        );
        assert_eq!(
            invert(&m(&[&[1, 1], &[1, 1]])),
            Err(Error::NotInvertible { rank: 1, size: 2 })
        );
    }

    #[test]
    fn rank_of_rectangular() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0], &[0, 1]]).rank(), 1);
    }
}
