//! Dense matrices over the rationals with exact elimination.
//!
//! Everything here is exact: determinants and inverses come from
//! Gauss–Jordan elimination over `Rational`, and there is an integer view
//! for matrices whose entries all have denominator 1.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, Int, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    Singular,
    RaggedRows,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ShapeMismatch { expected, got } => write!(
                f,
                "shape mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            MatrixError::Singular => write!(f, "matrix is singular"),
            MatrixError::RaggedRows => write!(f, "rows have differing lengths"),
        }
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        data.resize(rows * cols, Rational::zero());
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::RaggedRows);
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| crate::rational::rat(n)).collect())
                .collect(),
        )
    }

    /// Square diagonal matrix from the given entries.
    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::ShapeMismatch {
                expected: (self.cols, 1),
                got: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(crate::rational::is_integral)
    }

    /// Integer entries, row-major; `None` if any entry is not an integer.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<Int>>> {
        if !self.is_integral() {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| self.row(i).iter().map(|r| r.numer().clone()).collect())
                .collect(),
        )
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Rational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = a.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c) - &factor * a.get(col, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; `Err(Singular)` when the determinant vanishes.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Err(MatrixError::Singular);
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            for c in 0..n {
                let v = a.get(col, c) / &p;
                a.set(col, c, v);
                let w = inv.get(col, c) / &p;
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    let v = a.get(r, c) - &factor * a.get(col, c);
                    a.set(r, c, v);
                    let w = inv.get(r, c) - &factor * inv.get(col, c);
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel `{v : Mv = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut a = self.clone();
        let mut pivot_cols = Vec::new();
        let mut rank = 0usize;
        for col in 0..a.cols {
            let Some(pivot) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot, rank);
            let p = a.get(rank, col).clone();
            for c in 0..a.cols {
                let v = a.get(rank, c) / &p;
                a.set(rank, c, v);
            }
            for r in 0..a.rows {
                if r == rank || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..a.cols {
                    let v = a.get(r, c) - &factor * a.get(rank, c);
                    a.set(r, c, v);
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..a.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = crate::rational::vec_zero(a.cols);
            v[free] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Integer power; negative exponents go through the exact inverse.
    pub fn pow(&self, e: i64) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = Matrix::identity(self.rows);
        let mut acc = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &acc;
            }
            k >>= 1;
            if k > 0 {
                acc = &acc * &acc;
            }
        }
        Ok(result)
    }

    /// Block-diagonal assembly; blocks need not share a size.
    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(Matrix::rows).sum();
        let cols: usize = blocks.iter().map(Matrix::cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// The square submatrix of the given contiguous index range.
    pub fn submatrix(&self, row_start: usize, col_start: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(row_start + i, col_start + j).clone());
            }
        }
        m
    }

    /// Permutation matrix sending basis vector `perm[k]` to position `k`,
    /// i.e. `(P⁻¹ M P)` reorders a matrix written in the old basis into the
    /// order listed by `perm`.
    pub fn permutation(perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (k, &old) in perm.iter().enumerate() {
            m.set(old, k, Rational::one());
        }
        m
    }

    pub fn trace(&self) -> Result<Rational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) + a * b;
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

impl Mul<&Rational> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * rhs).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
