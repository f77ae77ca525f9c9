//! Dense exact matrix algebra over the Gaussian rationals.
//!
//! All kernels are fraction-exact: rank and solving go through Gauss–Jordan
//! elimination with first-nonzero pivoting (no numerical pivoting is needed
//! when arithmetic is exact), and the full-rank factorization keeps every
//! intermediate inside ℚ(i). Matrices are immutable values; every operation
//! returns a fresh matrix.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::GaussianRational;

/// Gaussian integer used internally by the fraction-free rank kernel.
#[derive(Clone)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    /// Division known to be exact (Bareiss guarantees divisibility).
    fn div_exact(&self, rhs: &Self) -> Self {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        Self { re: re / &norm, im: im / norm }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("{op}: dimension mismatch between {}x{} and {}x{}", lhs.0, lhs.1, rhs.0, rhs.1)]
    Dimension {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("{op}: matrix must be square, got {}x{}", shape.0, shape.1)]
    NotSquare { op: &'static str, shape: (usize, usize) },
    #[error("{op}: zero matrix not allowed")]
    ZeroMatrix { op: &'static str },
    #[error("{op}: matrix is singular")]
    Singular { op: &'static str },
}

/// Dense row-major matrix of exact complex-rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Result of Gauss–Jordan elimination: rank, pivot columns, and the RREF.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankProfile {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub rref: Matrix,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| GaussianRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix needs at least one row");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-entried matrix from row slices; handy for literals in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| GaussianRational::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    fn require_square(&self, op: &'static str) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare { op, shape: self.shape() })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.shape() != rhs.shape() {
            return Err(MatrixError::Dimension { op: "add", lhs: self.shape(), rhs: rhs.shape() });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::new(self.rows, self.cols, entries))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.shape() != rhs.shape() {
            return Err(MatrixError::Dimension { op: "sub", lhs: self.shape(), rhs: rhs.shape() });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::new(self.rows, self.cols, entries))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Dimension { op: "mul", lhs: self.shape(), rhs: rhs.shape() });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    let lhs = self.at(r, k);
                    if lhs.is_zero() {
                        continue;
                    }
                    let rhs_e = rhs.at(k, c);
                    if rhs_e.is_zero() {
                        continue;
                    }
                    acc = &acc + &(lhs * rhs_e);
                }
                entries.push(acc);
            }
        }
        Ok(Self::new(self.rows, rhs.cols, entries))
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self::new(self.rows, self.cols, self.entries.iter().map(|e| e * k).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from_int(-1))
    }

    /// `self^exp` for square matrices, with `A^0 = I`.
    pub fn pow(&self, exp: u32) -> Result<Self, MatrixError> {
        self.require_square("pow")?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Conjugate transpose: `result[j][i] = conj(self[i][j])`.
    pub fn conjugate_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.rows != rhs.rows {
            return Err(MatrixError::Dimension { op: "hstack", lhs: self.shape(), rhs: rhs.shape() });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs.at(r, c - self.cols).clone()
            }
        }))
    }

    /// Gauss–Jordan elimination to reduced row echelon form.
    ///
    /// Pivoting takes the first nonzero entry in each column; exactness makes
    /// any nonzero pivot equally valid.
    pub fn rank_profile(&self) -> RankProfile {
        let mut work = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_columns = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            let Some(src) = (pivot_row..rows).find(|&r| !work[r * cols + col].is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..cols {
                    work.swap(src * cols + c, pivot_row * cols + c);
                }
            }
            let pivot = work[pivot_row * cols + col].clone();
            let recip = pivot.checked_recip().expect("pivot is nonzero");
            for c in col..cols {
                let e = &work[pivot_row * cols + c];
                if !e.is_zero() {
                    work[pivot_row * cols + c] = e * &recip;
                }
            }
            // Snapshot of the normalized pivot row for the elimination pass.
            let pivot_tail: Vec<GaussianRational> =
                work[pivot_row * cols + col..(pivot_row + 1) * cols].to_vec();
            for r in 0..rows {
                if r == pivot_row || work[r * cols + col].is_zero() {
                    continue;
                }
                let factor = work[r * cols + col].clone();
                for (offset, p) in pivot_tail.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let idx = r * cols + col + offset;
                    work[idx] = &work[idx] - &(&factor * p);
                }
            }
            pivot_columns.push(col);
            pivot_row += 1;
        }
        RankProfile {
            rank: pivot_columns.len(),
            pivot_columns,
            rref: Matrix::new(rows, cols, work),
        }
    }

    /// Rank by fraction-free Bareiss elimination over the Gaussian integers.
    ///
    /// Denominators are cleared per row first; every interior division in the
    /// Bareiss recurrence is exact, so no gcd work is spent keeping fractions
    /// canonical. Much cheaper than [`Self::rank_profile`] when the echelon
    /// form itself is not needed.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut work: Vec<GaussInt> = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let mut lcm = BigInt::one();
            for c in 0..cols {
                let e = self.at(r, c);
                lcm = lcm.lcm(e.re().denom());
                lcm = lcm.lcm(e.im().denom());
            }
            for c in 0..cols {
                let e = self.at(r, c);
                work.push(GaussInt {
                    re: e.re().numer() * (&lcm / e.re().denom()),
                    im: e.im().numer() * (&lcm / e.im().denom()),
                });
            }
        }
        let mut rank = 0usize;
        let mut prev = GaussInt { re: BigInt::one(), im: BigInt::zero() };
        for col in 0..cols {
            if rank >= rows {
                break;
            }
            let Some(src) = (rank..rows).find(|&r| !work[r * cols + col].is_zero()) else {
                continue;
            };
            if src != rank {
                for c in col..cols {
                    work.swap(src * cols + c, rank * cols + c);
                }
            }
            let pivot = work[rank * cols + col].clone();
            for r in (rank + 1)..rows {
                let lead = work[r * cols + col].clone();
                for c in col..cols {
                    let num = &pivot.mul(&work[r * cols + c]).sub(&lead.mul(&work[rank * cols + c]));
                    work[r * cols + c] = num.div_exact(&prev);
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Any exact `X` with `self · X = rhs` when the system is consistent,
    /// `None` otherwise. Free variables are set to zero.
    pub fn solve_linear(&self, rhs: &Self) -> Result<Option<Self>, MatrixError> {
        if self.rows != rhs.rows {
            return Err(MatrixError::Dimension { op: "solve", lhs: self.shape(), rhs: rhs.shape() });
        }
        let aug = self.hstack(rhs)?;
        let profile = aug.rank_profile();
        // A pivot landing in the right-hand block means an inconsistent row.
        if profile.pivot_columns.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (row, &col) in profile.pivot_columns.iter().enumerate() {
            for j in 0..rhs.cols {
                x.entries[col * rhs.cols + j] = profile.rref.at(row, self.cols + j).clone();
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        self.require_square("inverse")?;
        match self.solve_linear(&Self::identity(self.rows))? {
            Some(x) => Ok(x),
            None => Err(MatrixError::Singular { op: "inverse" }),
        }
    }

    /// Full-rank factorization `self = F·G` with `F` the pivot columns of
    /// `self` and `G` the nonzero rows of its RREF.
    pub fn full_rank_factorization(&self) -> Result<(Self, Self), MatrixError> {
        if self.is_zero() {
            return Err(MatrixError::ZeroMatrix { op: "full_rank_factorization" });
        }
        let profile = self.rank_profile();
        let r = profile.rank;
        let f = Self::from_fn(self.rows, r, |i, j| self.at(i, profile.pivot_columns[j]).clone());
        let g = Self::from_fn(r, self.cols, |i, j| profile.rref.at(i, j).clone());
        Ok((f, g))
    }

    /// Column-space containment: `range(self) ⊆ range(rhs)`.
    pub fn range_contained(&self, rhs: &Self) -> Result<bool, MatrixError> {
        if self.rows != rhs.rows {
            return Err(MatrixError::Dimension { op: "range", lhs: self.shape(), rhs: rhs.shape() });
        }
        Ok(rhs.hstack(self)?.rank() == rhs.rank())
    }

    /// Column-space equality, i.e. containment both ways.
    pub fn range_equal(&self, rhs: &Self) -> Result<bool, MatrixError> {
        Ok(self.range_contained(rhs)? && rhs.range_contained(self)?)
    }

    pub fn is_idempotent(&self) -> Result<bool, MatrixError> {
        self.require_square("is_idempotent")?;
        Ok(self.pow(2)? == *self)
    }

    /// Nilpotency test at the Cayley–Hamilton bound: `self^n = 0` for `n = rows`.
    pub fn is_nilpotent(&self) -> Result<bool, MatrixError> {
        self.require_square("is_nilpotent")?;
        Ok(self.pow(self.rows as u32)?.is_zero())
    }

    pub fn is_hermitian(&self) -> Result<bool, MatrixError> {
        self.require_square("is_hermitian")?;
        Ok(self.conjugate_transpose() == *self)
    }

    pub fn is_invertible(&self) -> Result<bool, MatrixError> {
        self.require_square("is_invertible")?;
        Ok(self.rank() == self.rows)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("shape mismatch in add")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("shape mismatch in sub")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("shape mismatch in mul")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
