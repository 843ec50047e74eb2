//! Dense exact matrices and elimination.
//!
//! Everything here is deterministic: pivots are the first nonzero entry
//! scanning top-down, kernel bases follow the reduced-echelon convention
//! (identity pattern on the free coordinates, ascending), and `solve` returns
//! the particular solution with all free variables at zero.  Matrices with
//! zero rows or zero columns are first-class values.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from a function of the index pair.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from row-major flat data.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        Matrix { rows, cols, data }
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * k.clone()
        })
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Column vector (n×1) from a slice.
    pub fn col_vec(entries: &[T]) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    /// Select the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let pivot = m[(row, col)].clone();
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() / pivot.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let delta = factor.clone() * m[(row, j)].clone();
                        m[(r, j)] = m[(r, j)].clone() - delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space as matrix columns.
    ///
    /// One column per free column of `self`, ascending; each basis vector has
    /// a 1 in its free coordinate and zeros in the other free coordinates, so
    /// the basis is the canonical reduced one and the result is deterministic.
    pub fn kernel_basis(&self) -> Self {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (idx, &fc) in free.iter().enumerate() {
            k[(fc, idx)] = T::one();
            for (prow, &pcol) in ech.pivots.iter().enumerate() {
                k[(pcol, idx)] = -ech.reduced[(prow, fc)].clone();
            }
        }
        k
    }

    /// Solve `self * X = b` exactly.
    ///
    /// `Ok(None)` when the system is inconsistent; otherwise the particular
    /// solution with every free variable set to zero.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {}x{} vs rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let ech = self.hstack(b).rref();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (prow, &pcol) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pcol, j)] = ech.reduced[(prow, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let ech = self.hstack(&Self::identity(self.rows)).rref();
        if ech.pivots.len() != self.rows || ech.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        Some(Self::from_fn(self.rows, self.rows, |i, j| {
            ech.reduced[(i, self.cols + j)].clone()
        }))
    }

    /// Determinant by elimination (square matrices only).
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return T::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone() / pivot.clone();
                    for j in col..n {
                        let delta = factor.clone() * m[(col, j)].clone();
                        m[(r, j)] = m[(r, j)].clone() - delta;
                    }
                }
            }
        }
        det
    }
}

/// Result of row reduction.
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

/// Invertible change-of-basis pair splitting a differential into 0 ⊕ 1.
///
/// For `d` with `k = dim ker d` and `r = rank d`, the bases order the domain
/// as kernel ⊕ complement and the codomain as cokernel-lift ⊕ image, so that
/// `p0 · d · p1⁻¹` is zero except for an identity block in the last `r`
/// coordinates of both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting<T> {
    pub p1: Matrix<T>,
    pub p0: Matrix<T>,
    pub p1_inv: Matrix<T>,
    pub p0_inv: Matrix<T>,
    pub kernel_dim: usize,
    pub rank: usize,
}

impl<T: Scalar> Splitting<T> {
    /// The normal form `p0 · d · p1⁻¹`: zeros with a trailing identity block.
    pub fn normal_form(&self) -> Matrix<T> {
        let rows = self.p0.rows();
        let cols = self.p1.rows();
        let mut b = Matrix::zeros(rows, cols);
        for i in 0..self.rank {
            b[(rows - self.rank + i, self.kernel_dim + i)] = T::one();
        }
        b
    }
}

/// Split a differential `d` into kernel/image coordinates.
///
/// Returns invertible `p1` (domain side) and `p0` (codomain side) with
/// `p0 · d · p1⁻¹` in the normal form described on [`Splitting`].
pub fn split_complex<T: Scalar>(d: &Matrix<T>) -> Splitting<T> {
    let ech = d.rref();
    let pivot_cols = ech.pivots.clone();
    let r = pivot_cols.len();
    let kernel = d.kernel_basis();
    let k = kernel.cols();

    // Domain basis: kernel columns, then the standard vectors at pivot columns
    // (independent of the kernel because the pivot columns of d are independent).
    let mut t1 = kernel;
    let std_at = |n: usize, idx: &[usize]| {
        Matrix::from_fn(
            n,
            idx.len(),
            |i, j| if i == idx[j] { T::one() } else { T::zero() },
        )
    };
    t1 = if r > 0 {
        t1.hstack(&std_at(d.cols(), &pivot_cols))
    } else {
        t1
    };

    // Codomain basis: standard vectors away from the image's pivot rows, then
    // the image basis (the pivot columns of d).
    let image = d.select_cols(&pivot_cols);
    let pivot_rows = image.transpose().rref().pivots;
    let non_pivot_rows: Vec<usize> = (0..d.rows()).filter(|i| !pivot_rows.contains(i)).collect();
    let t0 = std_at(d.rows(), &non_pivot_rows).hstack(&image);

    let p1 = t1
        .inverse()
        .expect("domain basis is invertible by construction");
    let p0 = t0
        .inverse()
        .expect("codomain basis is invertible by construction");
    Splitting {
        p1,
        p0,
        p1_inv: t1,
        p0_inv: t0,
        kernel_dim: k,
        rank: r,
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "add shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "sub shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "mul inner dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !rhs[(k, j)].is_zero() {
                    acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
                }
            }
            acc
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
