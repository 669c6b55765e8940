use std::ops::{Add, Deref, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::eig::{hermitian_eig_unchecked, EigenDecomposition};
use super::{Real, Scalar, Vector};
use crate::error::{FrameError, Result};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Scalar<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from real rows; panics on ragged input.
    pub fn from_real_rows(rows: &[&[T]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Complex::new(rows[i][j], T::zero()))
    }

    pub fn diagonal(values: &[T]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(values[i], T::zero())
            } else {
                Complex::zero()
            }
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector<T>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows));
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
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

    pub fn column(&self, j: usize) -> Vector<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vector<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, alpha: T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.scale(alpha)).collect(),
        }
    }

    pub fn apply(&self, v: &Vector<T>) -> Vector<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter()
                    .zip(v.iter())
                    .fold(Complex::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `self += alpha * u u*`.
    pub fn add_outer_assign(&mut self, alpha: T, u: &Vector<T>) {
        assert!(self.is_square() && self.rows == u.len());
        let n = self.rows;
        for i in 0..n {
            let ui = u[i].scale(alpha);
            for j in 0..n {
                self.data[i * n + j] += ui * u[j].conj();
            }
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// `||self - self*||_F`.
    pub fn hermitian_residual(&self) -> T {
        if !self.is_square() {
            return T::infinity();
        }
        let n = self.rows;
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Symmetry residual relative to `max(1, ||M||_F)`.
    pub fn relative_hermitian_residual(&self) -> T {
        self.hermitian_residual() / T::one().max(self.frobenius_norm())
    }

    pub fn trace(&self) -> Scalar<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `(M + M*) / 2`; only meaningful for square matrices.
    pub fn hermitian_part(&self) -> Self {
        assert!(self.is_square());
        let half = T::lit(0.5);
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()).scale(half)
        })
    }

    pub fn data(&self) -> &[Scalar<T>] {
        &self.data
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Scalar<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Real> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }
}

/// Square matrix that is exactly Hermitian after construction.
///
/// Validated constructors accept residual asymmetry up to `τ_herm·||M||_F`
/// and then store the Hermitian part.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T>(Matrix<T>);

impl<T: Real> HermitianMatrix<T> {
    pub fn new(m: Matrix<T>) -> Result<Self> {
        Self::with_tolerance(m, T::tolerances().herm)
    }

    pub fn with_tolerance(m: Matrix<T>, tol: T) -> Result<Self> {
        if !m.is_square() {
            return Err(FrameError::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let residual = m.hermitian_residual();
        let norm = m.frobenius_norm();
        if !m.is_finite() || residual > tol * norm {
            return Err(FrameError::NotHermitian {
                residual: (residual / norm.max(T::min_positive_value())).as_f64(),
            });
        }
        Ok(HermitianMatrix(m.hermitian_part()))
    }

    /// Wraps a matrix that is Hermitian by construction (for example a sum
    /// of outer products), symmetrizing away rounding.
    pub fn from_hermitian_parts(m: Matrix<T>) -> Self {
        HermitianMatrix(m.hermitian_part())
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix(Matrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix(Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn eig(&self) -> Result<EigenDecomposition<T>> {
        hermitian_eig_unchecked(&self.0)
    }

    /// `<M f, f>`, real for Hermitian `M`.
    pub fn quadratic_form(&self, f: &Vector<T>) -> T {
        self.0.apply(f).inner(f).re
    }
}

impl<T> Deref for HermitianMatrix<T> {
    type Target = Matrix<T>;
    fn deref(&self) -> &Matrix<T> {
        &self.0
    }
}
