use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{Real, Scalar};

/// Element of `C^d` (or `R^d` when every imaginary part is zero).
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T> {
    entries: Vec<Scalar<T>>,
}

impl<T: Real> Vector<T> {
    pub fn new(entries: Vec<Scalar<T>>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![Complex::zero(); dim],
        }
    }

    pub fn from_real(values: &[T]) -> Self {
        Vector {
            entries: values.iter().map(|&x| Complex::new(x, T::zero())).collect(),
        }
    }

    /// Standard basis vector `e_k` of length `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[k] = Complex::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar<T>> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar<T>> {
        self.entries.iter()
    }

    /// Inner product `<self, other>`, linear in `self` and conjugate-linear in `other`.
    pub fn inner(&self, other: &Self) -> Scalar<T> {
        debug_assert_eq!(self.len(), other.len());
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Complex::zero(), |acc, (a, b)| acc + a * b.conj())
    }

    pub fn norm_sqr(&self) -> T {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, alpha: Scalar<T>) -> Self {
        Vector {
            entries: self.entries.iter().map(|z| z * alpha).collect(),
        }
    }

    pub fn scale_real(&self, alpha: T) -> Self {
        Vector {
            entries: self.entries.iter().map(|z| z.scale(alpha)).collect(),
        }
    }

    /// `self += alpha * x`.
    pub fn axpy(&mut self, alpha: Scalar<T>, x: &Self) {
        debug_assert_eq!(self.len(), x.len());
        for (y, xi) in self.entries.iter_mut().zip(&x.entries) {
            *y += alpha * xi;
        }
    }

    pub fn conj(&self) -> Self {
        Vector {
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == T::zero())
    }

    /// Drops imaginary parts.
    pub fn real_part(&self) -> Self {
        Vector {
            entries: self
                .entries
                .iter()
                .map(|z| Complex::new(z.re, T::zero()))
                .collect(),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = Scalar<T>;
    fn index(&self, i: usize) -> &Scalar<T> {
        &self.entries[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut Scalar<T> {
        &mut self.entries[i]
    }
}

impl<T: Real> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        Vector::new(self.iter().zip(rhs.iter()).map(|(a, b)| a + b).collect())
    }
}

impl<T: Real> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        Vector::new(self.iter().zip(rhs.iter()).map(|(a, b)| a - b).collect())
    }
}

impl<T: Real> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector::new(self.iter().map(|a| -a).collect())
    }
}

impl<T: Real> FromIterator<Scalar<T>> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = Scalar<T>>>(iter: I) -> Self {
        Vector::new(iter.into_iter().collect())
    }
}
