//! Cyclic complex Jacobi eigensolver and spectral functions of PSD matrices.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{HermitianMatrix, Matrix, Real};
use crate::error::{FrameError, Result};

const MAX_SWEEPS: usize = 100;

/// `M = V diag(λ) V*` with eigenvalues ascending and orthonormal columns in `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Matrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min(&self) -> T {
        self.eigenvalues.first().copied().unwrap_or_else(T::zero)
    }

    pub fn max(&self) -> T {
        self.eigenvalues.last().copied().unwrap_or_else(T::zero)
    }

    /// `V diag(g(λ)) V*`.
    pub fn map(&self, g: impl Fn(T) -> T) -> Matrix<T> {
        let n = self.dim();
        let v = &self.eigenvectors;
        let weights: Vec<T> = self.eigenvalues.iter().map(|&l| g(l)).collect();
        Matrix::from_fn(n, n, |i, j| {
            (0..n).fold(Complex::zero(), |acc, k| {
                acc + (v[(i, k)] * v[(j, k)].conj()).scale(weights[k])
            })
        })
    }

    pub fn reconstruct(&self) -> Matrix<T> {
        self.map(|l| l)
    }

    /// `||M - V Λ V*||_F`.
    pub fn reconstruction_residual(&self, m: &Matrix<T>) -> T {
        (m - &self.reconstruct()).frobenius_norm()
    }

    /// `||V* V - I||_F`.
    pub fn orthonormality_residual(&self) -> T {
        let v = &self.eigenvectors;
        (&(&v.adjoint() * v) - &Matrix::identity(self.dim())).frobenius_norm()
    }
}

/// Validates `m` as Hermitian (within `τ_herm`) and diagonalizes it.
pub fn hermitian_eig<T: Real>(m: &Matrix<T>) -> Result<EigenDecomposition<T>> {
    HermitianMatrix::new(m.clone())?.eig()
}

/// Cyclic Jacobi on a matrix already known to be Hermitian.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary and then applies a real Givens rotation, so real input stays
/// exactly real.
pub(crate) fn hermitian_eig_unchecked<T: Real>(m: &Matrix<T>) -> Result<EigenDecomposition<T>> {
    let n = m.rows();
    let mut a = m.clone();
    let mut v = Matrix::identity(n);
    let norm = a.frobenius_norm();
    let threshold = T::epsilon() * norm * T::lit(n.max(1) as f64);

    let off_norm = |a: &Matrix<T>| {
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += a[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    };

    let mut sweeps = 0;
    while !norm.is_zero() {
        if off_norm(&a) <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(FrameError::NoConvergence {
                sweeps,
                off_norm: off_norm(&a).as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = Matrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Annihilates `a[p][q]` with the unitary `G = diag(1, conj(ω)) R(c, s)` on the (p, q) plane,
/// `ω = a_pq / |a_pq|`; updates `a ← G* a G`, `v ← v G`.
fn rotate<T: Real>(a: &mut Matrix<T>, v: &mut Matrix<T>, p: usize, q: usize) {
    let h = a[(p, q)];
    let r = h.norm();
    if r.is_zero() {
        return;
    }
    let omega = h.unscale(r);
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    // Real symmetric Schur step for [[app, r], [r, aqq]].
    let tau = (aqq - app) / (r + r);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let g_pp = Complex::new(c, T::zero());
    let g_pq = Complex::new(s, T::zero());
    let g_qp = omega.conj().scale(-s);
    let g_qq = omega.conj().scale(c);

    let n = a.rows();
    // a ← a G (columns p, q)
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    // a ← G* a (rows p, q)
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Spectral function applied by [`psd_apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralFn {
    Inverse,
    Sqrt,
    InvSqrt,
}

/// `V g(Λ) V*` for a positive semidefinite `m`.
///
/// Eigenvalues in `[-τ_psd, 0]` are clamped to zero first.
pub fn psd_apply<T: Real>(m: &HermitianMatrix<T>, g: SpectralFn) -> Result<HermitianMatrix<T>> {
    let tol = T::tolerances();
    let eig = m.eig()?;
    let threshold = tol.psd_threshold(eig.max());
    let min = eig.min();
    if min < -threshold {
        return Err(FrameError::NotPsd {
            min_eigenvalue: min.as_f64(),
        });
    }
    let needs_inverse = matches!(g, SpectralFn::Inverse | SpectralFn::InvSqrt);
    if needs_inverse && min <= threshold {
        return Err(FrameError::SingularMatrix {
            min_eigenvalue: min.as_f64(),
        });
    }
    let result = eig.map(|l| {
        let l = if l < T::zero() { T::zero() } else { l };
        match g {
            SpectralFn::Inverse => T::one() / l,
            SpectralFn::Sqrt => l.sqrt(),
            SpectralFn::InvSqrt => T::one() / l.sqrt(),
        }
    });
    Ok(HermitianMatrix::from_hermitian_parts(result))
}
