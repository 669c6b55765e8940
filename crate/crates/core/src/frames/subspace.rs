use super::{Field, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{HermitianMatrix, Matrix, Real, Vector};

/// A frame for a subspace `W` of a larger ambient space, with the orthogonal
/// projector onto `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceFrame<T> {
    /// Embedded vectors, of length `ambient_dim`.
    pub frame: Frame<T>,
    /// Orthogonal projection `P` onto `W = span(frame)`.
    pub projector: HermitianMatrix<T>,
    pub isometry: Matrix<T>,
}

impl<T: Real> SubspaceFrame<T> {
    pub fn ambient_dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn project(&self, f: &Vector<T>) -> Vector<T> {
        self.projector.apply(f)
    }

    /// Max over `i` of `|<Pf, f_i> - <f, f_i>|`.
    pub fn projection_defect(&self, f: &Vector<T>) -> Result<T> {
        let pf = self.project(f);
        let a = self.frame.coefficients(f)?;
        let b = self.frame.coefficients(&pf)?;
        Ok(a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(T::zero(), T::max))
    }
}

/// Embeds `frame` (in dimension `d`) into `C^m` through the `m × d` matrix
/// `isometry`, whose columns must be orthonormal at `τ_eig`.
pub fn embed_subspace_frame<T: Real>(frame: &Frame<T>, isometry: &Matrix<T>) -> Result<SubspaceFrame<T>> {
    let d = frame.dim();
    if isometry.cols() != d {
        return Err(FrameError::DimensionMismatch {
            expected: d,
            found: isometry.cols(),
        });
    }
    if isometry.rows() < d {
        return Err(FrameError::BadParams(format!(
            "ambient dimension {} is smaller than frame dimension {d}",
            isometry.rows()
        )));
    }
    let residual = (&(&isometry.adjoint() * isometry) - &Matrix::identity(d)).frobenius_norm();
    if !(residual <= T::tolerances().eig) {
        return Err(FrameError::NotIsometry {
            residual: residual.as_f64(),
        });
    }
    let vectors: Vec<Vector<T>> = frame.vectors().iter().map(|v| isometry.apply(v)).collect();
    let real_placement = isometry.data().iter().all(|z| z.im == T::zero());
    let field = if frame.field() == Field::Real && real_placement {
        Field::Real
    } else {
        Field::Complex
    };
    let embedded = Frame::with_field(isometry.rows(), field, vectors)?;
    let projector = HermitianMatrix::from_hermitian_parts(isometry * &isometry.adjoint());
    Ok(SubspaceFrame {
        frame: embedded,
        projector,
        isometry: isometry.clone(),
    })
}

/// Places `R^d` on the first `d` coordinates of `R^m`.
pub fn coordinate_isometry<T: Real>(ambient_dim: usize, dim: usize) -> Matrix<T> {
    Matrix::from_fn(ambient_dim, dim, |i, j| {
        if i == j {
            num_complex::Complex::new(T::one(), T::zero())
        } else {
            num_complex::Complex::new(T::zero(), T::zero())
        }
    })
}
