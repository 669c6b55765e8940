//! Dense real/complex linear algebra used by the frame code.
//!
//! Every quantity is carried as a complex number over a real working type `T`
//! (`f32` or `f64`). Real frames simply keep their imaginary parts at zero, so
//! a single code path serves both fields.

mod eig;
mod matrix;
mod vector;

pub use eig::{hermitian_eig, psd_apply, EigenDecomposition, SpectralFn};
pub use matrix::{HermitianMatrix, Matrix};
pub use vector::Vector;

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Scalar of the ambient space.
pub type Scalar<T> = Complex<T>;

/// Real working precision.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Default tolerances calibrated for this precision.
    fn tolerances() -> Tolerances<Self>;

    /// Converts an `f64` literal into the working type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in working precision")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn tolerances() -> Tolerances<f64> {
        Tolerances {
            herm: 1e-10,
            eig: 1e-10,
            psd_rel: 1e-12,
            frame_rel: 1e-10,
            id: 1e-9,
        }
    }
}

impl Real for f32 {
    fn tolerances() -> Tolerances<f32> {
        Tolerances {
            herm: 1e-4,
            eig: 1e-4,
            psd_rel: 1e-6,
            frame_rel: 1e-5,
            id: 1e-4,
        }
    }
}

/// Numerical thresholds shared by the whole crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances<T> {
    /// Hermitian symmetry residual, relative to the Frobenius norm.
    pub herm: T,
    /// Eigen reconstruction and orthonormality residuals.
    pub eig: T,
    /// PSD clipping threshold, scaled by `max(1, λ_max)`.
    pub psd_rel: T,
    /// Rank threshold for frame decisions, scaled by `λ_max(S)`.
    pub frame_rel: T,
    /// Identity comparison tolerance on normalized quantities.
    pub id: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        T::tolerances()
    }
}

impl<T: Real> Tolerances<T> {
    pub fn with_id(mut self, id: T) -> Self {
        self.id = id;
        self
    }

    pub fn psd_threshold(&self, lambda_max: T) -> T {
        self.psd_rel * T::one().max(lambda_max)
    }

    pub fn frame_threshold(&self, lambda_max: T) -> T {
        self.frame_rel * lambda_max
    }
}
