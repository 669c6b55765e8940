//! Finite frames in real and complex inner-product spaces.
//!
//! [`numerics`] holds the dense complex linear algebra, [`frames`] the frame
//! constructions (frame operator, bounds, duals, tight completions, subspace
//! embeddings) and [`identities`] evaluates the Parseval frame identity and its
//! relatives on concrete instances, returning structured reports.
//!
//! Everything is generic over the working precision through [`numerics::Real`];
//! the aliases below fix it to `f64` or `f32`.

// `!(x <= tol)` is deliberate: NaN residuals must fail the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod frames;
pub mod identities;
pub mod numerics;

pub use error::{FrameError, Result};
pub use frames::{Field, Frame, FrameKind, IndexSubset};
pub use identities::Checker;
pub use numerics::{Real, Tolerances};

pub type Frame64 = frames::Frame<f64>;
pub type Frame32 = frames::Frame<f32>;
pub type Vector64 = numerics::Vector<f64>;
pub type Vector32 = numerics::Vector<f32>;
pub type Matrix64 = numerics::Matrix<f64>;
pub type Matrix32 = numerics::Matrix<f32>;
pub type HermitianMatrix64 = numerics::HermitianMatrix<f64>;
pub type Checker64 = identities::Checker<f64>;
pub type Checker32 = identities::Checker<f32>;
pub type IdentityReport64 = identities::IdentityReport<f64>;
