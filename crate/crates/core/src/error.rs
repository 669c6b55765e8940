use thiserror::Error;

/// Errors raised by the numerical substrate, frame constructions and identity checks.
///
/// Magnitudes are carried as `f64` regardless of the working scalar so that
/// errors stay printable and comparable across precisions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("matrix is not Hermitian (relative symmetry residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is singular for this spectral function (smallest eigenvalue {min_eigenvalue:e})")]
    SingularMatrix { min_eigenvalue: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for a family of {len} vectors")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("family is not a frame (lower bound {lower:e} at or below threshold {threshold:e})")]
    NotAFrame { lower: f64, threshold: f64 },

    #[error("frame is not Parseval (max eigenvalue deviation from 1 is {deviation:e})")]
    NotParseval { deviation: f64 },

    #[error("frame is not {lambda}-tight (max eigenvalue deviation {deviation:e})")]
    NotTight { lambda: f64, deviation: f64 },

    #[error("tight bound {lambda} is below the upper frame bound {required}")]
    LambdaTooSmall { lambda: f64, required: f64 },

    #[error("placement matrix columns are not orthonormal (residual {residual:e})")]
    NotIsometry { residual: f64 },

    #[error("E must lie in the complement of J, but index {index} is in both")]
    EOverlapsJ { index: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("malformed frame document: {0}")]
    Format(String),
}

impl FrameError {
    /// Stable machine-readable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            FrameError::NotHermitian { .. } => "NotHermitian",
            FrameError::NoConvergence { .. } => "NoConvergence",
            FrameError::SingularMatrix { .. } => "SingularMatrix",
            FrameError::NotPsd { .. } => "NotPSD",
            FrameError::DimensionMismatch { .. } => "DimensionMismatch",
            FrameError::IndexOutOfRange { .. } => "IndexOutOfRange",
            FrameError::NotAFrame { .. } => "NotAFrame",
            FrameError::NotParseval { .. } => "NotParseval",
            FrameError::NotTight { .. } => "NotTight",
            FrameError::LambdaTooSmall { .. } => "LambdaTooSmall",
            FrameError::NotIsometry { .. } => "NotIsometry",
            FrameError::EOverlapsJ { .. } => "EOverlapsJ",
            FrameError::PreconditionFailed(_) => "PreconditionFailed",
            FrameError::BadParams(_) => "BadParams",
            FrameError::Format(_) => "Format",
        }
    }
}

pub type Result<T> = std::result::Result<T, FrameError>;
