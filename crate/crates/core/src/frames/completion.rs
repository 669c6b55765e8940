use super::generate::random_isometry;
use super::rng::SplitMix64;
use super::{operator_of, Field, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{HermitianMatrix, Matrix, Real, Vector};

/// Vectors `G` appended to a frame so that `F ∪ G` is λ-tight.
///
/// `G` may be empty when `F` is already λ-tight.
#[derive(Debug, Clone, PartialEq)]
pub struct TightCompletion<T> {
    pub lambda: T,
    pub dim: usize,
    pub field: Field,
    pub vectors: Vec<Vector<T>>,
}

/// Canonical completion: the nonzero columns of `sqrt(λI - S)`.
///
/// `lambda = None` picks `λ = λ_max(S)`.
pub fn complete_to_tight<T: Real>(frame: &Frame<T>, lambda: Option<T>) -> Result<TightCompletion<T>> {
    let tol = T::tolerances();
    let eig = frame.operator().eig()?;
    let top = eig.max();
    let lambda = lambda.unwrap_or(top);
    let slack = tol.psd_threshold(top);
    if !(lambda >= top - slack) {
        return Err(FrameError::LambdaTooSmall {
            lambda: lambda.as_f64(),
            required: top.as_f64(),
        });
    }
    let cutoff = tol.psd_threshold(lambda);
    let root = eig.map(|l| {
        let gap = lambda - l;
        if gap <= cutoff {
            T::zero()
        } else {
            gap.sqrt()
        }
    });
    let vectors = root
        .columns()
        .into_iter()
        .filter(|c| c.norm_sqr() > cutoff)
        .map(|c| match frame.field() {
            Field::Real => c.real_part(),
            Field::Complex => c,
        })
        .collect();
    Ok(TightCompletion {
        lambda,
        dim: frame.dim(),
        field: frame.field(),
        vectors,
    })
}

impl<T: Real> TightCompletion<T> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn operator(&self) -> HermitianMatrix<T> {
        operator_of(self.dim, &self.vectors)
    }

    pub fn union(&self, frame: &Frame<T>) -> Result<Frame<T>> {
        frame.extended(&self.vectors)
    }

    /// Alternative completion `[G, 0] U` for a seeded random unitary `U`
    /// (orthogonal for real frames); `extra` zero columns are appended first,
    /// so the result has `len() + extra` vectors but the same operator `GG*`.
    pub fn mixed(&self, seed: u64, extra: usize) -> TightCompletion<T> {
        let m = self.vectors.len() + extra;
        if m == 0 {
            return self.clone();
        }
        let mut columns = self.vectors.clone();
        columns.extend((0..extra).map(|_| Vector::zeros(self.dim)));
        let g = Matrix::from_columns(self.dim, &columns);
        let mut rng = SplitMix64::new(seed);
        let u = random_isometry(&mut rng, m, m, self.field);
        let mixed = &g * &u;
        TightCompletion {
            lambda: self.lambda,
            dim: self.dim,
            field: self.field,
            vectors: mixed.columns(),
        }
    }
}
