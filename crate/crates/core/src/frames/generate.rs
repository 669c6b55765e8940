//! Standard frame families and seeded random frames.

use std::f64::consts::PI;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::rng::SplitMix64;
use super::{Field, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{Real, Vector};

/// Frame families understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FrameKind {
    /// Standard basis of `R^d`.
    Onb { dim: usize },
    /// Each basis vector twice, scaled by `1/√2`.
    DoubledOnb { dim: usize },
    /// Three vectors `√(2/3)(cos 2πk/3, sin 2πk/3)` in `R²`.
    Mercedes,
    /// First `dim` coordinates of the `count` DFT vectors, scaled by `1/√count`.
    Harmonic { dim: usize, count: usize },
    RandomGaussian { dim: usize, count: usize, seed: u64, field: Field },
    /// `parsevalize(random_gaussian)`.
    RandomParseval { dim: usize, count: usize, seed: u64, field: Field },
}

pub fn generate<T: Real>(kind: &FrameKind) -> Result<Frame<T>> {
    match *kind {
        FrameKind::Onb { dim } => {
            check_dim(dim)?;
            Frame::with_field(dim, Field::Real, (0..dim).map(|k| Vector::basis(dim, k)).collect())
        }
        FrameKind::DoubledOnb { dim } => {
            check_dim(dim)?;
            let s = T::lit(0.5).sqrt();
            let vectors = (0..dim)
                .flat_map(|k| {
                    let v = Vector::basis(dim, k).scale_real(s);
                    [v.clone(), v]
                })
                .collect();
            Frame::with_field(dim, Field::Real, vectors)
        }
        FrameKind::Mercedes => {
            let r = (2.0f64 / 3.0).sqrt();
            let vectors = (0..3)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / 3.0;
                    Vector::from_real(&[T::lit(r * t.cos()), T::lit(r * t.sin())])
                })
                .collect();
            Frame::with_field(2, Field::Real, vectors)
        }
        FrameKind::Harmonic { dim, count } => {
            check_dim(dim)?;
            if count < dim {
                return Err(FrameError::BadParams(format!(
                    "harmonic frame needs count >= dim (got {count} < {dim})"
                )));
            }
            let scale = 1.0 / (count as f64).sqrt();
            let vectors = (0..count)
                .map(|k| {
                    (0..dim)
                        .map(|j| {
                            // reduce jk mod n before forming the angle
                            let t = 2.0 * PI * ((j * k) % count) as f64 / count as f64;
                            Complex::new(T::lit(scale * t.cos()), T::lit(scale * t.sin()))
                        })
                        .collect()
                })
                .collect();
            Frame::with_field(dim, Field::Complex, vectors)
        }
        FrameKind::RandomGaussian {
            dim,
            count,
            seed,
            field,
        } => {
            check_dim(dim)?;
            if count == 0 {
                return Err(FrameError::BadParams("count must be at least 1".into()));
            }
            let mut rng = SplitMix64::new(seed);
            random_gaussian(&mut rng, dim, count, field)
        }
        FrameKind::RandomParseval {
            dim,
            count,
            seed,
            field,
        } => {
            check_dim(dim)?;
            if count < dim {
                return Err(FrameError::BadParams(format!(
                    "random Parseval frame needs count >= dim (got {count} < {dim})"
                )));
            }
            let mut rng = SplitMix64::new(seed);
            random_parseval(&mut rng, dim, count, field)
        }
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(FrameError::BadParams("dimension must be at least 1".into()));
    }
    Ok(())
}

/// `count` vectors with i.i.d. standard normal entries drawn from `rng`.
pub fn random_gaussian<T: Real>(
    rng: &mut SplitMix64,
    dim: usize,
    count: usize,
    field: Field,
) -> Result<Frame<T>> {
    let vectors = (0..count).map(|_| rng.normal_vector(dim, field)).collect();
    Frame::with_field(dim, field, vectors)
}

/// Parsevalized Gaussian frame; redraws in the (measure-zero) rank-deficient case.
pub fn random_parseval<T: Real>(
    rng: &mut SplitMix64,
    dim: usize,
    count: usize,
    field: Field,
) -> Result<Frame<T>> {
    loop {
        let frame: Frame<T> = random_gaussian(rng, dim, count, field)?;
        match frame.parsevalize() {
            Err(FrameError::NotAFrame { .. }) => continue,
            other => return other,
        }
    }
}

/// Random matrix with orthonormal columns (`rows >= cols`), from Gram-Schmidt on a Gaussian matrix.
pub fn random_isometry<T: Real>(
    rng: &mut SplitMix64,
    rows: usize,
    cols: usize,
    field: Field,
) -> crate::numerics::Matrix<T> {
    assert!(rows >= cols);
    let mut basis: Vec<Vector<T>> = Vec::with_capacity(cols);
    while basis.len() < cols {
        let mut v: Vector<T> = rng.normal_vector(rows, field);
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for b in &basis {
                let c = v.inner(b);
                v.axpy(-c, b);
            }
        }
        let n = v.norm();
        if n > T::lit(1e-6) {
            basis.push(v.scale_real(T::one() / n));
        }
    }
    crate::numerics::Matrix::from_columns(rows, &basis)
}
