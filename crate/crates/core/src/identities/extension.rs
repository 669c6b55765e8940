use serde::Serialize;

use super::Checker;
use crate::error::{FrameError, Result};
use crate::frames::rng::SplitMix64;
use crate::frames::{max_deviation, operator_of, Frame};
use crate::numerics::{HermitianMatrix, Matrix, Real, Tolerances, Vector};

/// Orthogonal projector onto `span(vectors)`, with the rank read off the
/// eigenvalues of the family's frame operator above `τ_frame`.
pub fn span_projector<T: Real>(dim: usize, vectors: &[Vector<T>], tol: &Tolerances<T>) -> Result<(Matrix<T>, usize)> {
    let eig = operator_of(dim, vectors).eig()?;
    let top = eig.max();
    if !(top > T::zero()) {
        return Ok((Matrix::zeros(dim, dim), 0));
    }
    let threshold = tol.frame_threshold(top);
    let mut p = Matrix::zeros(dim, dim);
    let mut rank = 0;
    for (k, &l) in eig.eigenvalues.iter().enumerate() {
        if l > threshold {
            p.add_outer_assign(T::one(), &eig.eigenvectors.column(k));
            rank += 1;
        }
    }
    Ok((p, rank))
}

/// Same-operator-implies-same-span check for two Bessel families.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpanReport<T> {
    pub operators_equal: bool,
    pub operator_residual: T,
    pub spans_equal: bool,
    pub projector_residual: T,
    pub rank_a: usize,
    pub rank_b: usize,
    /// `!operators_equal || spans_equal`.
    pub span_follows_operator: bool,
}

/// Shared properties of two completions `G`, `H` of the same frame `F` to λ-tight frames.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtensionReport<T> {
    pub both_tight: bool,
    /// `Σ|<f,g_i>|² = Σ|<f,h_i>|²` at the probe and at 100 random vectors.
    pub energy_equal: bool,
    pub max_energy_diff: T,
    /// Frame operators of `G` and `H` agree.
    pub operator_equal: bool,
    pub operator_residual: T,
    pub span_equal: bool,
    pub pass: bool,
}

const ENERGY_PROBES: usize = 100;

impl<T: Real> Checker<T> {
    pub fn span_equality_check(&self, a: &Frame<T>, b: &Frame<T>) -> Result<SpanReport<T>> {
        if a.dim() != b.dim() {
            return Err(FrameError::DimensionMismatch {
                expected: a.dim(),
                found: b.dim(),
            });
        }
        self.span_equality_of(a.dim(), a.vectors(), b.vectors())
    }

    /// [`Checker::span_equality_check`] for families that may be empty.
    pub fn span_equality_of(&self, dim: usize, a: &[Vector<T>], b: &[Vector<T>]) -> Result<SpanReport<T>> {
        if let Some(v) = a.iter().chain(b).find(|v| v.len() != dim) {
            return Err(FrameError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        let sa = operator_of(dim, a);
        let sb = operator_of(dim, b);
        let operator_residual = (sa.as_matrix() - sb.as_matrix()).frobenius_norm();
        let scale = T::one().max(sa.frobenius_norm()).max(sb.frobenius_norm());
        let operators_equal = operator_residual <= self.report_tol * scale;
        let (pa, rank_a) = span_projector(dim, a, &self.tol)?;
        let (pb, rank_b) = span_projector(dim, b, &self.tol)?;
        let projector_residual = (&pa - &pb).frobenius_norm();
        // eigenvector-based projectors carry error ~ eps·||S||/gap, so compare at sqrt(τ)
        let spans_equal = rank_a == rank_b && projector_residual <= self.report_tol.sqrt();
        Ok(SpanReport {
            operators_equal,
            operator_residual,
            spans_equal,
            projector_residual,
            rank_a,
            rank_b,
            span_follows_operator: !operators_equal || spans_equal,
        })
    }

    /// Compares two families `G`, `H` for which `F ∪ G` and `F ∪ H` are both λ-tight.
    ///
    /// Energies are compared at `probe` and at 100 vectors drawn from `seed`.
    pub fn tight_extension_compare(
        &self,
        frame: &Frame<T>,
        g: &[Vector<T>],
        h: &[Vector<T>],
        lambda: T,
        probe: &Vector<T>,
        seed: u64,
    ) -> Result<ExtensionReport<T>> {
        let dim = frame.dim();
        if probe.len() != dim {
            return Err(FrameError::DimensionMismatch {
                expected: dim,
                found: probe.len(),
            });
        }
        for family in [g, h] {
            let union = frame.extended(family)?;
            let eig = union.operator().eig()?;
            let deviation = max_deviation(&eig.eigenvalues, lambda);
            if !(deviation <= self.tol.id * lambda) {
                return Err(FrameError::NotTight {
                    lambda: lambda.as_f64(),
                    deviation: deviation.as_f64(),
                });
            }
        }

        let energy = |family: &[Vector<T>], f: &Vector<T>| -> T { family.iter().map(|v| f.inner(v).norm_sqr()).sum() };
        let mut rng = SplitMix64::new(seed);
        let mut probes = vec![probe.clone()];
        probes.extend((0..ENERGY_PROBES).map(|_| rng.unit_vector(dim, frame.field())));
        let mut max_energy_diff = T::zero();
        let mut energy_equal = true;
        for f in &probes {
            let (eg, eh) = (energy(g, f), energy(h, f));
            let diff = (eg - eh).abs();
            let scale = T::one().max(lambda * f.norm_sqr());
            max_energy_diff = max_energy_diff.max(diff / scale);
            energy_equal &= diff <= self.report_tol * scale;
        }

        let sg: HermitianMatrix<T> = operator_of(dim, g);
        let sh = operator_of(dim, h);
        let operator_residual = (sg.as_matrix() - sh.as_matrix()).frobenius_norm();
        let operator_equal = operator_residual <= self.report_tol * T::one().max(lambda);

        let span = self.span_equality_of(dim, g, h)?;
        let pass = energy_equal && operator_equal && span.spans_equal;
        Ok(ExtensionReport {
            both_tight: true,
            energy_equal,
            max_energy_diff,
            operator_equal,
            operator_residual,
            span_equal: span.spans_equal,
            pass,
        })
    }
}
