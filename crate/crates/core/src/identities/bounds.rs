use serde::Serialize;

use super::Checker;
use crate::error::Result;
use crate::frames::{Frame, IndexSubset};
use crate::numerics::{Real, Vector};

/// Lower-bound check for `Σ_J|<f,f_i>|² + ||S_{J^c} f||²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub value: T,
    pub bound: T,
    pub norm_sq: T,
    /// `value / ||f||²` (or 1 when `f = 0`).
    pub ratio: T,
    pub pass: bool,
    /// `Σ_{J^c}|<f,f_i>|² + ||S_J f||²`, when the symmetric form is checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_value: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms_equal: Option<bool>,
}

impl<T: Real> Checker<T> {
    fn mixed_energy(&self, frame: &Frame<T>, j: &IndexSubset, f: &Vector<T>) -> Result<(T, T)> {
        let jc = j.complement();
        let value = frame.partial_energy(j, f)? + frame.partial_apply(&jc, f)?.norm_sqr();
        let symmetric = frame.partial_energy(&jc, f)? + frame.partial_apply(j, f)?.norm_sqr();
        Ok((value, symmetric))
    }

    fn bound_report(&self, value: T, norm_sq: T, factor: T) -> BoundReport<T> {
        let bound = factor * norm_sq;
        let slack = self.report_tol * T::one().max(norm_sq);
        let ratio = if norm_sq > T::zero() { value / norm_sq } else { T::one() };
        BoundReport {
            value,
            bound,
            norm_sq,
            ratio,
            pass: value >= bound - slack,
            symmetric_value: None,
            forms_equal: None,
        }
    }

    /// `Σ_J|<f,f_i>|² + ||S_{J^c} f||² ≥ ½||f||²`, together with the equality of that
    /// expression and its `J ↔ J^c` mirror.
    pub fn half_bound_check(&self, frame: &Frame<T>, j: &IndexSubset, f: &Vector<T>) -> Result<BoundReport<T>> {
        self.require_parseval(frame)?;
        let (value, symmetric) = self.mixed_energy(frame, j, f)?;
        let norm_sq = f.norm_sqr();
        let mut report = self.bound_report(value, norm_sq, T::lit(0.5));
        let scale = T::one().max(norm_sq).max(value.abs()).max(symmetric.abs());
        let equal = (value - symmetric).abs() <= self.report_tol * scale;
        report.symmetric_value = Some(symmetric);
        report.forms_equal = Some(equal);
        report.pass &= equal;
        Ok(report)
    }

    /// `Σ_J|<f,f_i>|² + ||S_{J^c} f||² ≥ ¾||f||²` for a Parseval frame.
    pub fn three_quarters_check(&self, frame: &Frame<T>, j: &IndexSubset, f: &Vector<T>) -> Result<BoundReport<T>> {
        self.require_parseval(frame)?;
        let (value, _) = self.mixed_energy(frame, j, f)?;
        Ok(self.bound_report(value, f.norm_sqr(), T::lit(0.75)))
    }
}
