//! Executable versions of the Parseval frame identity, its general-frame,
//! tight, overlapping and subspace variants, the associated bounds, operator
//! identities and the six-way equivalence for vanishing sides.
//!
//! All checks are methods on [`Checker`], which carries the tolerances.
//! Equality residuals are normalized by `max(1, ||f||², largest term)` since
//! every identity here is homogeneous of degree two in `f`.

mod bounds;
mod equivalence;
mod extension;
mod operators;
mod pfi;

pub use bounds::BoundReport;
pub use equivalence::{ConditionResult, EquivalenceReport, CONDITION_LABELS};
pub use extension::{span_projector, ExtensionReport, SpanReport};
pub use operators::{OperatorIdentityReport, SelfAdjointReport, SjStructureReport};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frames::{Frame, FrameBounds};
use crate::numerics::{Real, Tolerances};

/// Evaluates identities on concrete `(frame, J, f)` instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker<T> {
    /// Thresholds for preconditions (Parseval, tight, frame tests).
    pub tol: Tolerances<T>,
    /// Threshold deciding `pass` in reports.
    pub report_tol: T,
}

impl<T: Real> Default for Checker<T> {
    fn default() -> Self {
        let tol = T::tolerances();
        Checker {
            tol,
            report_tol: tol.id,
        }
    }
}

impl<T: Real> Checker<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_report_tolerance(mut self, tol: T) -> Self {
        self.report_tol = tol;
        self
    }

    pub(crate) fn require_parseval(&self, frame: &Frame<T>) -> Result<FrameBounds<T>> {
        let bounds = frame.bounds_with(&self.tol)?;
        let deviation = bounds.parseval_deviation();
        if !(deviation <= self.tol.id) {
            return Err(FrameError::NotParseval {
                deviation: deviation.as_f64(),
            });
        }
        Ok(bounds)
    }

    pub(crate) fn require_frame(&self, frame: &Frame<T>) -> Result<FrameBounds<T>> {
        let bounds = frame.bounds_with(&self.tol)?;
        if !bounds.is_frame {
            return Err(FrameError::NotAFrame {
                lower: bounds.lower.as_f64(),
                threshold: self.tol.frame_threshold(bounds.upper).as_f64(),
            });
        }
        Ok(bounds)
    }
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport<T> {
    pub identity: &'static str,
    pub lhs: T,
    pub rhs: T,
    pub abs_diff: T,
    /// `abs_diff / max(1, ||f||², |lhs|, |rhs|, max |term|)`.
    pub rel_diff: T,
    pub tolerance: T,
    /// Normalization applied to `abs_diff`.
    pub scale: T,
    /// `rel_diff <= tolerance`.
    pub pass: bool,
    pub terms: BTreeMap<String, T>,
    /// Side conditions (nonnegativity, projection invariance) that hold alongside the identity.
    pub checks: BTreeMap<String, bool>,
}

impl<T: Real> IdentityReport<T> {
    pub(crate) fn new(
        identity: &'static str,
        lhs: T,
        rhs: T,
        norm_sq: T,
        tolerance: T,
        terms: Vec<(&str, T)>,
    ) -> Self {
        let abs_diff = (lhs - rhs).abs();
        let scale = terms
            .iter()
            .map(|(_, t)| t.abs())
            .fold(T::one().max(norm_sq).max(lhs.abs()).max(rhs.abs()), T::max);
        let rel_diff = abs_diff / scale;
        IdentityReport {
            identity,
            lhs,
            rhs,
            abs_diff,
            rel_diff,
            scale,
            tolerance,
            pass: rel_diff <= tolerance,
            terms: terms.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            checks: BTreeMap::new(),
        }
    }

    pub(crate) fn with_check(mut self, name: &str, ok: bool) -> Self {
        self.checks.insert(name.to_string(), ok);
        self
    }

    pub fn term(&self, name: &str) -> Option<T> {
        self.terms.get(name).copied()
    }

    /// `pass` together with every side check.
    pub fn all_pass(&self) -> bool {
        self.pass && self.checks.values().all(|&ok| ok)
    }
}
