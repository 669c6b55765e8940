use serde::Serialize;

use super::Checker;
use crate::error::Result;
use crate::frames::{Frame, IndexSubset};
use crate::numerics::{Real, Vector};

pub const CONDITION_LABELS: [&str; 6] = ["i", "ii", "iii", "iv", "v", "vi"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionResult<T> {
    pub label: &'static str,
    /// Residual divided by `max(1, ||f||²)`.
    pub residual: T,
    pub holds: bool,
}

/// The six conditions characterizing when both sides of the Parseval identity vanish:
///
/// - (i) `Σ_J|<f,f_i>|² = ||S_J f||²`
/// - (ii) the same over `J^c`
/// - (iii) `S_J f ⊥ S_{J^c} f`
/// - (iv) `f ⊥ S_J S_{J^c} f`
/// - (v) `S_J f = S_J² f`
/// - (vi) `S_J S_{J^c} f = 0`
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceReport<T> {
    pub conditions: Vec<ConditionResult<T>>,
    /// All six hold or all six fail.
    pub consistent: bool,
    /// Some residual lies within a factor 10 of the tolerance.
    pub borderline: bool,
}

impl<T: Real> EquivalenceReport<T> {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn none_hold(&self) -> bool {
        self.conditions.iter().all(|c| !c.holds)
    }
}

impl<T: Real> Checker<T> {
    pub fn equivalence_conditions(
        &self,
        frame: &Frame<T>,
        j: &IndexSubset,
        f: &Vector<T>,
    ) -> Result<EquivalenceReport<T>> {
        self.require_parseval(frame)?;
        let jc = j.complement();
        let sj_f = frame.partial_apply(j, f)?;
        let sjc_f = frame.partial_apply(&jc, f)?;
        let sj_sj_f = frame.partial_apply(j, &sj_f)?;
        let sj_sjc_f = frame.partial_apply(j, &sjc_f)?;

        let raw = [
            (frame.partial_energy(j, f)? - sj_f.norm_sqr()).abs(),
            (frame.partial_energy(&jc, f)? - sjc_f.norm_sqr()).abs(),
            sj_f.inner(&sjc_f).norm(),
            f.inner(&sj_sjc_f).norm(),
            (&sj_f - &sj_sj_f).norm(),
            sj_sjc_f.norm(),
        ];
        let scale = T::one().max(f.norm_sqr());
        let tol = self.report_tol;
        let ten = T::lit(10.0);
        let conditions: Vec<ConditionResult<T>> = CONDITION_LABELS
            .iter()
            .zip(raw)
            .map(|(&label, r)| {
                let residual = r / scale;
                ConditionResult {
                    label,
                    residual,
                    holds: residual <= tol,
                }
            })
            .collect();
        let borderline = conditions
            .iter()
            .any(|c| c.residual >= tol / ten && c.residual <= tol * ten);
        let first = conditions[0].holds;
        let consistent = conditions.iter().all(|c| c.holds == first);
        Ok(EquivalenceReport {
            conditions,
            consistent,
            borderline,
        })
    }
}
