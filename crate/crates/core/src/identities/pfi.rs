use super::{Checker, IdentityReport};
use crate::error::{FrameError, Result};
use crate::frames::{max_deviation, Frame, IndexSubset, SubspaceFrame};
use crate::numerics::{Real, Vector};

/// The four quantities `Σ_J|<f,f_i>|²`, `||S_J f||²`, and the same over `J^c`.
struct Sides<T> {
    sum_j: T,
    norm_j: T,
    sum_jc: T,
    norm_jc: T,
}

fn sides<T: Real>(frame: &Frame<T>, j: &IndexSubset, f: &Vector<T>) -> Result<Sides<T>> {
    let jc = j.complement();
    Ok(Sides {
        sum_j: frame.partial_energy(j, f)?,
        norm_j: frame.partial_apply(j, f)?.norm_sqr(),
        sum_jc: frame.partial_energy(&jc, f)?,
        norm_jc: frame.partial_apply(&jc, f)?.norm_sqr(),
    })
}

impl<T: Real> Checker<T> {
    /// `Σ_J|<f,f_i>|² − ||S_J f||²` against the same expression over `J^c`,
    /// for a Parseval frame.
    pub fn pfi_report(&self, frame: &Frame<T>, j: &IndexSubset, f: &Vector<T>) -> Result<IdentityReport<T>> {
        self.require_parseval(frame)?;
        let s = sides(frame, j, f)?;
        let lhs = s.sum_j - s.norm_j;
        let rhs = s.sum_jc - s.norm_jc;
        let report = IdentityReport::new(
            "pfi",
            lhs,
            rhs,
            f.norm_sqr(),
            self.report_tol,
            vec![
                ("sumJ", s.sum_j),
                ("normJ", s.norm_j),
                ("sumJc", s.sum_jc),
                ("normJc", s.norm_jc),
            ],
        );
        let floor = -self.report_tol * report.scale;
        Ok(report
            .with_check("lhs_nonnegative", lhs >= floor)
            .with_check("rhs_nonnegative", rhs >= floor))
    }

    /// `Σ_J|<f,f_i>|² − Σ_I|<S_J f, f̃_i>|²` against the `J^c` version, with
    /// `f̃` the canonical dual. Holds for every frame.
    pub fn general_identity_report(
        &self,
        frame: &Frame<T>,
        j: &IndexSubset,
        f: &Vector<T>,
    ) -> Result<IdentityReport<T>> {
        self.require_frame(frame)?;
        let dual = frame.canonical_dual()?;
        let jc = j.complement();
        let dual_energy = |g: &Vector<T>| -> T { dual.vectors().iter().map(|d| g.inner(d).norm_sqr()).sum() };
        let sum_j = frame.partial_energy(j, f)?;
        let sum_jc = frame.partial_energy(&jc, f)?;
        let dual_j = dual_energy(&frame.partial_apply(j, f)?);
        let dual_jc = dual_energy(&frame.partial_apply(&jc, f)?);
        Ok(IdentityReport::new(
            "general",
            sum_j - dual_j,
            sum_jc - dual_jc,
            f.norm_sqr(),
            self.report_tol,
            vec![
                ("sumJ", sum_j),
                ("dualJ", dual_j),
                ("sumJc", sum_jc),
                ("dualJc", dual_jc),
            ],
        ))
    }

    /// `λΣ_J|<f,f_i>|² − ||S_J f||²` against the `J^c` version for a λ-tight frame.
    /// `lambda = None` infers λ as the mean eigenvalue of `S`.
    pub fn tight_identity_report(
        &self,
        frame: &Frame<T>,
        j: &IndexSubset,
        f: &Vector<T>,
        lambda: Option<T>,
    ) -> Result<IdentityReport<T>> {
        let bounds = frame.bounds_with(&self.tol)?;
        let mean = bounds.eigenvalues.iter().copied().sum::<T>() / T::lit(bounds.eigenvalues.len() as f64);
        let lambda = lambda.unwrap_or(mean);
        let deviation = max_deviation(&bounds.eigenvalues, lambda);
        if !bounds.is_frame || !(lambda > T::zero()) || !(deviation <= self.tol.id * lambda) {
            return Err(FrameError::NotTight {
                lambda: lambda.as_f64(),
                deviation: deviation.as_f64(),
            });
        }
        let s = sides(frame, j, f)?;
        let lhs = lambda * s.sum_j - s.norm_j;
        let rhs = lambda * s.sum_jc - s.norm_jc;
        Ok(IdentityReport::new(
            "tight",
            lhs,
            rhs,
            lambda * f.norm_sqr(),
            self.report_tol,
            vec![
                ("lambda", lambda),
                ("sumJ", s.sum_j),
                ("normJ", s.norm_j),
                ("sumJc", s.sum_jc),
                ("normJc", s.norm_jc),
            ],
        ))
    }

    /// `||S_{J∪E} f||² − ||S_{J^c∖E} f||²` against
    /// `||S_J f||² − ||S_{J^c} f||² + 2Σ_E|<f,f_i>|²` for `E ⊆ J^c`.
    pub fn overlap_identity_report(
        &self,
        frame: &Frame<T>,
        j: &IndexSubset,
        e: &IndexSubset,
        f: &Vector<T>,
    ) -> Result<IdentityReport<T>> {
        self.require_parseval(frame)?;
        let e = e.rebind(frame.len())?;
        if let Some(index) = j.first_common(&e) {
            return Err(FrameError::EOverlapsJ { index });
        }
        let jc = j.complement();
        let norm = |set: &IndexSubset| frame.partial_apply(set, f).map(|v| v.norm_sqr());
        let norm_je = norm(&j.union(&e))?;
        let norm_jce = norm(&jc.difference(&e))?;
        let norm_j = norm(j)?;
        let norm_jc = norm(&jc)?;
        let sum_e = frame.partial_energy(&e, f)?;
        let two = T::lit(2.0);
        Ok(IdentityReport::new(
            "overlap",
            norm_je - norm_jce,
            norm_j - norm_jc + two * sum_e,
            f.norm_sqr(),
            self.report_tol,
            vec![
                ("normJuE", norm_je),
                ("normJcMinusE", norm_jce),
                ("normJ", norm_j),
                ("normJc", norm_jc),
                ("sumE", sum_e),
            ],
        ))
    }

    /// The Parseval identity for a Parseval frame of a subspace, evaluated at an
    /// ambient vector `f`; also checks that every term is unchanged when `f` is
    /// replaced by its projection `Pf`.
    pub fn subspace_identity_report(
        &self,
        sf: &SubspaceFrame<T>,
        j: &IndexSubset,
        f: &Vector<T>,
    ) -> Result<IdentityReport<T>> {
        if f.len() != sf.ambient_dim() {
            return Err(FrameError::DimensionMismatch {
                expected: sf.ambient_dim(),
                found: f.len(),
            });
        }
        let s_minus_p = sf.frame.operator().as_matrix() - sf.projector.as_matrix();
        let deviation = s_minus_p.frobenius_norm();
        if !(deviation <= self.tol.id * T::one().max(sf.projector.frobenius_norm())) {
            return Err(FrameError::NotParseval {
                deviation: deviation.as_f64(),
            });
        }
        let frame = &sf.frame;
        let s = sides(frame, j, f)?;
        let pf = sf.project(f);
        let p = sides(frame, j, &pf)?;
        let lhs = s.sum_j - s.norm_j;
        let rhs = s.sum_jc - s.norm_jc;
        let projection_diff = [
            s.sum_j - p.sum_j,
            s.norm_j - p.norm_j,
            s.sum_jc - p.sum_jc,
            s.norm_jc - p.norm_jc,
        ]
        .iter()
        .map(|d| d.abs())
        .fold(T::zero(), T::max);
        let report = IdentityReport::new(
            "subspace",
            lhs,
            rhs,
            f.norm_sqr(),
            self.report_tol,
            vec![
                ("sumJ", s.sum_j),
                ("normJ", s.norm_j),
                ("sumJc", s.sum_jc),
                ("normJc", s.norm_jc),
                ("projectedSumJ", p.sum_j),
                ("projectedNormJ", p.norm_j),
                ("projectedSumJc", p.sum_jc),
                ("projectedNormJc", p.norm_jc),
            ],
        );
        let scaled = projection_diff / report.scale;
        let mut report = report.with_check("projection_invariant", scaled <= self.report_tol);
        report.terms.insert("projectionMaxDiff".into(), scaled);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{coordinate_isometry, embed_subspace_frame, generate, FrameKind};

    const EXACT: f64 = 1e-12;

    fn e(k: usize) -> Vector<f64> {
        Vector::basis(2, k)
    }

    fn subset(ix: &[usize], n: usize) -> IndexSubset {
        IndexSubset::new(ix.to_vec(), n).unwrap()
    }

    fn mercedes() -> Frame<f64> {
        generate(&FrameKind::Mercedes).unwrap()
    }

    #[test]
    fn pfi_mercedes_hand_values() {
        let r = Checker::new().pfi_report(&mercedes(), &subset(&[0], 3), &e(0)).unwrap();
        assert!((r.lhs - 2.0 / 9.0).abs() < EXACT);
        assert!((r.rhs - 2.0 / 9.0).abs() < EXACT);
        assert!((r.term("sumJ").unwrap() - 2.0 / 3.0).abs() < EXACT);
        assert!((r.term("normJ").unwrap() - 4.0 / 9.0).abs() < EXACT);
        assert!((r.term("sumJc").unwrap() - 1.0 / 3.0).abs() < EXACT);
        assert!((r.term("normJc").unwrap() - 1.0 / 9.0).abs() < EXACT);
        assert!(r.all_pass());
    }

    #[test]
    fn pfi_doubled_onb_hand_values() {
        let f: Frame<f64> = generate(&FrameKind::DoubledOnb { dim: 2 }).unwrap();
        let r = Checker::new().pfi_report(&f, &subset(&[0], 4), &e(0)).unwrap();
        assert!((r.lhs - 0.25).abs() < EXACT && (r.rhs - 0.25).abs() < EXACT);
    }

    #[test]
    fn pfi_empty_subset() {
        let f = Vector::from_real(&[0.3, -1.2]);
        let r = Checker::new().pfi_report(&mercedes(), &IndexSubset::empty(3), &f).unwrap();
        assert_eq!(r.term("sumJ"), Some(0.0));
        assert_eq!(r.term("normJ"), Some(0.0));
        assert!((r.term("sumJc").unwrap() - f.norm_sqr()).abs() < EXACT);
        assert!((r.term("normJc").unwrap() - f.norm_sqr()).abs() < EXACT);
        assert_eq!(r.lhs, 0.0);
        assert!(r.rhs.abs() < EXACT);
    }

    #[test]
    fn pfi_rejects_non_parseval() {
        let f = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap();
        assert!(matches!(
            Checker::new().pfi_report(&f, &subset(&[0], 3), &e(0)),
            Err(FrameError::NotParseval { .. })
        ));
    }

    #[test]
    fn general_identity_examples() {
        let c = Checker::new();
        let f = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap();
        let r = c.general_identity_report(&f, &subset(&[0], 3), &e(0)).unwrap();
        assert!((r.lhs - 0.5).abs() < EXACT && (r.rhs - 0.5).abs() < EXACT);

        let g = Vector::from_real(&[0.4, -0.9]);
        let r = c.general_identity_report(&f, &IndexSubset::full(3), &g).unwrap();
        assert_eq!(r.term("sumJc"), Some(0.0));
        assert_eq!(r.term("dualJc"), Some(0.0));
        assert!(r.pass);

        let m = mercedes();
        let a = c.general_identity_report(&m, &subset(&[1], 3), &g).unwrap();
        let b = c.pfi_report(&m, &subset(&[1], 3), &g).unwrap();
        assert!((a.lhs - b.lhs).abs() < 1e-14 && (a.rhs - b.rhs).abs() < 1e-14);

        let bessel_only = Frame::new(2, vec![e(0)]).unwrap();
        assert!(matches!(
            c.general_identity_report(&bessel_only, &subset(&[0], 1), &g),
            Err(FrameError::NotAFrame { .. })
        ));
    }

    #[test]
    fn tight_identity_examples() {
        let c = Checker::new();
        let f = Frame::new(2, vec![e(0), e(0), e(1), e(1)]).unwrap();
        let r = c.tight_identity_report(&f, &subset(&[0], 4), &e(0), Some(2.0)).unwrap();
        assert!((r.lhs - 1.0).abs() < EXACT && (r.rhs - 1.0).abs() < EXACT);
        let auto = c.tight_identity_report(&f, &subset(&[0], 4), &e(0), None).unwrap();
        assert_eq!(auto.term("lambda"), Some(2.0));

        let scaled = mercedes().scaled((1.5f64).sqrt()).unwrap();
        let r = c.tight_identity_report(&scaled, &subset(&[0], 3), &e(0), None).unwrap();
        assert!((r.lhs - 0.5).abs() < EXACT && (r.rhs - 0.5).abs() < EXACT);

        let p = c.tight_identity_report(&mercedes(), &subset(&[0], 3), &e(0), Some(1.0)).unwrap();
        let q = c.pfi_report(&mercedes(), &subset(&[0], 3), &e(0)).unwrap();
        assert_eq!((p.lhs, p.rhs), (q.lhs, q.rhs));

        let not_tight = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap();
        assert!(matches!(
            c.tight_identity_report(&not_tight, &subset(&[0], 3), &e(0), None),
            Err(FrameError::NotTight { .. })
        ));
    }

    #[test]
    fn overlap_identity_examples() {
        let c = Checker::new();
        let m = mercedes();
        let r = c.overlap_identity_report(&m, &subset(&[0], 3), &subset(&[1], 3), &e(0)).unwrap();
        assert!((r.lhs - 2.0 / 3.0).abs() < EXACT && (r.rhs - 2.0 / 3.0).abs() < EXACT);
        assert!((r.term("normJuE").unwrap() - 7.0 / 9.0).abs() < EXACT);
        assert!((r.term("normJcMinusE").unwrap() - 1.0 / 9.0).abs() < EXACT);
        assert!((r.term("sumE").unwrap() - 1.0 / 6.0).abs() < EXACT);

        let g = Vector::from_real(&[0.2, 0.7]);
        let r = c.overlap_identity_report(&m, &subset(&[2], 3), &IndexSubset::empty(3), &g).unwrap();
        assert_eq!(r.term("normJuE"), r.term("normJ"));
        assert!(r.pass);

        let r = c.overlap_identity_report(&m, &subset(&[0], 3), &subset(&[1, 2], 3), &g).unwrap();
        assert!((r.lhs - g.norm_sqr()).abs() < EXACT);
        assert!(r.pass);

        assert!(matches!(
            c.overlap_identity_report(&m, &subset(&[0], 3), &subset(&[0, 1], 3), &g),
            Err(FrameError::EOverlapsJ { index: 0 })
        ));
    }

    #[test]
    fn subspace_identity_examples() {
        let c = Checker::new();
        let onb: Frame<f64> = generate(&FrameKind::Onb { dim: 2 }).unwrap();
        let sf = embed_subspace_frame(&onb, &coordinate_isometry(3, 2)).unwrap();
        let f = Vector::from_real(&[0.5, -0.25, 2.0]);
        let r = c.subspace_identity_report(&sf, &subset(&[0], 2), &f).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.term("sumJ"), Some(0.25));
        assert_eq!(r.term("sumJc"), Some(0.0625));

        let ortho = Vector::from_real(&[0.0, 0.0, 3.0]);
        let r = c.subspace_identity_report(&sf, &subset(&[1], 2), &ortho).unwrap();
        for k in ["sumJ", "normJ", "sumJc", "normJc"] {
            assert_eq!(r.term(k), Some(0.0));
        }

        let m = mercedes();
        let full = embed_subspace_frame(&m, &coordinate_isometry(2, 2)).unwrap();
        let g = Vector::from_real(&[0.3, 0.1]);
        let a = c.subspace_identity_report(&full, &subset(&[0, 2], 3), &g).unwrap();
        let b = c.pfi_report(&m, &subset(&[0, 2], 3), &g).unwrap();
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));

        assert!(matches!(
            c.subspace_identity_report(&sf, &subset(&[0], 2), &Vector::zeros(2)),
            Err(FrameError::DimensionMismatch { .. })
        ));
    }
}
