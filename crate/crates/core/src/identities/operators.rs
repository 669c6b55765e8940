use serde::Serialize;

use super::Checker;
use crate::error::{FrameError, Result};
use crate::frames::{Frame, IndexSubset};
use crate::numerics::{HermitianMatrix, Matrix, Real};

/// Structure of `S_J` for a Parseval frame: `S_J − S_J² = S_J S_{J^c} ⪰ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SjStructureReport<T> {
    /// `||(S_J − S_J²) − S_J S_{J^c}||_F`.
    pub residual_identity: T,
    /// `λ_min(S_J S_{J^c})`.
    pub min_eig_product: T,
    /// `λ_min(S_J − S_J²)`.
    pub min_eig_gap: T,
    /// Relative symmetry residual of `S_J S_{J^c}`.
    pub hermitian_residual: T,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorIdentityReport<T> {
    /// `||(S − T) − (S² − T²)||_F`.
    pub residual: T,
    pub pass: bool,
}

/// Both sides of "`S`, `T` self-adjoint ⇔ `S*T` self-adjoint" when `S + T = I`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfAdjointReport {
    pub st_selfadjoint: bool,
    pub s_selfadjoint: bool,
    pub t_selfadjoint: bool,
    pub equivalence_holds: bool,
}

fn check_square_pair<T: Real>(s: &Matrix<T>, t: &Matrix<T>) -> Result<()> {
    if !s.is_square() || !t.is_square() || s.rows() != t.rows() {
        return Err(FrameError::DimensionMismatch {
            expected: s.rows(),
            found: t.rows(),
        });
    }
    Ok(())
}

impl<T: Real> Checker<T> {
    fn require_resolution_of_identity(&self, s: &Matrix<T>, t: &Matrix<T>) -> Result<()> {
        check_square_pair(s, t)?;
        let defect = (&(s + t) - &Matrix::identity(s.rows())).frobenius_norm();
        if !(defect <= self.tol.id) {
            return Err(FrameError::PreconditionFailed(format!(
                "S + T differs from I by {:e} in Frobenius norm",
                defect.as_f64()
            )));
        }
        Ok(())
    }

    fn is_self_adjoint(&self, m: &Matrix<T>) -> bool {
        m.relative_hermitian_residual() <= self.tol.herm
    }

    pub fn sj_structure_check(&self, frame: &Frame<T>, j: &IndexSubset) -> Result<SjStructureReport<T>> {
        self.require_parseval(frame)?;
        let sj = frame.partial_operator(j)?;
        let sjc = frame.partial_operator(&j.complement())?;
        let product = sj.as_matrix() * sjc.as_matrix();
        let gap = sj.as_matrix() - &(sj.as_matrix() * sj.as_matrix());
        let residual_identity = (&gap - &product).frobenius_norm();
        let hermitian_residual = product.relative_hermitian_residual();
        let min_eig_product = HermitianMatrix::from_hermitian_parts(product).eig()?.min();
        let min_eig_gap = HermitianMatrix::from_hermitian_parts(gap).eig()?.min();
        let tol = self.report_tol;
        let pass = residual_identity <= tol
            && min_eig_product >= -tol
            && min_eig_gap >= -tol
            && hermitian_residual <= self.tol.herm;
        Ok(SjStructureReport {
            residual_identity,
            min_eig_product,
            min_eig_gap,
            hermitian_residual,
            pass,
        })
    }

    /// For `S + T = I`: `S − T = S² − T²`.
    pub fn operator_identity_check(&self, s: &Matrix<T>, t: &Matrix<T>) -> Result<OperatorIdentityReport<T>> {
        self.require_resolution_of_identity(s, t)?;
        let lhs = s - t;
        let rhs = &(s * s) - &(t * t);
        let residual = (&lhs - &rhs).frobenius_norm();
        let scale = T::one().max(s.frobenius_norm() + t.frobenius_norm());
        Ok(OperatorIdentityReport {
            residual,
            pass: residual <= self.report_tol * scale,
        })
    }

    /// For `S + T = I` (not necessarily Hermitian): tests both sides of the biconditional.
    pub fn self_adjoint_product_check(&self, s: &Matrix<T>, t: &Matrix<T>) -> Result<SelfAdjointReport> {
        self.require_resolution_of_identity(s, t)?;
        let st = &s.adjoint() * t;
        let st_selfadjoint = self.is_self_adjoint(&st);
        let s_selfadjoint = self.is_self_adjoint(s);
        let t_selfadjoint = self.is_self_adjoint(t);
        Ok(SelfAdjointReport {
            st_selfadjoint,
            s_selfadjoint,
            t_selfadjoint,
            equivalence_holds: st_selfadjoint == (s_selfadjoint && t_selfadjoint),
        })
    }
}
