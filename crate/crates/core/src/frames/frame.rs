use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::IndexSubset;
use crate::error::{FrameError, Result};
use crate::numerics::{psd_apply, HermitianMatrix, Matrix, Real, Scalar, SpectralFn, Tolerances, Vector};

/// Scalar field of the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

impl std::str::FromStr for Field {
    type Err = FrameError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(FrameError::BadParams(format!("unknown field {other:?}"))),
        }
    }
}

/// `S = Σ f_i f_i*` for an arbitrary (possibly empty) family.
pub fn operator_of<T: Real>(dim: usize, vectors: &[Vector<T>]) -> HermitianMatrix<T> {
    let mut s = Matrix::zeros(dim, dim);
    for v in vectors {
        s.add_outer_assign(T::one(), v);
    }
    HermitianMatrix::from_hermitian_parts(s)
}

/// Finite family `{f_i}` in `C^d` (or `R^d`), with its frame operator computed at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame<T> {
    dim: usize,
    field: Field,
    vectors: Vec<Vector<T>>,
    operator: HermitianMatrix<T>,
}

/// Optimal frame bounds `A = λ_min(S)`, `B = λ_max(S)` plus classification flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameBounds<T> {
    pub lower: T,
    pub upper: T,
    pub eigenvalues: Vec<T>,
    pub is_frame: bool,
    pub is_parseval: bool,
    /// `Some(λ)` when the family is λ-tight with λ the mean eigenvalue.
    pub tight_constant: Option<T>,
}

impl<T: Real> FrameBounds<T> {
    fn from_eigenvalues(eigenvalues: Vec<T>, tol: &Tolerances<T>) -> Self {
        let lower = eigenvalues.first().copied().unwrap_or_else(T::zero);
        let upper = eigenvalues.last().copied().unwrap_or_else(T::zero);
        let is_frame = upper > T::zero() && lower > tol.frame_threshold(upper);
        let is_parseval = max_deviation(&eigenvalues, T::one()) <= tol.id;
        let mean = eigenvalues.iter().copied().sum::<T>() / T::lit(eigenvalues.len().max(1) as f64);
        let tight = is_frame && max_deviation(&eigenvalues, mean) <= tol.id * mean;
        FrameBounds {
            lower,
            upper,
            is_frame,
            is_parseval,
            tight_constant: tight.then_some(mean),
            eigenvalues,
        }
    }

    pub fn is_tight(&self, lambda: T, tol: T) -> bool {
        max_deviation(&self.eigenvalues, lambda) <= tol * lambda
    }

    /// `max_i |λ_i - 1|`.
    pub fn parseval_deviation(&self) -> T {
        max_deviation(&self.eigenvalues, T::one())
    }

    pub fn condition_number(&self) -> T {
        self.upper / self.lower
    }
}

pub(crate) fn max_deviation<T: Real>(values: &[T], target: T) -> T {
    values
        .iter()
        .map(|&l| (l - target).abs())
        .fold(T::zero(), T::max)
}

/// Both sides of the two frame-bound inequalities
/// `||Sf||² ≤ ||S|| Σ|<f,f_i>|²` and `Σ|<f,f_i>|² ≤ ||S⁻¹|| ||Sf||²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BesselCheck<T> {
    pub lhs1: T,
    pub rhs1: T,
    pub lhs2: T,
    pub rhs2: T,
    pub pass: bool,
}

impl<T: Real> Frame<T> {
    /// Builds a frame, inferring the field from the entries.
    pub fn new(dim: usize, vectors: Vec<Vector<T>>) -> Result<Self> {
        let field = if vectors.iter().all(Vector::is_real) {
            Field::Real
        } else {
            Field::Complex
        };
        Self::with_field(dim, field, vectors)
    }

    /// Builds a frame with an explicit field tag; a real tag requires every imaginary part to be zero.
    pub fn with_field(dim: usize, field: Field, vectors: Vec<Vector<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(FrameError::BadParams("dimension must be at least 1".into()));
        }
        if vectors.is_empty() {
            return Err(FrameError::BadParams("a frame needs at least one vector".into()));
        }
        for v in &vectors {
            if v.len() != dim {
                return Err(FrameError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if !v.is_finite() {
                return Err(FrameError::BadParams("non-finite vector entry".into()));
            }
            if field == Field::Real && !v.is_real() {
                return Err(FrameError::Format(
                    "real-tagged family has a nonzero imaginary part".into(),
                ));
            }
        }
        let operator = operator_of(dim, &vectors);
        Ok(Frame {
            dim,
            field,
            vectors,
            operator,
        })
    }

    /// Frame derived from `self` by a computation that may leave rounding
    /// noise in imaginary parts of a real frame.
    pub(crate) fn derived(&self, vectors: Vec<Vector<T>>) -> Result<Self> {
        let vectors = match self.field {
            Field::Real => vectors.iter().map(Vector::real_part).collect(),
            Field::Complex => vectors,
        };
        Self::with_field(self.dim, self.field, vectors)
    }

    pub fn from_real_vectors(vectors: &[&[T]]) -> Result<Self> {
        let dim = vectors.first().map_or(0, |v| v.len());
        Self::with_field(dim, Field::Real, vectors.iter().map(|v| Vector::from_real(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vectors(&self) -> &[Vector<T>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &Vector<T> {
        &self.vectors[i]
    }

    /// The frame operator `S = Σ f_i f_i*`.
    pub fn operator(&self) -> &HermitianMatrix<T> {
        &self.operator
    }

    pub fn bounds(&self) -> Result<FrameBounds<T>> {
        self.bounds_with(&T::tolerances())
    }

    pub fn bounds_with(&self, tol: &Tolerances<T>) -> Result<FrameBounds<T>> {
        let eig = self.operator.eig()?;
        Ok(FrameBounds::from_eigenvalues(eig.eigenvalues, tol))
    }

    fn require_frame(&self) -> Result<FrameBounds<T>> {
        let bounds = self.bounds()?;
        if !bounds.is_frame {
            return Err(FrameError::NotAFrame {
                lower: bounds.lower.as_f64(),
                threshold: T::tolerances().frame_threshold(bounds.upper).as_f64(),
            });
        }
        Ok(bounds)
    }

    fn check_dim(&self, f: &Vector<T>) -> Result<()> {
        if f.len() != self.dim {
            return Err(FrameError::DimensionMismatch {
                expected: self.dim,
                found: f.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, j: &IndexSubset) -> Result<()> {
        if let Some(&index) = j.indices().iter().find(|&&i| i >= self.len()) {
            return Err(FrameError::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        if j.universe() != self.len() {
            return Err(FrameError::DimensionMismatch {
                expected: self.len(),
                found: j.universe(),
            });
        }
        Ok(())
    }

    /// Analysis coefficients `c_i = <f, f_i>`.
    pub fn coefficients(&self, f: &Vector<T>) -> Result<Vec<Scalar<T>>> {
        self.check_dim(f)?;
        Ok(self.vectors.iter().map(|fi| f.inner(fi)).collect())
    }

    /// `Σ_{i∈J} |<f, f_i>|²`.
    pub fn partial_energy(&self, j: &IndexSubset, f: &Vector<T>) -> Result<T> {
        self.check_dim(f)?;
        self.check_subset(j)?;
        Ok(j.iter().map(|i| f.inner(&self.vectors[i]).norm_sqr()).sum())
    }

    /// `S_J f = Σ_{i∈J} <f, f_i> f_i`.
    pub fn partial_apply(&self, j: &IndexSubset, f: &Vector<T>) -> Result<Vector<T>> {
        self.check_dim(f)?;
        self.check_subset(j)?;
        let mut out = Vector::zeros(self.dim);
        for i in j.iter() {
            let fi = &self.vectors[i];
            out.axpy(f.inner(fi), fi);
        }
        Ok(out)
    }

    /// Matrix of `S_J`.
    pub fn partial_operator(&self, j: &IndexSubset) -> Result<HermitianMatrix<T>> {
        self.check_subset(j)?;
        let selected: Vec<Vector<T>> = j.iter().map(|i| self.vectors[i].clone()).collect();
        Ok(operator_of(self.dim, &selected))
    }

    /// Synthesis `Σ c_i f_i`.
    pub fn synthesize(&self, coefficients: &[Scalar<T>]) -> Result<Vector<T>> {
        if coefficients.len() != self.len() {
            return Err(FrameError::DimensionMismatch {
                expected: self.len(),
                found: coefficients.len(),
            });
        }
        let mut out = Vector::zeros(self.dim);
        for (c, fi) in coefficients.iter().zip(&self.vectors) {
            out.axpy(*c, fi);
        }
        Ok(out)
    }

    /// `{S⁻¹ f_i}`.
    pub fn canonical_dual(&self) -> Result<Frame<T>> {
        self.require_frame()?;
        let inv = psd_apply(&self.operator, SpectralFn::Inverse)?;
        self.derived(self.vectors.iter().map(|v| inv.apply(v)).collect())
    }

    /// `{S^{-1/2} f_i}`, the canonical Parseval frame with the same span structure.
    pub fn parsevalize(&self) -> Result<Frame<T>> {
        self.require_frame()?;
        let inv_sqrt = psd_apply(&self.operator, SpectralFn::InvSqrt)?;
        let first = self.derived(self.vectors.iter().map(|v| inv_sqrt.apply(v)).collect())?;
        // one refinement pass: for ill-conditioned S the first result is only
        // Parseval to about eps * cond(S), its own operator is close to I
        let refine = psd_apply(&first.operator, SpectralFn::InvSqrt)?;
        first.derived(first.vectors.iter().map(|v| refine.apply(v)).collect())
    }

    pub fn scaled(&self, alpha: T) -> Result<Frame<T>> {
        self.derived(self.vectors.iter().map(|v| v.scale_real(alpha)).collect())
    }

    /// Concatenation `{f_i} ∪ {g_k}`; the result is complex if either input is.
    pub fn union(&self, other: &Frame<T>) -> Result<Frame<T>> {
        self.extended(other.vectors())
    }

    /// `{f_i} ∪ extra`, where `extra` may be empty.
    pub fn extended(&self, extra: &[Vector<T>]) -> Result<Frame<T>> {
        let mut vectors = self.vectors.clone();
        vectors.extend(extra.iter().cloned());
        let field = if self.field == Field::Real && extra.iter().all(Vector::is_real) {
            Field::Real
        } else {
            Field::Complex
        };
        Frame::with_field(self.dim, field, vectors)
    }

    pub fn subframe(&self, j: &IndexSubset) -> Result<Frame<T>> {
        self.check_subset(j)?;
        Frame::with_field(
            self.dim,
            self.field,
            j.iter().map(|i| self.vectors[i].clone()).collect(),
        )
    }

    /// Checks both frame-bound inequalities at `f`, with slack `τ_id·max(1, ||f||²·B)`.
    pub fn bessel_inequality_check(&self, f: &Vector<T>) -> Result<BesselCheck<T>> {
        self.check_dim(f)?;
        let bounds = self.require_frame()?;
        let tol = T::tolerances();
        let energy: T = self.coefficients(f)?.iter().map(|c| c.norm_sqr()).sum();
        let sf = self.operator.apply(f);
        let sf_norm = sf.norm_sqr();
        let lhs1 = sf_norm;
        let rhs1 = bounds.upper * energy;
        let lhs2 = energy;
        let rhs2 = sf_norm / bounds.lower;
        let slack = |a: T, b: T| tol.id * T::one().max(a.abs()).max(b.abs());
        let pass = lhs1 <= rhs1 + slack(lhs1, rhs1) && lhs2 <= rhs2 + slack(lhs2, rhs2);
        Ok(BesselCheck {
            lhs1,
            rhs1,
            lhs2,
            rhs2,
            pass,
        })
    }

    /// Zero vector of the ambient dimension.
    pub fn zero_vector(&self) -> Vector<T> {
        Vector::new(vec![Complex::zero(); self.dim])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mercedes() -> Frame<f64> {
        let r = (2.0f64 / 3.0).sqrt();
        let vs: Vec<Vector<f64>> = (0..3)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
                Vector::from_real(&[r * t.cos(), r * t.sin()])
            })
            .collect();
        Frame::new(2, vs).unwrap()
    }

    fn close(a: &Matrix<f64>, b: &Matrix<f64>, tol: f64) -> bool {
        (a - b).frobenius_norm() <= tol
    }

    fn e(k: usize) -> Vector<f64> {
        Vector::basis(2, k)
    }

    #[test]
    fn frame_operator_examples() {
        let onb = Frame::new(2, vec![e(0), e(1)]).unwrap();
        assert!(close(onb.operator(), &Matrix::identity(2), 0.0));
        let f = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap();
        assert!(close(f.operator(), &Matrix::diagonal(&[2.0, 1.0]), 0.0));
        assert!(close(mercedes().operator(), &Matrix::identity(2), 1e-15));
    }

    #[test]
    fn bounds_examples() {
        let onb3 = Frame::new(3, (0..3).map(|k| Vector::basis(3, k)).collect()).unwrap();
        let b = onb3.bounds().unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 1.0));
        assert!(b.is_parseval);

        let b = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap().bounds().unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 2.0));
        assert!(b.is_frame && !b.is_parseval && b.tight_constant.is_none());

        let b = Frame::new(2, vec![e(0), e(0), e(1), e(1)]).unwrap().bounds().unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 2.0));
        assert_eq!(b.tight_constant, Some(2.0));
        assert!(b.is_tight(2.0, 1e-9));
    }

    #[test]
    fn non_frame_is_reported_not_rejected() {
        let f = Frame::new(2, vec![e(0)]).unwrap();
        let b = f.bounds().unwrap();
        assert!(!b.is_frame);
        assert!(matches!(f.canonical_dual(), Err(FrameError::NotAFrame { .. })));
        assert!(matches!(f.parsevalize(), Err(FrameError::NotAFrame { .. })));
    }

    #[test]
    fn canonical_dual_examples() {
        let m = mercedes();
        let d = m.canonical_dual().unwrap();
        for (a, b) in m.vectors().iter().zip(d.vectors()) {
            assert!(a.max_abs_diff(b) < 1e-14);
        }
        let d = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap().canonical_dual().unwrap();
        let expect = [e(0).scale_real(0.5), e(0).scale_real(0.5), e(1)];
        for (a, b) in d.vectors().iter().zip(&expect) {
            assert!(a.max_abs_diff(b) < 1e-15);
        }
        let d = Frame::new(2, vec![e(0).scale_real(2.0), e(1)]).unwrap().canonical_dual().unwrap();
        assert!(d.vector(0).max_abs_diff(&e(0).scale_real(0.5)) < 1e-15);
        assert!(d.vector(1).max_abs_diff(&e(1)) < 1e-15);
        assert_eq!(d.field(), Field::Real);
    }

    #[test]
    fn parsevalize_examples() {
        let s = 0.5f64.sqrt();
        let p = Frame::new(2, vec![e(0), e(0), e(1), e(1)]).unwrap().parsevalize().unwrap();
        for (k, v) in p.vectors().iter().enumerate() {
            assert!(v.max_abs_diff(&e(k / 2).scale_real(s)) < 1e-15);
        }
        let p = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap().parsevalize().unwrap();
        let expect = [e(0).scale_real(s), e(0).scale_real(s), e(1)];
        for (a, b) in p.vectors().iter().zip(&expect) {
            assert!(a.max_abs_diff(b) < 1e-15);
        }
        let m = mercedes();
        let p = m.parsevalize().unwrap();
        for (a, b) in m.vectors().iter().zip(p.vectors()) {
            assert!(a.max_abs_diff(b) < 1e-14);
        }
    }

    #[test]
    fn parsevalize_ill_conditioned() {
        let f = Frame::from_real_vectors(&[&[1.0, 0.0, 0.0], &[1.0, 1e-4, 0.0], &[1.0, 1e-4, 1e-4], &[0.0, 1.0, 1e-4]])
            .unwrap();
        assert!(f.bounds().unwrap().condition_number() > 1e7);
        let p = f.parsevalize().unwrap();
        assert!(p.bounds().unwrap().parseval_deviation() < 1e-13);
    }

    #[test]
    fn coefficient_examples() {
        let r = (2.0f64 / 3.0).sqrt();
        let c = mercedes().coefficients(&e(0)).unwrap();
        let expect = [r, -r / 2.0, -r / 2.0];
        for (a, b) in c.iter().zip(expect) {
            assert!((a.re - b).abs() < 1e-15 && a.im == 0.0);
        }
        let f = Frame::new(2, vec![e(0), e(1)]).unwrap();
        let c = f.coefficients(&Vector::zeros(2)).unwrap();
        assert!(c.iter().all(|z| z.norm() == 0.0));
        assert!(matches!(
            f.coefficients(&Vector::zeros(3)),
            Err(FrameError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn partial_operator_examples() {
        let m = mercedes();
        let j0 = IndexSubset::new(vec![0], 3).unwrap();
        let s = m.partial_apply(&j0, &e(0)).unwrap();
        assert!(s.max_abs_diff(&Vector::from_real(&[2.0 / 3.0, 0.0])) < 1e-15);
        let sj = m.partial_operator(&j0).unwrap();
        assert!(close(&sj, &Matrix::diagonal(&[2.0 / 3.0, 0.0]), 1e-15));
        let empty = IndexSubset::empty(3);
        assert_eq!(m.partial_apply(&empty, &e(1)).unwrap(), Vector::zeros(2));
        assert!(close(&m.partial_operator(&empty).unwrap(), &Matrix::zeros(2, 2), 0.0));
        let f = Vector::from_real(&[0.3, -0.7]);
        assert!(m.partial_apply(&IndexSubset::full(3), &f).unwrap().max_abs_diff(&f) < 1e-15);

        let onb = Frame::new(2, vec![e(0), e(1)]).unwrap();
        let p = onb.partial_operator(&IndexSubset::new(vec![0], 2).unwrap()).unwrap();
        assert!(close(&p, &Matrix::diagonal(&[1.0, 0.0]), 0.0));
        assert!(matches!(
            onb.partial_operator(&IndexSubset::full(3)),
            Err(FrameError::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn bessel_examples() {
        let f = Frame::new(2, vec![e(0), e(0), e(1)]).unwrap();
        let c = f.bessel_inequality_check(&e(0)).unwrap();
        assert_eq!((c.lhs1, c.rhs1), (4.0, 4.0));
        assert!(c.pass);
        let c = f.bessel_inequality_check(&e(1)).unwrap();
        assert_eq!((c.lhs2, c.rhs2), (1.0, 1.0));
        assert!(c.pass);
        let onb = Frame::new(2, vec![e(0), e(1)]).unwrap();
        let g = Vector::from_real(&[0.6, 0.8]);
        let c = onb.bessel_inequality_check(&g).unwrap();
        for v in [c.lhs1, c.rhs1, c.lhs2, c.rhs2] {
            assert!((v - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn real_tag_rejects_imaginary_parts() {
        let v = Vector::new(vec![Complex::new(1.0, 0.5), Complex::new(0.0, 0.0)]);
        assert!(Frame::with_field(2, Field::Real, vec![v.clone()]).is_err());
        assert_eq!(Frame::new(2, vec![v]).unwrap().field(), Field::Complex);
    }
}
