//! JSON frame documents.
//!
//! ```json
//! { "dim": 2, "field": "real", "vectors": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]] }
//! ```
//!
//! Each vector is an array of `dim` entries and each entry is a `[re, im]` pair.
//! A `"real"` document must have every `im` equal to zero.

use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{Field, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{Real, Vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameDocument<T> {
    pub dim: usize,
    pub field: Field,
    pub vectors: Vec<Vec<[T; 2]>>,
}

impl<T: Real> FrameDocument<T> {
    pub fn from_vectors(dim: usize, field: Field, vectors: &[Vector<T>]) -> Self {
        FrameDocument {
            dim,
            field,
            vectors: vectors
                .iter()
                .map(|v| v.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn from_frame(frame: &Frame<T>) -> Self {
        Self::from_vectors(frame.dim(), frame.field(), frame.vectors())
    }

    /// Validated vectors; an empty family is allowed here.
    pub fn to_vectors(&self) -> Result<Vec<Vector<T>>> {
        self.vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if v.len() != self.dim {
                    return Err(FrameError::Format(format!(
                        "vector {i} has {} entries, expected {}",
                        v.len(),
                        self.dim
                    )));
                }
                if let Some(k) = v.iter().position(|[re, im]| !re.is_finite() || !im.is_finite()) {
                    return Err(FrameError::Format(format!("vector {i} entry {k} is not finite")));
                }
                if self.field == Field::Real {
                    if let Some(k) = v.iter().position(|[_, im]| *im != T::zero()) {
                        return Err(FrameError::Format(format!(
                            "real-tagged frame has nonzero imaginary part at vector {i} entry {k}"
                        )));
                    }
                }
                Ok(v.iter().map(|&[re, im]| Complex::new(re, im)).collect())
            })
            .collect()
    }

    pub fn to_frame(&self) -> Result<Frame<T>> {
        Frame::with_field(self.dim, self.field, self.to_vectors()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("frame documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| FrameError::Format(e.to_string()))
    }
}

pub fn read_frame<T: Real>(path: &Path) -> Result<Frame<T>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FrameError::Format(format!("{}: {e}", path.display())))?;
    FrameDocument::from_json(&text)?.to_frame()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{generate, FrameKind};

    #[test]
    fn parses_documented_example() {
        let text = r#"{ "dim": 2, "field": "real", "vectors": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]] }"#;
        let f: Frame<f64> = FrameDocument::from_json(text).unwrap().to_frame().unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.bounds().unwrap().is_parseval);
    }

    #[test]
    fn real_tag_with_imaginary_part_is_rejected() {
        let text = r#"{ "dim": 1, "field": "real", "vectors": [[[1.0, 0.5]]] }"#;
        let err = FrameDocument::<f64>::from_json(text).unwrap().to_frame().unwrap_err();
        assert!(matches!(err, FrameError::Format(_)));
    }

    #[test]
    fn wrong_length_and_bad_json() {
        let text = r#"{ "dim": 2, "field": "complex", "vectors": [[[1.0, 0.5]]] }"#;
        assert!(FrameDocument::<f64>::from_json(text).unwrap().to_frame().is_err());
        assert!(FrameDocument::<f64>::from_json("{").is_err());
        assert!(FrameDocument::<f64>::from_json(r#"{"dim":1,"field":"quaternion","vectors":[]}"#).is_err());
    }

    #[test]
    fn round_trip_is_exact() {
        let f: Frame<f64> = generate(&FrameKind::Harmonic { dim: 3, count: 5 }).unwrap();
        let text = FrameDocument::from_frame(&f).to_json();
        let g: Frame<f64> = FrameDocument::from_json(&text).unwrap().to_frame().unwrap();
        assert_eq!(f, g);
    }
}
