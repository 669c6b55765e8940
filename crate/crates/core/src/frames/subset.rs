use serde::Serialize;

use super::rng::SplitMix64;
use crate::error::{FrameError, Result};

/// A subset `J` of the index set `{0, .., n-1}` of a frame.
///
/// Indices are kept sorted; the complement is always recomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSubset {
    indices: Vec<usize>,
    #[serde(skip)]
    universe: usize,
}

impl IndexSubset {
    pub fn new(mut indices: Vec<usize>, universe: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(&index) = indices.iter().find(|&&i| i >= universe) {
            return Err(FrameError::IndexOutOfRange {
                index,
                len: universe,
            });
        }
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(FrameError::BadParams(format!("duplicate index {}", w[0])));
        }
        Ok(IndexSubset { indices, universe })
    }

    pub fn empty(universe: usize) -> Self {
        IndexSubset {
            indices: Vec::new(),
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        IndexSubset {
            indices: (0..universe).collect(),
            universe,
        }
    }

    /// Subset selected by the low `universe` bits of `mask`.
    pub fn from_mask(mask: u64, universe: usize) -> Self {
        assert!(universe <= 64);
        IndexSubset {
            indices: (0..universe).filter(|i| mask >> i & 1 == 1).collect(),
            universe,
        }
    }

    /// Each index included independently with probability 1/2.
    pub fn random(rng: &mut SplitMix64, universe: usize) -> Self {
        IndexSubset {
            indices: (0..universe).filter(|_| rng.coin()).collect(),
            universe,
        }
    }

    /// `k` distinct indices chosen uniformly.
    pub fn random_of_size(rng: &mut SplitMix64, universe: usize, k: usize) -> Result<Self> {
        if k > universe {
            return Err(FrameError::BadParams(format!(
                "cannot pick {k} indices out of {universe}"
            )));
        }
        let mut pool: Vec<usize> = (0..universe).collect();
        for i in 0..k {
            let j = rng.range_inclusive(i, universe - 1);
            pool.swap(i, j);
        }
        pool.truncate(k);
        IndexSubset::new(pool, universe)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn complement(&self) -> Self {
        IndexSubset {
            indices: (0..self.universe).filter(|&i| !self.contains(i)).collect(),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        IndexSubset {
            indices: (0..self.universe)
                .filter(|&i| self.contains(i) || other.contains(i))
                .collect(),
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        IndexSubset {
            indices: self.iter().filter(|&i| !other.contains(i)).collect(),
            universe: self.universe,
        }
    }

    /// First index shared with `other`, if any.
    pub fn first_common(&self, other: &Self) -> Option<usize> {
        self.iter().find(|&i| other.contains(i))
    }

    /// Rebinds the subset to a new universe size after validating it.
    pub fn rebind(&self, universe: usize) -> Result<Self> {
        IndexSubset::new(self.indices.clone(), universe)
    }
}
