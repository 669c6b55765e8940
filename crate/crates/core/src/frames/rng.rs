//! Seeded SplitMix64 generator.
//!
//! The exact sequence is part of the public contract: state advances by
//! `0x9E3779B97F4A7C15`, and each output applies the finalizer
//! `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`.
//! Uniforms take the top 53 bits; normals use one Box-Muller draw per pair of uniforms.

use std::f64::consts::PI;

use num_complex::Complex;

use super::Field;
use crate::numerics::{Real, Scalar, Vector};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM: u64 = 0xD1B5_4A32_D192_ED03;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream `index` of `seed`: seeded with
    /// `finalize(seed ^ (index + 1) * 0xD1B54A32D192ED03)`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64::new(finalize(seed ^ index.wrapping_add(1).wrapping_mul(STREAM)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        finalize(self.state)
    }

    /// Uniform on `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Standard normal via Box-Muller, with `u1` drawn from `(0, 1]`.
    pub fn normal(&mut self) -> f64 {
        let u1 = ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
    }

    /// A standard normal scalar: real `N(0,1)`, or complex with independent
    /// `N(0, 1/2)` real and imaginary parts.
    pub fn normal_scalar<T: Real>(&mut self, field: Field) -> Scalar<T> {
        match field {
            Field::Real => Complex::new(T::lit(self.normal()), T::zero()),
            Field::Complex => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                let re = self.normal() * s;
                let im = self.normal() * s;
                Complex::new(T::lit(re), T::lit(im))
            }
        }
    }

    pub fn normal_vector<T: Real>(&mut self, dim: usize, field: Field) -> Vector<T> {
        (0..dim).map(|_| self.normal_scalar(field)).collect()
    }

    pub fn unit_vector<T: Real>(&mut self, dim: usize, field: Field) -> Vector<T> {
        loop {
            let v: Vector<T> = self.normal_vector(dim, field);
            let n = v.norm();
            if n > T::zero() {
                return v.scale_real(T::one() / n);
            }
        }
    }
}
