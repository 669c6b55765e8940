//! Exhaustive check of the Parseval identity against an independent evaluation.
//!
//! The oracle below works on raw `(re, im)` pairs and computes `||Σ_J c_i f_i||²`
//! through the Gram matrix, `Σ_{i,k∈J} c_i conj(c_k) <f_i, f_k>`, without touching
//! the library's vector or operator code.

use frametheory::frames::{generate, Field, Frame, FrameKind, IndexSubset};
use frametheory::numerics::Vector;
use frametheory::Checker;

type C = (f64, f64);

fn mul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn conj(a: C) -> C {
    (a.0, -a.1)
}

fn inner(a: &[C], b: &[C]) -> C {
    a.iter().zip(b).fold((0.0, 0.0), |acc, (&x, &y)| {
        let p = mul(x, conj(y));
        (acc.0 + p.0, acc.1 + p.1)
    })
}

fn raw(v: &Vector<f64>) -> Vec<C> {
    v.iter().map(|z| (z.re, z.im)).collect()
}

/// `(Σ_J |c_i|², ||Σ_J c_i f_i||²)` by direct summation.
fn oracle_sides(frame: &[Vec<C>], mask: u64, f: &[C]) -> (f64, f64) {
    let coeffs: Vec<C> = frame.iter().map(|fi| inner(f, fi)).collect();
    let members: Vec<usize> = (0..frame.len()).filter(|i| mask >> i & 1 == 1).collect();
    let energy = members.iter().map(|&i| coeffs[i].0.powi(2) + coeffs[i].1.powi(2)).sum();
    let mut norm = 0.0;
    for &i in &members {
        for &k in &members {
            let g = inner(&frame[i], &frame[k]);
            norm += mul(mul(coeffs[i], conj(coeffs[k])), g).0;
        }
    }
    (energy, norm)
}

fn corpus() -> Vec<(String, Frame<f64>)> {
    let mut out: Vec<(String, Frame<f64>)> = vec![
        ("mercedes".into(), generate(&FrameKind::Mercedes).unwrap()),
        ("doubled_onb(2)".into(), generate(&FrameKind::DoubledOnb { dim: 2 }).unwrap()),
        ("harmonic(2,4)".into(), generate(&FrameKind::Harmonic { dim: 2, count: 4 }).unwrap()),
    ];
    let shapes = [(2, 3, Field::Real), (2, 5, Field::Complex), (3, 4, Field::Real), (3, 5, Field::Complex), (3, 3, Field::Real)];
    for (k, &(dim, count, field)) in shapes.iter().enumerate() {
        let kind = FrameKind::RandomParseval { dim, count, seed: 100 + k as u64, field };
        out.push((format!("{kind:?}"), generate(&kind).unwrap()));
    }
    out
}

fn test_vectors(dim: usize) -> Vec<Vector<f64>> {
    use num_complex::Complex;
    (0..20)
        .map(|k| {
            (0..dim)
                .map(|j| {
                    let t = 0.37 * (k * dim + j) as f64 + 0.1;
                    let im = if k % 2 == 0 { 0.0 } else { (1.3 * t).cos() };
                    Complex::new(t.sin() * (1.0 + k as f64 / 7.0), im)
                })
                .collect()
        })
        .collect()
}

#[test]
fn every_subset_of_small_frames() {
    let checker = Checker::new();
    for (name, frame) in corpus() {
        let raw_frame: Vec<Vec<C>> = frame.vectors().iter().map(raw).collect();
        let n = frame.len();
        let full = (1u64 << n) - 1;
        for f in test_vectors(frame.dim()) {
            // real frames are exercised on real and complex vectors alike
            let rf = raw(&f);
            for mask in 0..=full {
                let j = IndexSubset::from_mask(mask, n);
                let report = checker.pfi_report(&frame, &j, &f).unwrap();
                assert!(report.rel_diff <= 1e-10, "{name} mask {mask:b}: {report:?}");

                let (sum_j, norm_j) = oracle_sides(&raw_frame, mask, &rf);
                let (sum_jc, norm_jc) = oracle_sides(&raw_frame, full & !mask, &rf);
                let scale = f.norm_sqr().max(1.0);
                for (name_t, got, want) in [
                    ("sumJ", report.terms["sumJ"], sum_j),
                    ("normJ", report.terms["normJ"], norm_j),
                    ("sumJc", report.terms["sumJc"], sum_jc),
                    ("normJc", report.terms["normJc"], norm_jc),
                ] {
                    assert!((got - want).abs() <= 1e-12 * scale, "{name} {name_t}: {got} vs {want}");
                }
                // oracle on its own satisfies the identity as well
                assert!(((sum_j - norm_j) - (sum_jc - norm_jc)).abs() <= 1e-10 * scale);
            }
        }
    }
}
