//! Seeded randomized sweeps behind `property-run`.
//!
//! Trial `t` of suite `s` draws from `SplitMix64::stream(seed, (s << 32) | t)`,
//! so every trial is reproducible on its own and results do not depend on the
//! order in which trials run.

use std::collections::BTreeMap;
use std::str::FromStr;

use frametheory::frames::rng::SplitMix64;
use frametheory::frames::{
    complete_to_tight, embed_subspace_frame, random_gaussian, random_isometry, random_parseval, Field, Frame,
    IndexSubset,
};
use frametheory::numerics::{Matrix, Vector};
use frametheory::{Checker, FrameError};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::envelope::{Status, Summary};

/// Largest condition number accepted for general-frame trials.
pub const GENERAL_MAX_CONDITION: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Pfi,
    General,
    Overlap,
    Bounds,
    Equivalence,
    Sj,
    Extension,
    Subspace,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Pfi,
        Suite::General,
        Suite::Overlap,
        Suite::Bounds,
        Suite::Equivalence,
        Suite::Sj,
        Suite::Extension,
        Suite::Subspace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pfi => "pfi",
            Suite::General => "general",
            Suite::Overlap => "overlap",
            Suite::Bounds => "bounds",
            Suite::Equivalence => "equivalence",
            Suite::Sj => "sj",
            Suite::Extension => "extension",
            Suite::Subspace => "subspace",
        }
    }

    fn tag(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64 + 1
    }
}

/// `all` or a single suite.
pub fn parse_suites(name: &str) -> Result<Vec<Suite>, FrameError> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::ALL
        .iter()
        .find(|s| s.name() == name)
        .map(|&s| vec![s])
        .ok_or_else(|| FrameError::BadParams(format!("unknown suite {name:?}")))
}

impl FromStr for Suite {
    type Err = FrameError;
    fn from_str(s: &str) -> Result<Self, FrameError> {
        parse_suites(s).and_then(|v| match v.as_slice() {
            [one] => Ok(*one),
            _ => Err(FrameError::BadParams("expected a single suite".into())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub dim_range: [usize; 2],
    pub count_range: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            trials: 1000,
            dim_range: [2, 16],
            count_range: [2, 64],
            tolerance: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), FrameError> {
        let [dmin, dmax] = self.dim_range;
        let [nmin, nmax] = self.count_range;
        if self.trials == 0 {
            return Err(FrameError::BadParams("trials must be at least 1".into()));
        }
        if dmin == 0 || dmin > dmax {
            return Err(FrameError::BadParams(format!("bad dimension range {dmin}..={dmax}")));
        }
        if nmin < dmin || nmin > nmax || nmax < dmax {
            return Err(FrameError::BadParams(format!(
                "count range {nmin}..={nmax} must satisfy d_min <= n_min <= n_max and n_max >= d_max"
            )));
        }
        Ok(())
    }

    pub fn checker(&self) -> Checker<f64> {
        match self.tolerance {
            Some(t) => Checker::new().with_report_tolerance(t),
            None => Checker::new(),
        }
    }

    fn draw_dim(&self, rng: &mut SplitMix64) -> usize {
        rng.range_inclusive(self.dim_range[0], self.dim_range[1])
    }

    fn draw_count(&self, rng: &mut SplitMix64, dim: usize) -> usize {
        rng.range_inclusive(self.count_range[0].max(dim), self.count_range[1])
    }
}

/// One trial's outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub suite: &'static str,
    pub trial: usize,
    pub dim: usize,
    pub count: usize,
    pub field: Field,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_ratio: Option<f64>,
    pub metrics: BTreeMap<&'static str, f64>,
    pub report: Value,
}

struct Outcome {
    status: Status,
    rel_diff: Option<f64>,
    bound_ratio: Option<f64>,
    metrics: BTreeMap<&'static str, f64>,
    report: Value,
}

impl Outcome {
    fn new(pass: bool, report: Value) -> Self {
        Outcome {
            status: if pass { Status::Pass } else { Status::Fail },
            rel_diff: None,
            bound_ratio: None,
            metrics: BTreeMap::new(),
            report,
        }
    }

    fn rel_diff(mut self, r: f64) -> Self {
        self.rel_diff = Some(r);
        self
    }

    fn metric(mut self, name: &'static str, v: f64) -> Self {
        self.metrics.insert(name, v);
        self
    }
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("reports serialize")
}

fn draw_field(rng: &mut SplitMix64) -> Field {
    if rng.coin() {
        Field::Complex
    } else {
        Field::Real
    }
}

pub fn run_trial(suite: Suite, config: &RunConfig, trial: usize) -> TrialRecord {
    let mut rng = SplitMix64::stream(config.seed, suite.tag() << 32 | trial as u64);
    let dim = config.draw_dim(&mut rng);
    let count = config.draw_count(&mut rng, dim);
    let field = draw_field(&mut rng);
    let checker = config.checker();
    let outcome = match suite {
        Suite::Pfi => pfi_trial(&checker, &mut rng, dim, count, field),
        Suite::General => general_trial(&checker, &mut rng, dim, count, field),
        Suite::Overlap => overlap_trial(&checker, &mut rng, dim, count, field),
        Suite::Bounds => bounds_trial(&checker, &mut rng, dim, count, field),
        Suite::Equivalence => equivalence_trial(&checker, &mut rng, dim, count, field, trial),
        Suite::Sj => sj_trial(&checker, &mut rng, dim, count, field),
        Suite::Extension => extension_trial(&checker, &mut rng, dim, count, field, trial),
        Suite::Subspace => subspace_trial(&checker, &mut rng, dim, count, field),
    };
    let outcome = outcome.unwrap_or_else(|e| {
        Outcome::new(false, json!({ "error": { "kind": e.kind(), "message": e.to_string() } }))
    });
    TrialRecord {
        suite: suite.name(),
        trial,
        dim,
        count,
        field,
        status: outcome.status,
        rel_diff: outcome.rel_diff,
        bound_ratio: outcome.bound_ratio,
        metrics: outcome.metrics,
        report: outcome.report,
    }
}

/// Runs `trials` trials of each suite in parallel, ordered by suite then trial index.
pub fn run_suites(suites: &[Suite], config: &RunConfig) -> Vec<TrialRecord> {
    suites
        .iter()
        .flat_map(|&suite| {
            (0..config.trials)
                .into_par_iter()
                .map(|t| run_trial(suite, config, t))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn summarize(records: &[TrialRecord]) -> Summary {
    Summary::from_statuses(records.iter().map(|r| (r.status, r.rel_diff, r.bound_ratio)))
}

type TrialResult = Result<Outcome, FrameError>;

fn pfi_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let frame = random_parseval(rng, d, n, field)?;
    let j = IndexSubset::random(rng, n);
    let f = rng.unit_vector(d, field);
    let r = c.pfi_report(&frame, &j, &f)?;
    Ok(Outcome::new(r.all_pass(), to_value(&r))
        .rel_diff(r.rel_diff)
        .metric("lhs", r.lhs)
        .metric("rhs", r.rhs))
}

/// Gaussian frame redrawn until `cond(S) <= GENERAL_MAX_CONDITION`.
fn conditioned_frame(rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> Result<(Frame<f64>, f64), FrameError> {
    loop {
        let frame = random_gaussian(rng, d, n, field)?;
        let b = frame.bounds()?;
        if b.is_frame && b.condition_number() <= GENERAL_MAX_CONDITION {
            return Ok((frame, b.condition_number()));
        }
    }
}

fn general_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let (frame, cond) = conditioned_frame(rng, d, n, field)?;
    let j = IndexSubset::random(rng, n);
    let f = rng.unit_vector(d, field);
    let r = c.general_identity_report(&frame, &j, &f)?;
    Ok(Outcome::new(r.all_pass(), to_value(&r))
        .rel_diff(r.rel_diff)
        .metric("condition_number", cond))
}

fn overlap_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let frame = random_parseval(rng, d, n, field)?;
    let j = IndexSubset::random(rng, n);
    let jc = j.complement();
    let e = IndexSubset::new(jc.iter().filter(|_| rng.coin()).collect(), n)?;
    let f = rng.unit_vector(d, field);
    let r = c.overlap_identity_report(&frame, &j, &e, &f)?;
    Ok(Outcome::new(r.all_pass(), to_value(&r)).rel_diff(r.rel_diff))
}

fn bounds_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let frame = random_parseval(rng, d, n, field)?;
    let j = IndexSubset::random(rng, n);
    let f = rng.unit_vector(d, field);
    let three = c.three_quarters_check(&frame, &j, &f)?;
    let half = c.half_bound_check(&frame, &j, &f)?;
    let bessel = frame.bessel_inequality_check(&f)?;
    let pass = three.pass && half.pass && bessel.pass && three.value >= half.bound;
    let mut out = Outcome::new(
        pass,
        json!({ "three_quarters": three, "half": half, "bessel": bessel }),
    )
    .metric("value", three.value)
    .metric("norm_sq", three.norm_sq);
    out.bound_ratio = Some(three.ratio);
    Ok(out)
}

/// Parseval frame for `C^d` built as an orthogonal union of Parseval frames for
/// the first `split` and the last `d - split` coordinates, with `J` one block.
fn orthogonal_union(
    rng: &mut SplitMix64,
    d: usize,
    n: usize,
    field: Field,
) -> Result<(Frame<f64>, IndexSubset), FrameError> {
    if d == 1 {
        let frame = random_parseval(rng, 1, n, field)?;
        return Ok((frame, IndexSubset::full(n)));
    }
    let split = rng.range_inclusive(1, d - 1);
    let rest = d - split;
    // n >= d, so each block gets at least its own dimension
    let n1 = rng.range_inclusive(split, n - rest);
    let a = random_parseval(rng, split, n1, field)?;
    let b = random_parseval(rng, rest, n - n1, field)?;
    let place = |v: &Vector<f64>, offset: usize| -> Vector<f64> {
        let mut out = Vector::zeros(d);
        for (k, z) in v.iter().enumerate() {
            out[offset + k] = *z;
        }
        out
    };
    let mut vectors: Vec<Vector<f64>> = a.vectors().iter().map(|v| place(v, 0)).collect();
    vectors.extend(b.vectors().iter().map(|v| place(v, split)));
    let frame = Frame::with_field(d, field, vectors)?;
    Ok((frame, IndexSubset::new((0..n1).collect(), n)?))
}

fn equivalence_trial(
    c: &Checker<f64>,
    rng: &mut SplitMix64,
    d: usize,
    n: usize,
    field: Field,
    trial: usize,
) -> TrialResult {
    // odd trials use the block construction, where all six conditions hold
    let construction = if trial % 2 == 1 { "orthogonal_union" } else { "random" };
    let (frame, j) = if trial % 2 == 1 {
        orthogonal_union(rng, d, n, field)?
    } else {
        let frame = random_parseval(rng, d, n, field)?;
        let j = IndexSubset::random(rng, n);
        (frame, j)
    };
    let f = rng.unit_vector(d, field);
    let r = c.equivalence_conditions(&frame, &j, &f)?;
    let mut out = Outcome::new(r.consistent, json!({ "construction": construction, "equivalence": r }))
        .metric("all_hold", if r.all_hold() { 1.0 } else { 0.0 });
    if r.borderline {
        out.status = Status::Borderline;
    }
    Ok(out)
}

fn sj_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let frame = random_parseval(rng, d, n, field)?;
    let j = IndexSubset::random(rng, n);
    let r = c.sj_structure_check(&frame, &j)?;
    Ok(Outcome::new(r.pass, to_value(&r))
        .metric("residual_identity", r.residual_identity)
        .metric("min_eig_product", r.min_eig_product)
        .metric("min_eig_gap", r.min_eig_gap))
}

fn extension_trial(
    c: &Checker<f64>,
    rng: &mut SplitMix64,
    d: usize,
    n: usize,
    field: Field,
    trial: usize,
) -> TrialResult {
    let frame = random_gaussian(rng, d, n, field)?;
    let top = frame.bounds()?.upper;
    // even trials complete at λ_max, odd trials above it
    let lambda = if trial.is_multiple_of(2) {
        None
    } else {
        Some(top * (1.0 + rng.next_f64()))
    };
    let g = complete_to_tight(&frame, lambda)?;
    let extra = rng.range_inclusive(0, 2);
    let h = g.mixed(rng.next_u64(), extra);
    let c_lambda = g.lambda;
    let tight_dev = |vectors: &[Vector<f64>]| -> Result<f64, FrameError> {
        let union = frame.extended(vectors)?;
        let eig = union.operator().eig()?;
        Ok(eig
            .eigenvalues
            .iter()
            .map(|l| (l - c_lambda).abs() / c_lambda)
            .fold(0.0, f64::max))
    };
    let dev_g = tight_dev(&g.vectors)?;
    let dev_h = tight_dev(&h.vectors)?;
    let probe = rng.unit_vector(d, field);
    let r = c.tight_extension_compare(&frame, &g.vectors, &h.vectors, c_lambda, &probe, rng.next_u64())?;
    Ok(Outcome::new(r.pass, json!({ "lambda": c_lambda, "added": [g.len(), h.len()], "compare": r }))
        .metric("tight_deviation_canonical", dev_g)
        .metric("tight_deviation_mixed", dev_h)
        .metric("operator_residual", r.operator_residual)
        .metric("max_energy_diff", r.max_energy_diff))
}

fn subspace_trial(c: &Checker<f64>, rng: &mut SplitMix64, d: usize, n: usize, field: Field) -> TrialResult {
    let frame = random_parseval(rng, d, n, field)?;
    let ambient = d + rng.range_inclusive(1, 4);
    let q: Matrix<f64> = random_isometry(rng, ambient, d, field);
    let sf = embed_subspace_frame(&frame, &q)?;
    let j = IndexSubset::random(rng, n);
    let f = rng.unit_vector(ambient, field);
    let r = c.subspace_identity_report(&sf, &j, &f)?;
    Ok(Outcome::new(r.all_pass(), to_value(&r))
        .rel_diff(r.rel_diff)
        .metric("ambient_dim", ambient as f64)
        .metric("projection_max_diff", r.terms["projectionMaxDiff"]))
}
