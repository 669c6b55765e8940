use std::path::Path;

use frametheory::frames::io::{read_frame, FrameDocument};
use frametheory::frames::rng::SplitMix64;
use frametheory::frames::{
    complete_to_tight, coordinate_isometry, embed_subspace_frame, generate, random_isometry, TightCompletion,
};
use frametheory::identities::IdentityReport;
use frametheory::{Checker, Field, Frame, FrameError, FrameKind};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{
    AnalyzeArgs, Command, EquivArgs, ExtendArgs, GenArgs, GenKind, IdentityArgs, RunArgs, Variant,
};
use crate::envelope::{ReportEnvelope, Status, Summary};
use crate::error::{CliError, CliResult};
use crate::input::{parse_subset, parse_vector};
use crate::suites::{parse_suites, run_suites, summarize, RunConfig};

/// What a command prints and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

pub fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Gen(_) => "gen",
        Command::Analyze(_) => "analyze",
        Command::Identity(_) => "identity",
        Command::Equiv(_) => "equiv",
        Command::Extend(_) => "extend",
        Command::PropertyRun(_) => "property-run",
    }
}

pub fn execute(command: &Command) -> CliResult<Output> {
    match command {
        Command::Gen(a) => gen(a),
        Command::Analyze(a) => analyze(a),
        Command::Identity(a) => identity(a),
        Command::Equiv(a) => equiv(a),
        Command::Extend(a) => extend(a),
        Command::PropertyRun(a) => property_run(a),
    }
}

struct Entry {
    status: Status,
    rel_diff: Option<f64>,
    bound_ratio: Option<f64>,
    value: Value,
}

impl Entry {
    fn new(pass: bool, value: Value) -> Self {
        Entry {
            status: if pass { Status::Pass } else { Status::Fail },
            rel_diff: None,
            bound_ratio: None,
            value,
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> CliResult<Frame<f64>> {
    if !path.exists() {
        return Err(CliError::Io(format!("{}: no such file", path.display())));
    }
    Ok(read_frame(path)?)
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("reports serialize")
}

fn checker(tolerance: Option<f64>) -> Checker<f64> {
    match tolerance {
        Some(t) => Checker::new().with_report_tolerance(t),
        None => Checker::new(),
    }
}

fn emit(
    command: &str,
    config: Value,
    entries: Vec<Entry>,
    out: Option<&Path>,
    quiet: bool,
) -> CliResult<Output> {
    let summary = Summary::from_statuses(entries.iter().map(|e| (e.status, e.rel_diff, e.bound_ratio)));
    finish(command, config, entries.into_iter().map(|e| e.value).collect(), summary, out, quiet)
}

fn finish(
    command: &str,
    config: Value,
    results: Vec<Value>,
    summary: Summary,
    out: Option<&Path>,
    quiet: bool,
) -> CliResult<Output> {
    let exit_code = if summary.failed == 0 { 0 } else { 1 };
    let line = summary.line(command);
    let envelope = ReportEnvelope::new(command, config, results, summary);
    let text = envelope.to_json();
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    Ok(Output {
        stdout: if quiet { line } else { text },
        exit_code,
    })
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("{kind} needs --{flag}")))
}

fn gen(a: &GenArgs) -> CliResult<Output> {
    let field: Field = a.field.into();
    let kind = match a.kind {
        GenKind::Onb => FrameKind::Onb { dim: need(a.dim, "dim", "onb")? },
        GenKind::DoubledOnb => FrameKind::DoubledOnb { dim: need(a.dim, "dim", "doubled-onb")? },
        GenKind::Mercedes => FrameKind::Mercedes,
        GenKind::Harmonic => FrameKind::Harmonic {
            dim: need(a.dim, "dim", "harmonic")?,
            count: need(a.count, "count", "harmonic")?,
        },
        GenKind::RandomGaussian => FrameKind::RandomGaussian {
            dim: need(a.dim, "dim", "random-gaussian")?,
            count: need(a.count, "count", "random-gaussian")?,
            seed: a.seed,
            field,
        },
        GenKind::RandomParseval => FrameKind::RandomParseval {
            dim: need(a.dim, "dim", "random-parseval")?,
            count: need(a.count, "count", "random-parseval")?,
            seed: a.seed,
            field,
        },
    };
    let frame: Frame<f64> = generate(&kind)?;
    let doc = FrameDocument::from_frame(&frame).to_json();
    let Some(path) = &a.out else {
        return Ok(Output { stdout: doc, exit_code: 0 });
    };
    write_file(path, &doc)?;
    let bounds = frame.bounds()?;
    let pass = match a.kind {
        GenKind::RandomGaussian => bounds.is_frame,
        _ => bounds.is_parseval,
    };
    let entry = Entry::new(
        pass,
        json!({ "check": "frame_bounds", "path": path.display().to_string(), "bounds": bounds }),
    );
    emit("gen", to_value(&kind), vec![entry], None, a.quiet)
}

fn analyze(a: &AnalyzeArgs) -> CliResult<Output> {
    let frame = load(&a.input)?;
    let bounds = frame.bounds()?;
    let mut entries = vec![Entry::new(
        bounds.is_frame,
        json!({ "check": "frame_bounds", "condition_number": bounds.condition_number(), "bounds": bounds }),
    )];
    for (name, out, derived) in [
        ("canonical_dual", &a.dual_out, frame.canonical_dual()),
        ("parsevalize", &a.parseval_out, frame.parsevalize()),
    ] {
        let entry = match derived {
            Ok(g) => {
                let doc = FrameDocument::from_frame(&g);
                if let Some(path) = out {
                    write_file(path, &doc.to_json())?;
                }
                let gb = g.bounds()?;
                Entry::new(
                    gb.is_frame,
                    json!({ "check": name, "bounds": gb, "frame": doc }),
                )
            }
            Err(e) => Entry::new(false, json!({ "check": name, "error": { "kind": e.kind(), "message": e.to_string() } })),
        };
        entries.push(entry);
    }
    let config = json!({ "input": a.input.display().to_string() });
    emit("analyze", config, entries, a.report.out.as_deref(), a.report.quiet)
}

fn identity_entry(r: &IdentityReport<f64>) -> Entry {
    let mut e = Entry::new(r.all_pass(), to_value(r));
    e.rel_diff = Some(r.rel_diff);
    e
}

fn identity(a: &IdentityArgs) -> CliResult<Output> {
    let mut frame = load(&a.input)?;
    if a.parsevalize {
        frame = frame.parsevalize()?;
    }
    let c = checker(a.report.tolerance);
    let mut rng = SplitMix64::new(a.seed);
    let n = frame.len();
    let j = parse_subset(&a.j, n, &mut rng)?;
    let report = match a.variant {
        Variant::Pfi => {
            let f = parse_vector(&a.f, frame.dim(), frame.field(), &mut rng)?;
            c.pfi_report(&frame, &j, &f)?
        }
        Variant::General => {
            let f = parse_vector(&a.f, frame.dim(), frame.field(), &mut rng)?;
            c.general_identity_report(&frame, &j, &f)?
        }
        Variant::Tight => {
            let f = parse_vector(&a.f, frame.dim(), frame.field(), &mut rng)?;
            c.tight_identity_report(&frame, &j, &f, a.lambda)?
        }
        Variant::Overlap => {
            let e = parse_subset(&a.e, n, &mut rng)?;
            let f = parse_vector(&a.f, frame.dim(), frame.field(), &mut rng)?;
            c.overlap_identity_report(&frame, &j, &e, &f)?
        }
        Variant::Subspace => {
            let d = frame.dim();
            let m = a.ambient_dim.unwrap_or(d + 1);
            if m < d {
                return Err(CliError::Usage(format!("ambient dimension {m} is below the frame dimension {d}")));
            }
            let q = match a.embed_seed {
                Some(s) => random_isometry(&mut SplitMix64::new(s), m, d, frame.field()),
                None => coordinate_isometry(m, d),
            };
            let sf = embed_subspace_frame(&frame, &q)?;
            let f = parse_vector(&a.f, m, frame.field(), &mut rng)?;
            c.subspace_identity_report(&sf, &j, &f)?
        }
    };
    let config = json!({
        "input": a.input.display().to_string(),
        "variant": a.variant.name(),
        "J": a.j,
        "E": a.e,
        "f": a.f,
        "seed": a.seed,
        "lambda": a.lambda,
        "ambient_dim": a.ambient_dim,
        "embed_seed": a.embed_seed,
        "parsevalize": a.parsevalize,
        "tolerance": a.report.tolerance,
    });
    let mut entry = identity_entry(&report);
    if let Value::Object(map) = &mut entry.value {
        map.insert("J".into(), to_value(&j));
    }
    emit("identity", config, vec![entry], a.report.out.as_deref(), a.report.quiet)
}

fn equiv(a: &EquivArgs) -> CliResult<Output> {
    let mut frame = load(&a.input)?;
    if a.parsevalize {
        frame = frame.parsevalize()?;
    }
    let c = checker(a.report.tolerance);
    let mut rng = SplitMix64::new(a.seed);
    let j = parse_subset(&a.j, frame.len(), &mut rng)?;
    let f = parse_vector(&a.f, frame.dim(), frame.field(), &mut rng)?;
    let r = c.equivalence_conditions(&frame, &j, &f)?;
    let mut entry = Entry::new(
        r.consistent,
        json!({ "J": j, "all_hold": r.all_hold(), "none_hold": r.none_hold(), "equivalence": r }),
    );
    if r.borderline {
        entry.status = Status::Borderline;
    }
    let config = json!({
        "input": a.input.display().to_string(),
        "J": a.j,
        "f": a.f,
        "seed": a.seed,
        "parsevalize": a.parsevalize,
        "tolerance": a.report.tolerance,
    });
    emit("equiv", config, vec![entry], a.report.out.as_deref(), a.report.quiet)
}

fn extend(a: &ExtendArgs) -> CliResult<Output> {
    let frame = load(&a.input)?;
    let lambda = match a.lambda.trim() {
        "auto" => None,
        s => Some(
            s.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("--lambda expects a number or auto, got {s:?}")))?,
        ),
    };
    if a.mix_seed.len() > 2 {
        return Err(CliError::Usage("--mix-seed may be given at most twice".into()));
    }
    let c = checker(a.tolerance);
    let g = complete_to_tight(&frame, lambda)?;
    if let Some(path) = &a.out {
        write_file(path, &FrameDocument::from_vectors(g.dim, g.field, &g.vectors).to_json())?;
    }

    let tightness = |name: &str, t: &TightCompletion<f64>| -> CliResult<Entry> {
        let union = frame.extended(&t.vectors)?;
        let eig = union.operator().eig()?;
        let deviation = eig
            .eigenvalues
            .iter()
            .map(|l| (l - t.lambda).abs())
            .fold(0.0, f64::max);
        let pass = deviation <= c.tol.id * t.lambda;
        Ok(Entry::new(
            pass,
            json!({
                "check": "tightness",
                "completion": name,
                "lambda": t.lambda,
                "added_count": t.len(),
                "max_eigenvalue_deviation": deviation,
                "added": FrameDocument::from_vectors(t.dim, t.field, &t.vectors),
            }),
        ))
    };
    let mut entries = vec![tightness("canonical", &g)?];
    let mixes: Vec<(String, TightCompletion<f64>)> = a
        .mix_seed
        .iter()
        .map(|&s| (format!("mixed:{s}"), g.mixed(s, a.extra)))
        .collect();
    for (name, m) in &mixes {
        entries.push(tightness(name, m)?);
    }
    let pair = match mixes.as_slice() {
        [] => None,
        [(name, m)] => Some(("canonical".to_string(), &g, name.clone(), m)),
        [(n1, m1), (n2, m2)] => Some((n1.clone(), m1, n2.clone(), m2)),
        _ => unreachable!(),
    };
    if let Some((name_g, cg, name_h, ch)) = pair {
        let mut rng = SplitMix64::new(a.seed);
        let probe = rng.unit_vector(frame.dim(), frame.field());
        let entry = match c.tight_extension_compare(&frame, &cg.vectors, &ch.vectors, g.lambda, &probe, rng.next_u64()) {
            Ok(r) => Entry::new(r.pass, json!({ "check": "compare", "first": name_g, "second": name_h, "report": r })),
            Err(e @ FrameError::NotTight { .. }) => Entry::new(
                false,
                json!({ "check": "compare", "first": name_g, "second": name_h, "error": { "kind": e.kind(), "message": e.to_string() } }),
            ),
            Err(e) => return Err(e.into()),
        };
        entries.push(entry);
    }
    let config = json!({
        "input": a.input.display().to_string(),
        "lambda": a.lambda,
        "mix_seed": a.mix_seed,
        "extra": a.extra,
        "seed": a.seed,
        "tolerance": a.tolerance,
    });
    emit("extend", config, entries, a.report_out.as_deref(), a.quiet)
}

pub fn run_config(a: &RunArgs) -> RunConfig {
    RunConfig {
        seed: a.seed,
        trials: a.trials,
        dim_range: [a.dim_min, a.dim_max],
        count_range: [a.count_min, a.count_max],
        tolerance: a.report.tolerance,
    }
}

fn property_run(a: &RunArgs) -> CliResult<Output> {
    let suites = parse_suites(&a.suite)?;
    let config = run_config(a);
    config.validate()?;
    let records = run_suites(&suites, &config);
    let summary = summarize(&records);
    let mut echo = to_value(&config);
    if let Value::Object(map) = &mut echo {
        map.insert("suite".into(), json!(a.suite));
    }
    let results = records.iter().map(to_value).collect();
    finish("property-run", echo, results, summary, a.report.out.as_deref(), a.report.quiet)
}

