use std::path::{Path, PathBuf};
use std::process::Command;

use frametheory::frames::io::{read_frame, FrameDocument};
use frametheory::{Frame, FrameKind};
use serde_json::Value;

fn framecheck(args: &[&str]) -> (Value, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_framecheck"))
        .args(args)
        .output()
        .expect("framecheck runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (json, text, out.status.code().unwrap_or(-1))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn gen_round_trip_matches_in_memory_frame() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let (report, _, code) = framecheck(&[
        "gen", "random-parseval", "--dim", "3", "--count", "7", "--seed", "42", "--field", "complex", "--out",
        path_str(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"][0]["bounds"]["is_parseval"], true);
    let read: Frame<f64> = read_frame(&out).unwrap();
    let kind = FrameKind::RandomParseval { dim: 3, count: 7, seed: 42, field: frametheory::Field::Complex };
    let made: Frame<f64> = frametheory::frames::generate(&kind).unwrap();
    assert_eq!(read.operator(), made.operator());
    let eig = read.operator().eig().unwrap();
    assert!(eig.eigenvalues.iter().all(|l| (l - 1.0).abs() <= 1e-9));
}

#[test]
fn gen_without_out_prints_frame_document() {
    let (doc, _, code) = framecheck(&["gen", "onb", "--dim", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["field"], "real");
    let vectors = doc["vectors"].as_array().unwrap();
    assert_eq!(vectors.len(), 4);
    for (i, v) in vectors.iter().enumerate() {
        for (k, entry) in v.as_array().unwrap().iter().enumerate() {
            let want = if i == k { 1.0 } else { 0.0 };
            assert_eq!(entry[0].as_f64().unwrap(), want);
            assert_eq!(entry[1].as_f64().unwrap(), 0.0);
        }
    }
}

#[test]
fn gen_mercedes_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.json");
    let (report, _, code) = framecheck(&["gen", "mercedes", "--out", path_str(&out)]);
    assert_eq!(code, 0);
    let b = &report["results"][0]["bounds"];
    assert!((b["lower"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((b["upper"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let doc: FrameDocument<f64> = FrameDocument::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((doc.dim, doc.vectors.len()), (2, 3));
}

#[test]
fn gen_bad_params_exit_2() {
    let (err, _, code) = framecheck(&["gen", "harmonic", "--dim", "4", "--count", "2"]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "BadParams");
    let (_, _, code) = framecheck(&["gen", "onb"]);
    assert_eq!(code, 2);
}

fn mercedes_file(dir: &Path) -> PathBuf {
    let out = dir.join("m.json");
    let (_, _, code) = framecheck(&["gen", "mercedes", "--out", path_str(&out)]);
    assert_eq!(code, 0);
    out
}

#[test]
fn identity_hand_value_and_empty_subset() {
    let dir = tempfile::tempdir().unwrap();
    let m = mercedes_file(dir.path());
    let (r, _, code) = framecheck(&["identity", "--input", path_str(&m), "--variant", "pfi", "--J", "0", "--f", "1,0"]);
    assert_eq!(code, 0);
    let res = &r["results"][0];
    assert!((res["lhs"].as_f64().unwrap() - 2.0 / 9.0).abs() < 1e-12);
    assert!((res["rhs"].as_f64().unwrap() - 2.0 / 9.0).abs() < 1e-12);
    assert_eq!(r["summary"]["total"], 1);

    let (r, _, code) = framecheck(&["identity", "--input", path_str(&m), "--J", "", "--f", "0.3,-2"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["lhs"].as_f64().unwrap().abs(), 0.0);
    assert!(r["results"][0]["rhs"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn identity_variants() {
    let dir = tempfile::tempdir().unwrap();
    let m = mercedes_file(dir.path());
    let m = path_str(&m);
    let (r, _, code) = framecheck(&["identity", "--input", m, "--variant", "overlap", "--J", "0", "--E", "1", "--f", "e0"]);
    assert_eq!(code, 0);
    assert!((r["results"][0]["lhs"].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-12);

    let (r, _, code) = framecheck(&["identity", "--input", m, "--variant", "overlap", "--J", "0", "--E", "0", "--f", "e0"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "EOverlapsJ");

    for variant in ["general", "tight", "subspace"] {
        let (r, _, code) = framecheck(&["identity", "--input", m, "--variant", variant, "--seed", "5"]);
        assert_eq!(code, 0, "{variant}: {r}");
    }
    let (r, _, code) = framecheck(&[
        "identity", "--input", m, "--variant", "subspace", "--ambient-dim", "5", "--embed-seed", "2", "--f", "random",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["checks"]["projection_invariant"], true);
}

#[test]
fn tight_variant_on_doubled_basis() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "t.json",
        r#"{"dim":2,"field":"real","vectors":[[[1,0],[0,0]],[[1,0],[0,0]],[[0,0],[1,0]],[[0,0],[1,0]]]}"#,
    );
    let (r, _, code) = framecheck(&["identity", "--input", path_str(&f), "--variant", "tight", "--lambda", "2", "--J", "0", "--f", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["lhs"].as_f64().unwrap(), 1.0);
    let (r, _, code) = framecheck(&["identity", "--input", path_str(&f), "--variant", "pfi"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "NotParseval");
    let (_, _, code) = framecheck(&["identity", "--input", path_str(&f), "--variant", "pfi", "--parsevalize"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"dim":1,"field":"real","vectors":[[[1,0.5]]]}"#);
    let (r, _, code) = framecheck(&["identity", "--input", path_str(&bad)]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["kind"], "Format");

    let (r, _, code) = framecheck(&["analyze", "--input", path_str(&dir.path().join("missing.json"))]);
    assert_eq!(code, 2);
    assert_eq!(r["command"], "analyze");

    let m = mercedes_file(dir.path());
    let (_, _, code) = framecheck(&["identity", "--input", path_str(&m), "--J", "7"]);
    assert_eq!(code, 2);
    let (_, _, code) = framecheck(&["identity", "--input", path_str(&m), "--f", "1,2,3"]);
    assert_eq!(code, 2);
    let (_, _, code) = framecheck(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn complex_file_schema() {
    let dir = tempfile::tempdir().unwrap();
    let h = 0.5f64.sqrt();
    let text = format!(r#"{{"dim":1,"field":"complex","vectors":[[[{h},0]],[[0,{h}]]]}}"#);
    let f = write(dir.path(), "c.json", &text);
    let (r, _, code) = framecheck(&["identity", "--input", path_str(&f), "--J", "1", "--f", "0.2:0.7"]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn analyze_reports_dual_and_parsevalization() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "b.json", r#"{"dim":2,"field":"real","vectors":[[[1,0],[0,0]],[[1,0],[0,0]],[[0,0],[1,0]]]}"#);
    let dual = dir.path().join("dual.json");
    let pars = dir.path().join("pars.json");
    let (r, _, code) = framecheck(&[
        "analyze", "--input", path_str(&f), "--dual-out", path_str(&dual), "--parseval-out", path_str(&pars),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["bounds"]["lower"], 1.0);
    assert_eq!(r["results"][0]["bounds"]["upper"], 2.0);
    let d: Frame<f64> = read_frame(&dual).unwrap();
    assert!((d.vector(0)[0].re - 0.5).abs() < 1e-14);
    let p: Frame<f64> = read_frame(&pars).unwrap();
    assert!(p.bounds().unwrap().is_parseval);

    let degenerate = write(dir.path(), "d.json", r#"{"dim":2,"field":"real","vectors":[[[1,0],[0,0]]]}"#);
    let (r, _, code) = framecheck(&["analyze", "--input", path_str(&degenerate)]);
    assert_eq!(code, 1);
    assert_eq!(r["summary"]["failed"], 3);
}

#[test]
fn equiv_command() {
    let dir = tempfile::tempdir().unwrap();
    let m = mercedes_file(dir.path());
    let (r, _, code) = framecheck(&["equiv", "--input", path_str(&m), "--J", "0", "--f", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["none_hold"], true);
    let (onb, _, _) = framecheck(&["gen", "onb", "--dim", "3"]);
    let o = write(dir.path(), "o.json", &onb.to_string());
    let (r, _, code) = framecheck(&["equiv", "--input", path_str(&o), "--J", "0,2", "--f", "random", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["all_hold"], true);
}

#[test]
fn extend_examples() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "b.json", r#"{"dim":2,"field":"real","vectors":[[[1,0],[0,0]],[[1,0],[0,0]],[[0,0],[1,0]]]}"#);
    let g = dir.path().join("g.json");
    let (r, _, code) = framecheck(&["extend", "--input", path_str(&f), "--lambda", "2", "--out", path_str(&g)]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["added_count"], 1);
    let doc: FrameDocument<f64> = FrameDocument::from_json(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let added = doc.to_vectors().unwrap();
    assert_eq!(added.len(), 1);
    assert!((added[0][0].norm()).abs() < 1e-12 && (added[0][1].norm() - 1.0).abs() < 1e-12);

    let (r, _, code) = framecheck(&["extend", "--input", path_str(&f), "--lambda", "1"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "LambdaTooSmall");

    let m = mercedes_file(dir.path());
    let (r, _, code) = framecheck(&["extend", "--input", path_str(&m), "--out", path_str(&g)]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["added_count"], 0);
    let doc: FrameDocument<f64> = FrameDocument::from_json(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert!(doc.vectors.is_empty());

    let (r, _, code) = framecheck(&[
        "extend", "--input", path_str(&f), "--lambda", "3", "--mix-seed", "1", "--mix-seed", "2", "--extra", "2",
    ]);
    assert_eq!(code, 0, "{r}");
    let cmp = &r["results"][3]["report"];
    for key in ["energy_equal", "operator_equal", "span_equal"] {
        assert_eq!(cmp[key], true, "{key}");
    }
}

#[test]
fn property_run_contract() {
    let (r, _, code) = framecheck(&["property-run", "--suite", "pfi", "--trials", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["summary"]["total"], 1);
    assert_eq!(r["results"].as_array().unwrap().len(), 1);

    let (_, line, code) = framecheck(&["property-run", "--suite", "bounds", "--trials", "50", "--quiet"]);
    assert_eq!(code, 0);
    assert!(line.starts_with("property-run: total=50 passed=50 failed=0"), "{line}");
    assert!(line.contains("min_bound_ratio="));

    let (r, _, code) = framecheck(&["property-run", "--suite", "sj", "--trials", "5", "--dim-min", "3", "--count-min", "2"]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["kind"], "BadParams");

    let (_, _, code) = framecheck(&["property-run", "--suite", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn property_run_writes_out_file_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run.json");
    let args = ["property-run", "--suite", "equivalence", "--seed", "11", "--trials", "40", "--out", path_str(&out)];
    let (_, a, code) = framecheck(&args);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap().trim_end(), a.trim_end());
    let (_, b, _) = framecheck(&args);
    assert_eq!(a, b);
    let (_, c, _) = framecheck(&["property-run", "--suite", "equivalence", "--seed", "12", "--trials", "40"]);
    assert_ne!(a, c);
}
