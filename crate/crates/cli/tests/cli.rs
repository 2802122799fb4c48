//! End-to-end behaviour of the `tpolylog` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tpolylog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpolylog"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/golden.json")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn eval_value(args: &[&str]) -> f64 {
    let o = tpolylog(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    v["value_re"].as_f64().unwrap()
}

#[test]
fn eval_examples() {
    let ln2 = 2f64.ln();
    assert!((eval_value(&["eval", "--s", "1", "--x", "-0.6931471805599453"]) - ln2).abs() < 1e-10);
    let z2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((eval_value(&["eval", "--s", "2", "--t", "1", "--positive-axis"]) - z2).abs() < 1e-10);
    // the singular term vanishes, leaving the regular series, here the golden value
    let want = -1.679_407_666_354_584;
    assert!(
        (eval_value(&["eval", "--s", "0.5", "--x", "1", "--side", "principal"]) - want).abs()
            < 1e-10
    );
}

#[test]
fn eval_prints_17_significant_digits() {
    let o = tpolylog(&["eval", "--s", "1", "--x", "-1"]);
    assert!(
        stdout(&o).contains("\"s_re\":1.0000000000000000e0"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn eval_exit_codes() {
    assert_eq!(
        tpolylog(&["eval", "--s", "0.5", "--x", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tpolylog(&["eval", "--s", "oops", "--x", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        tpolylog(&["eval", "--s", "1", "--x", "1", "--side", "sideways"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        tpolylog(&["eval", "--s", "1", "--t", "-1", "--positive-axis"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_grid_has_nine_rows_in_grid_major_order() {
    let o = tpolylog(&["scan", "--s", "0.5,1,1.5", "--x", "-2,-1,-0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["s_re", "s_im", "x", "side", "value_re", "value_im", "regime", "err"]
    );
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let key: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r[0].parse().unwrap(), r[2].parse().unwrap()))
        .collect();
    assert_eq!(key[0], (0.5, -2.0));
    assert_eq!(key[1], (0.5, -1.0));
    assert_eq!(key[3], (1.0, -2.0));
}

#[test]
fn scan_is_continuous_across_the_regime_boundary() {
    let xs: Vec<String> = [-1.0 - 1e-12, -1.0, -1.0 + 1e-12]
        .iter()
        .map(|x| format!("{x:.17}"))
        .collect();
    let o = tpolylog(&["scan", "--s", "0.5,2.5", "--x", &xs.join(",")]);
    let text = stdout(&o);
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    for pair in rows.windows(2).filter(|w| w[0][0] == w[1][0]) {
        let a: f64 = pair[0][4].parse().unwrap();
        let b: f64 = pair[1][4].parse().unwrap();
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
}

#[test]
fn scan_flags_failed_rows_and_rejects_empty_grids() {
    let o = tpolylog(&["scan", "--s", "0.5", "--x", "-1,9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.contains(",error,"), "{last}");
    assert_eq!(
        tpolylog(&["scan", "--s", "0.5", "--x"]).status.code(),
        Some(3)
    );
}

#[test]
fn scan_output_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let path = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_tpolylog"))
            .env("TPOLYLOG_THREADS", threads)
            .args([
                "scan",
                "--s",
                "0.5,1,1.5,2.5",
                "--s-im",
                "0.3",
                "--x",
                "-3,-1.5,-0.2,0.4,2",
                "--out",
            ])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        fs::read(path).unwrap()
    };
    let one = run("1", "a.csv");
    assert_eq!(one, run("4", "b.csv"));
    assert_eq!(one, run("4", "c.csv"));
    assert_eq!(
        Command::new(env!("CARGO_BIN_EXE_tpolylog"))
            .env("TPOLYLOG_THREADS", "zero")
            .args(["scan", "--s", "1", "--x", "-1"])
            .status()
            .unwrap()
            .code(),
        Some(3)
    );
}

#[test]
fn verify_suite_reports() {
    let o = tpolylog(&["verify", "modified"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let smooth = checks
        .iter()
        .find(|c| c["name"] == "lambda2_smoothness")
        .unwrap();
    assert!(smooth["table"].is_object() || smooth["table"].is_array());
    assert_eq!(tpolylog(&["verify", "everything"]).status.code(), Some(3));
}

#[test]
fn verify_pairing_reports_functional_equation_residuals() {
    let o = tpolylog(&["verify", "pairing"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let fe = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "functional_equation")
        .unwrap();
    assert!(fe["residual"].as_f64().unwrap() < 1e-7);
}

#[test]
fn golden_compare_accepts_checked_in_vectors() {
    let o = tpolylog(&["golden", "compare", fixture().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn golden_compare_reports_one_tampered_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    let mut records: Vec<Value> =
        serde_json::from_str(&fs::read_to_string(fixture()).unwrap()).unwrap();
    let v = records[0]["value_re"].as_f64().unwrap();
    records[0]["value_re"] = (v + 1e-3).into();
    fs::write(&path, serde_json::to_string(&records).unwrap()).unwrap();
    let o = tpolylog(&["golden", "compare", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let diffs = stdout(&o)
        .lines()
        .filter(|l| l.contains("\"passed\":false"))
        .count();
    assert_eq!(diffs, 1);
}

#[test]
fn golden_compare_missing_file_is_a_usage_error() {
    assert_eq!(
        tpolylog(&["golden", "compare", "/nonexistent/golden.json"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn golden_emit_then_compare_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("emitted.json");
    let o = tpolylog(&[
        "golden",
        "emit",
        path.to_str().unwrap(),
        "--from",
        fixture().to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(
        tpolylog(&["golden", "compare", path.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
}
