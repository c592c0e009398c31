//! End-to-end runs of the binary: exit codes, report JSON, margin dumps,
//! and the rotation reroute.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use diskops::io::RunReport;

const CONTRACTING: &str = r#"{
  "alpha": [0.5, 0.0],
  "omega": {"kind": "poly", "coeffs": [[0.0, 0.0], [0.125, 0.0]]},
  "phi": {"kind": "poly", "coeffs": [[0.0, 0.0], [0.25, 0.0]]}
}"#;

const INNER_PHI: &str = r#"{
  "alpha": [0.5, 0.0],
  "omega": {"kind": "poly", "coeffs": [[0.0, 0.0], [0.3, 0.0]]},
  "phi": {"kind": "blaschke", "zeros": [[0.0, 0.0], [0.4, 0.0]], "rotation": 0.0}
}"#;

const IDENTITY_COMPOSITION: &str = r#"{
  "alpha": [0.0, 0.0],
  "omega": {"kind": "poly", "coeffs": [[0.0, 0.0]]},
  "phi": {"kind": "poly", "coeffs": [[0.0, 0.0], [1.0, 0.0]]}
}"#;

const HALF_TURN: &str = r#"{
  "alpha": [0.4, 0.0],
  "omega": {"kind": "poly", "coeffs": [[0.0, 0.0]]},
  "phi": {"kind": "poly", "coeffs": [[0.0, 0.0], [-1.0, 0.0]]}
}"#;

const WEIGHTED_HALF_TURN: &str = r#"{
  "alpha": [0.4, 0.0],
  "omega": {"kind": "poly", "coeffs": [[0.0, 0.0], [0.125, 0.0]]},
  "phi": {"kind": "poly", "coeffs": [[0.0, 0.0], [-1.0, 0.0]]}
}"#;

fn write_spec(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diskops"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("check"));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["check", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_preserving_spec_passes() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let out = run(&["check", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let rep: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(rep.verdict, "PASS");
    assert_eq!(rep.samples_checked, (24 + 20) * 128);
    assert!(rep.min_margin > 0.0);
    assert_eq!(rep.classification, "generic");
    assert!(rep.timings.contains_key("scan_ms"));
}

#[test]
fn check_report_goes_to_file_with_out() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let report = dir.path().join("report.json");
    let out = run(&["check", spec.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let rep: RunReport =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep.verdict, "PASS");
}

#[test]
fn check_grid_override_and_margin_dump() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let csv = dir.path().join("margins.csv");
    let out = run(&[
        "check",
        spec.to_str().unwrap(),
        "--grid",
        "6,16,4",
        "--dump-margins",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rep: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(rep.samples_checked, (6 + 4) * 16);
    let table = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "r,theta,margin");
    assert_eq!(lines.len(), 1 + 6 * 16);
}

#[test]
fn check_failing_spec_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "inner_phi.json", INNER_PHI);
    let out = run(&["check", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let rep: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(rep.verdict, "FAIL");
    assert!(rep.near_boundary_min.unwrap() < -1e-3);
    assert!(rep.classification.starts_with("phi inner-like"));
}

#[test]
fn check_small_margin_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "identity.json", IDENTITY_COMPOSITION);
    let out = run(&["check", spec.to_str().unwrap(), "--tol", "0.01"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr_of(&out));
    let rep: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(rep.verdict, "INCONCLUSIVE");
}

#[test]
fn check_malformed_spec_is_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "broken.json", "{ not json");
    let out = run(&["check", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("broken.json"));
}

#[test]
fn check_missing_spec_is_io_error() {
    let out = run(&["check", "/no/such/spec.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_single_claim_passes() {
    let out = run(&["verify-examples", "--only", "threshold-gates"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("[PASS] threshold-gates"));
    assert!(text.contains("1 of 1 claims passed (seed 2026)"));
}

#[test]
fn verify_unknown_claim_is_usage_error() {
    let out = run(&["verify-examples", "--only", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("unknown claim"));
}

#[test]
fn iterate_contraction_converges_from_two_starts() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let out = run(&[
        "iterate",
        spec.to_str().unwrap(),
        "--second-start",
        "generator",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["converged"], serde_json::json!(true));
    assert!(v["steps"].as_u64().unwrap() < 200);
    assert!(v["final_residual"].as_f64().unwrap() < 1e-10);
    assert!(v["second_start_gap"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["limit_coeffs"][0][0].as_f64().unwrap(), 1.0);
}

#[test]
fn iterate_step_limit_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let out = run(&["iterate", spec.to_str().unwrap(), "--max-iter", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_of(&out).contains("step limit"));
}

#[test]
fn iterate_rotation_reports_fixed_set_instead() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "half_turn.json", HALF_TURN);
    let out = run(&["iterate", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["rotation"], serde_json::json!("a rotation of order 2"));
    assert_eq!(v["multiplier"][0].as_f64().unwrap(), -1.0);
    assert!(v["fixed_set"].as_str().unwrap().contains("divisible by 2"));
}

#[test]
fn iterate_weighted_rotation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "weighted_half_turn.json", WEIGHTED_HALF_TURN);
    let out = run(&["iterate", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("rotation symbol with a nontrivial weight"));
}

#[test]
fn classify_flags_inner_phi_inconsistency() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "inner_phi.json", INNER_PHI);
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(v["class"].as_str().unwrap().starts_with("phi inner-like"));
    assert_eq!(v["consistent"], serde_json::json!(false));
    assert!(v["phi_inner_fraction"].as_f64().unwrap() > 0.98);
}

#[test]
fn classify_contraction_is_generic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "contracting.json", CONTRACTING);
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["class"], serde_json::json!("generic"));
    assert_eq!(v["consistent"], serde_json::Value::Null);
}
