//! End-to-end tests of the binary: JSON shapes, determinism, exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tripcover"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (String, i32) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tripcover");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn forward_reports_positive_eta_flag() {
    let (stdout, code) = run_with_stdin(
        &["--command", "forward", "--input", "-"],
        r#"{"configs": [[0.3, 0.5]]}"#,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["pass"], true);
    assert_eq!(v["results"][0]["re_eta_positive"], true);
    let eta = v["results"][0]["eta"].as_array().unwrap();
    assert!(eta[0].as_f64().unwrap() > 0.0);
}

#[test]
fn forward_then_invert_round_trips() {
    let (stdout, code) = run_with_stdin(
        &["--command", "forward", "--input", "-"],
        r#"{"configs": [[0.25, 0.6]]}"#,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let r = &v["results"][0];
    let periods = serde_json::json!({ "periods": [[r["eta"], r["z1"], r["z2"]]] });
    let (stdout, code) = run_with_stdin(
        &["--command", "invert", "--input", "-"],
        &periods.to_string(),
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let x1 = v["results"][0]["x1_hat"][0].as_f64().unwrap();
    let x2 = v["results"][0]["x2_hat"][0].as_f64().unwrap();
    assert!((x1 - 0.25).abs() < 1e-6, "x1_hat = {x1}");
    assert!((x2 - 0.6).abs() < 1e-6, "x2_hat = {x2}");
    assert!(v["results"][0]["residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn lattice_check_values() {
    let (stdout, code) = run_with_stdin(&["--command", "lattice-check"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["det"], 9);
    assert_eq!(v["results"]["signature"], serde_json::json!([2, 2]));
}

#[test]
fn roundtrip_on_small_grid() {
    let (stdout, code) = run_with_stdin(
        &["--command", "roundtrip", "--input", "-"],
        r#"{"configs": [[0.2, 0.2], [0.3, 0.5], [0.6, 0.15]]}"#,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["results"]["max_abs_err"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["pass"], true);
}

#[test]
fn identical_job_configs_produce_identical_reports() {
    let args = [
        "--command",
        "orbit-check",
        "--seed",
        "42",
        "--quad-tol",
        "1e-10",
        "--theta-eps",
        "1e-12",
    ];
    let (a, code_a) = run_with_stdin(&args, "");
    let (b, code_b) = run_with_stdin(&args, "");
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b, "reports are not byte-identical");
    // a different seed changes nothing about validity
    let (c, code_c) = run_with_stdin(
        &["--command", "orbit-check", "--seed", "43"],
        "",
    );
    assert_eq!(code_c, 0);
    let v: serde_json::Value = serde_json::from_str(&c).unwrap();
    assert_eq!(v["results"]["membership_exact"], true);
}

#[test]
fn exit_codes() {
    // invariant failure: off-image period point -> exit 1 with error object
    let (stdout, code) = run_with_stdin(
        &["--command", "invert", "--input", "-"],
        r#"{"periods": [[[1.0, 0.3], [0.4, 0.2], [0.1, -0.3]]]}"#,
    );
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["error"]["kind"], "invalid-period");
    // usage error: missing required input -> exit 2
    let status = bin()
        .args(["--command", "invert"])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    // usage error: malformed flag value
    let status = bin()
        .args(["--command", "nonsense"])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn table_zeros_matches_expected_pattern() {
    let (stdout, code) = run_with_stdin(&["--command", "table-zeros"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["points"][0]["matches_expected"], true);
}

#[test]
fn theta_vanish_reports_small_residuals() {
    let (stdout, code) = run_with_stdin(&["--command", "theta-vanish"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["results"]["max_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn selftest_passes_and_prints_criteria() {
    let out = bin().args(["--command", "selftest"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let passes = text.matches("[PASS]").count();
    assert_eq!(passes, 9, "expected 9 criterion lines:\n{text}");
}
