//! End-to-end tests of the `zeta-idd` binary: exit codes, output
//! formats, error JSON, and the environment-variable fallback.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_zeta-idd")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .env_remove("ZETA_IDD_ZEROS")
        .output()
        .expect("binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn eval_single_point_without_zeros() {
    let out = run(&["eval", "--t-min", "0", "--t-max", "0", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,g_explicit,g_zero_sum,tail_bound");
    let row = lines.next().unwrap();
    assert!(row.starts_with("0.0000000000000000e0,0.0000000000000000e0,,"), "{row}");
    assert_eq!(lines.next(), None);
}

#[test]
fn eval_row_count_matches_steps() {
    let out = run(&[
        "eval", "--t-min", "0", "--t-max", "2", "--steps", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 6); // header + 5 rows
}

#[test]
fn compare_requires_zeros() {
    let out = run(&["compare", "--t-min", "0", "--t-max", "1", "--steps", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).expect("error JSON");
    assert_eq!(err["code"], "ZEROS_REQUIRED");
}

#[test]
fn compare_with_bundled_fixture_passes() {
    let zeros = fixture("zeros1000.txt");
    let out = run(&[
        "compare",
        "--zeros",
        zeros.to_str().unwrap(),
        "--t-min",
        "0",
        "--t-max",
        "10",
        "--steps",
        "21",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("t,g_explicit,g_zero_sum,residual,tail_bound,within_bound\n"));
    assert_eq!(text.lines().count(), 22);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn zeros_env_var_is_a_fallback() {
    let zeros = fixture("zeros100.txt");
    let out = Command::new(binary())
        .args(["levy", "--out", "/dev/null"])
        .env("ZETA_IDD_ZEROS", &zeros)
        .output()
        .expect("binary should spawn");
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
}

#[test]
fn missing_zeros_file_is_an_io_error() {
    let out = run(&["levy", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).expect("error JSON");
    assert_eq!(err["code"], "IO_ERROR");
}

#[test]
fn malformed_zeros_file_is_a_usage_error() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("zeta_idd_bad_zeros_{}.txt", std::process::id()));
    std::fs::write(&path, "14.5\nnot-a-number\n").unwrap();
    let out = run(&["levy", "--zeros", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).expect("error JSON");
    assert_eq!(err["code"], "FORMAT");
    assert!(err["message"].as_str().unwrap().contains("line 2"));
}

#[test]
fn descending_zeros_file_is_a_validation_error() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("zeta_idd_desc_zeros_{}.txt", std::process::id()));
    std::fs::write(&path, "21.0\n14.1\n").unwrap();
    let out = run(&["eval", "--zeros", path.to_str().unwrap(), "--steps", "2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).expect("error JSON");
    assert_eq!(err["code"], "VALIDATION");
}

#[test]
fn sample_emits_n_rows_and_respects_seed() {
    let zeros = fixture("zeros100.txt");
    let args = [
        "sample",
        "--zeros",
        zeros.to_str().unwrap(),
        "--n",
        "1000",
        "--seed",
        "7",
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert_eq!(text.lines().next().unwrap(), "x");
    assert_eq!(text.lines().count(), 1001);

    let second = run(&args);
    assert_eq!(stdout(&second), text);

    let other_seed = run(&[
        "sample",
        "--zeros",
        zeros.to_str().unwrap(),
        "--n",
        "1000",
        "--seed",
        "8",
    ]);
    assert_ne!(stdout(&other_seed), text);
}

#[test]
fn levy_json_structure() {
    let zeros = fixture("zeros100.txt");
    let out = run(&["levy", "--zeros", zeros.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["measure"]["atoms"].as_array().unwrap().len(), 200);
    assert_eq!(doc["admissibility"]["passed"], true);
    assert!(doc["measure"]["truncation_height"].as_f64().unwrap() > 236.0);
}

#[test]
fn verify_fourier_passes_at_documented_point() {
    let out = run(&["verify-fourier", "--z", "0+2i", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let rows = doc.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["within_budget"], true);
    assert!(rows[0]["abs_error"].as_f64().unwrap() < 1e-6);
}

#[test]
fn check_cf_reports_pass() {
    let zeros = fixture("zeros1000.txt");
    let out = run(&[
        "check-cf",
        "--zeros",
        zeros.to_str().unwrap(),
        "--t-min",
        "0",
        "--t-max",
        "10",
        "--steps",
        "101",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["explicit_scan"]["violations"], 0);
    assert_eq!(doc["zero_sum_scan"]["violations"], 0);
    assert!(doc["bochner"]["min_eigenvalue"].as_f64().unwrap() >= -1e-8);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["eval", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_check_exits_with_one() {
    // A syntactically valid table whose ordinates are not zeta zeros:
    // the cross-route residual then dwarfs the tail bound.
    let dir = std::env::temp_dir();
    let path = dir.join(format!("zeta_idd_fake_zeros_{}.txt", std::process::id()));
    std::fs::write(&path, "1000.0\n1001.0\n1002.0\n").unwrap();
    let out = run(&[
        "compare",
        "--zeros",
        path.to_str().unwrap(),
        "--t-min",
        "1",
        "--t-max",
        "8",
        "--steps",
        "8",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().skip(1).any(|l| l.ends_with(",false")));
}

#[test]
fn unwritable_output_path_is_an_io_error() {
    let out = run(&[
        "eval", "--steps", "1", "--out", "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).expect("error JSON");
    assert_eq!(err["code"], "IO_ERROR");
}

#[test]
fn json_format_for_eval() {
    let out = run(&[
        "eval", "--t-min", "1", "--t-max", "1", "--steps", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let rows = doc.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert!((rows[0]["g_explicit"].as_f64().unwrap() - (-0.044_007_305_236_85)).abs() < 1e-9);
    assert!(rows[0]["g_zero_sum"].is_null());
}
