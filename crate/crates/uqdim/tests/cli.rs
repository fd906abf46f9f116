//! End-to-end tests of the command-line binary: output schemas, exit
//! codes, and byte-for-byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn qdim_json_has_expected_denominator_constants() {
    let out = run(&[
        "qdim", "--series", "sl", "--rank", "7", "--lambda", "3,1", "--tau", "2,1,1", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["unit"], "x/2");
    assert_eq!(doc["prefactor"], "1");
    let mut consts: Vec<String> = doc["denominator"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|arg| arg["N"] == "0")
        .map(|arg| arg["const"].as_str().unwrap().to_string())
        .collect();
    consts.sort();
    assert_eq!(consts, ["1", "1", "1", "1", "2", "2", "4", "4"]);
}

#[test]
fn reconstruct_latex_contains_known_factors() {
    let out = run(&[
        "reconstruct",
        "--lambda",
        "3,1",
        "--tau",
        "2,1,1",
        "--format",
        "latex",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for piece in [
        "\\sinh\\left[\\frac{\\alpha x}{4}\\right]^{2}",
        "\\sinh\\left[\\frac{\\beta x}{4}\\right]^{2}",
        "\\sinh\\left[\\frac{(\\beta-\\alpha) x}{4}\\right]^{2}",
        "\\sinh\\left[\\frac{(\\beta-3\\alpha) x}{4}\\right]",
        "\\sinh\\left[\\frac{(3\\beta-\\alpha) x}{4}\\right]",
    ] {
        assert!(text.contains(piece), "missing {piece} in {text}");
    }
}

#[test]
fn reconstruct_json_schema() {
    let out = run(&[
        "reconstruct",
        "--lambda",
        "3,1",
        "--tau",
        "2,1,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["y_k"], "2");
    assert_eq!(doc["pairs"].as_array().unwrap().len(), 8);
    assert_eq!(doc["pairs"][0], serde_json::json!(["1", "1"]));
    assert!(doc["universal_denominator"]["numerator"].is_array());
    assert_eq!(doc["limit_polynomial"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_passes_and_reports() {
    let out = run(&[
        "verify",
        "--formula",
        "adjoint",
        "--series",
        "so",
        "--ranks",
        "8:14",
        "--x",
        "0.1,0.5",
        "--tol",
        "1e-9",
    ]);
    assert!(out.status.success(), "exit 0 on pass");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc[0]["formula"], "adjoint");
    assert_eq!(doc[0]["series"], "so");
    assert!(doc[0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn dim_evaluates_exactly() {
    let out = run(&[
        "dim",
        "--formula",
        "dimE",
        "--alpha",
        "-2",
        "--beta",
        "2",
        "--gamma",
        "6",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "24500");
}

#[test]
fn square_check_exceptional_point() {
    let out = run(&[
        "square-check",
        "--family",
        "exc",
        "--param",
        "8",
        "--x",
        "0.1,0.3,0.7",
        "--tol",
        "1e-9",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["gamma"], "20");
    assert!(doc["failures"].as_array().unwrap().is_empty());
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        vec!["qdim", "--series", "sl", "--rank", "7", "--lambda", "1,2"],
        vec!["qdim", "--series", "so", "--rank", "8", "--lambda", "2"],
        vec![
            "qdim", "--series", "sl", "--rank", "3", "--lambda", "3,1", "--tau", "2,1,1",
        ],
        vec![
            "verify",
            "--formula",
            "nope",
            "--series",
            "sl",
            "--ranks",
            "6:8",
            "--x",
            "0.5",
            "--tol",
            "1e-9",
        ],
        vec![
            "verify",
            "--formula",
            "adjoint",
            "--series",
            "sl",
            "--ranks",
            "8:6",
            "--x",
            "0.5",
            "--tol",
            "1e-9",
        ],
        vec![
            "dim",
            "--formula",
            "adjoint",
            "--alpha",
            "x",
            "--beta",
            "2",
            "--gamma",
            "5",
        ],
        vec![
            "square-check",
            "--family",
            "sp",
            "--param",
            "7",
            "--x",
            "0.5",
            "--tol",
            "1e-9",
        ],
        vec![
            "qdim",
            "--series",
            "sl",
            "--rank",
            "7",
            "--lambda",
            "2",
            "--unknown-flag",
        ],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "no partial output for {args:?}");
    }
}

#[test]
fn reconstruct_infeasible_exits_one() {
    // Unequal areas are invalid input; a well-posed but unsolvable pairing
    // exits 1. Force the latter with a multiplet whose counts mismatch.
    let out = run(&["reconstruct", "--lambda", "2", "--tau", "1"]);
    assert_eq!(out.status.code(), Some(2), "area mismatch is invalid input");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec![
            "qdim",
            "--series",
            "so",
            "--rank",
            "12",
            "--diagram",
            "3,2,1,1,1",
            "--format",
            "json",
        ],
        vec![
            "reconstruct",
            "--lambda",
            "3,1",
            "--tau",
            "2,1,1",
            "--format",
            "json",
        ],
        vec![
            "interp",
            "--series",
            "sp",
            "--diagram",
            "5,2,1",
            "--format",
            "latex",
        ],
        vec![
            "verify",
            "--formula",
            "X2",
            "--series",
            "sl,so,sp",
            "--ranks",
            "6:10",
            "--x",
            "0.25",
            "--tol",
            "1e-9",
        ],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
