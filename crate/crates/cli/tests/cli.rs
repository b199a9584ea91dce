use std::process::Command;

use serde_json::Value;
use trigonal_cli::run_args;

fn run(args: &[&str]) -> trigonal_cli::Outcome {
    let mut full = vec!["trigonal"];
    full.extend_from_slice(args);
    run_args(full)
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn predict_genus_seven() {
    let out = run(&["predict", "--g", "7", "--n", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("0: 1 0 0 0\n1: 0 3 2 0\n2: 0 1 0 0\n3: 0 0 3 2\n"));
    let v = json(&["predict", "--g", "7", "--n", "1", "--format", "json"]);
    assert_eq!(v["predicted"]["entries"].to_string(), "[[0,0,1],[1,2,3],[1,3,1],[2,3,2],[2,5,3],[3,6,2]]");
    assert_eq!(v["closed_form_equal"], Value::Bool(true));
    assert_eq!(v["shape_check"], Value::Bool(true));
}

#[test]
fn predict_boundary_and_errors() {
    let out = run(&["predict", "--g", "6", "--n", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--allow-boundary"));
    let out = run(&["predict", "--g", "6", "--n", "1", "--allow-boundary"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("WARN:"));
    let out = run(&["predict", "--g", "6", "--n", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("3n + 3"));
    assert_eq!(run(&["predict", "--g", "4", "--n", "1"]).code, 2);
    assert_eq!(run(&["predict", "--g", "7"]).code, 2);
    assert_eq!(run(&["predict", "--g", "7", "--n", "1", "--m", "5"]).code, 2);
    let out = run(&["construct", "--g", "7", "--n", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("NotVeryAmple"));
    let out = run(&["verify", "--g", "8", "--n", "2", "--m", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn construct_then_resolve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g7.model");
    let p = path.to_str().unwrap();
    let out = run(&["construct", "--g", "7", "--n", "1", "--seed", "1", "--out", p]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("smooth: true"));
    let v = json(&["resolve", p, "--format", "json"]);
    assert_eq!(v["betti"]["entries"].to_string(), "[[0,0,1],[1,2,3],[1,3,1],[2,3,2],[2,5,3],[3,6,2]]");
    assert_eq!(v["complex"]["d2_zero"], Value::Bool(true));
    let oracle = json(&["resolve", p, "--oracle", "--format", "json"]);
    assert_eq!(oracle["betti"], v["betti"]);
    assert_eq!(oracle["path"], "oracle");

    let bad = dir.path().join("bad.model");
    std::fs::write(&bad, text.replace("f: ", "f: (")).unwrap();
    let out = run(&["resolve", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line"));
    let out = run(&["resolve", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(out.code, 2);
    // a generator that does not vanish on the curve
    std::fs::write(&bad, format!("{text}z0^2\n")).unwrap();
    assert_eq!(run(&["resolve", bad.to_str().unwrap()]).code, 1);
}

#[test]
fn construct_to_stdout_is_deterministic() {
    let a = run(&["construct", "--g", "10", "--n", "2", "--seed", "4"]);
    let b = run(&["construct", "--g", "10", "--n", "2", "--seed", "4"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("m: 4"));
}

#[test]
fn verify_is_maroni_independent() {
    let a = json(&["verify", "--g", "8", "--n", "1", "--m", "2", "--format", "json"]);
    let b = json(&["verify", "--g", "8", "--n", "1", "--m", "3", "--format", "json"]);
    assert_eq!(a["verdict"], "PASS");
    assert_eq!(b["verdict"], "PASS");
    assert_eq!(a["computed"], b["computed"]);
    let c = json(&["verify", "--g", "10", "--n", "2", "--m", "2", "--format", "json"]);
    assert_eq!(c["verdict"], "PASS");
    assert_eq!(c["case"]["e2"], 0);
}

#[test]
fn verify_with_explicit_bound() {
    let v = json(&["verify", "--g", "7", "--n", "1", "--m-max", "0", "--format", "json"]);
    assert_eq!(v["normality"]["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn survey_ranges() {
    let out = run(&["survey", "--g", "7", "--n", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("1 cells, all pass"));
    let out = run(&["survey", "--g", "5..6", "--n", "1..2", "--format", "json"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"all_pass":true,"cells":[]}"#);
    assert_eq!(run(&["survey", "--g", "7..x", "--n", "1"]).code, 2);
    assert_eq!(run(&["survey", "--g", "7..80", "--n", "1"]).code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_trigonal");
    let ok = Command::new(bin).args(["predict", "--g", "9", "--n", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let usage = Command::new(bin).args(["predict", "--g", "6", "--n", "2"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
