//! End-to-end runs of the binary: exit codes, report shape, determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn btkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btkit"))
        .args(args)
        .env_remove("BTKIT_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[][..],
        &["nonsense"],
        &["relations", "--n", "9"],
        &["relations", "--points", "1"],
        &["relations", "--points", "0"],
        &["relations", "--n", "3", "--n-max", "2"],
        &["relations", "--jobs", "0"],
        &["relations", "--suite", "trace"],
    ] {
        let out = btkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn relations_pass_at_n3() {
    let out = btkit(&["relations", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "relations");
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["config"]["ns"], serde_json::json!([3]));
}

#[test]
fn quotient_reports_its_failures() {
    let out = btkit(&["--suite", "quotient", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let checks: Vec<&str> = v["failures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["check"].as_str().unwrap())
        .collect();
    assert!(checks.iter().any(|c| c.starts_with("spanning")), "{checks:?}");
    assert!(checks.iter().any(|c| c.contains("fff-cubic")), "{checks:?}");
}

#[test]
fn output_is_deterministic_and_independent_of_jobs() {
    let a = btkit(&["trace", "--n", "3", "--seed", "4"]);
    let b = btkit(&["trace", "--n", "3", "--seed", "4"]);
    let c = Command::new(env!("CARGO_BIN_EXE_btkit"))
        .args(["trace", "--n", "3", "--seed", "4"])
        .env("BTKIT_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn out_file_and_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let out = btkit(&["rank", "--n", "2", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# btkit rank: PASS"), "{text}");
    assert!(text.contains("| "));
}

#[test]
fn n_range_runs_each_value() {
    let out = btkit(&["relations", "--n", "2", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}
