use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn symbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbreak")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn gen_writes_connected_classes() {
    let path = tmp("gen4.g6");
    let out = symbreak(&["gen", "--max-order", "4", "--connected", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().count(), 1 + 1 + 2 + 6);
}

#[test]
fn transform_outputs_graph6_and_labels() {
    let out = symbreak(&["transform", "--op", "endline", "--graph6", "Bw", "--labels"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("E{O_"));
    let labels: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(labels.as_array().unwrap().len(), 6);
    assert_eq!(labels[3], serde_json::json!({"Pendant": 0}));
}

#[test]
fn invariant_reports_value_and_witness() {
    let out = symbreak(&["invariant", "--which", "D,chiD", "--graph6", "C6", "--witness"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["kind"], "D");
    assert_eq!(rows[0]["value"], 2);
    assert_eq!(rows[1]["kind"], "chiD");
    assert_eq!(rows[1]["value"], 4);
    assert_eq!(rows[1]["certified"], true);
    assert_eq!(rows[1]["witness"].as_object().unwrap().len(), 6);
}

#[test]
fn aut_lists_elements() {
    let out = symbreak(&["aut", "--graph6", "C4", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("order 8"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn construct_certifies_exception() {
    let out = symbreak(&["construct", "--which", "exceptional", "--graph", "K3,3"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["palette"], 5);
    assert_eq!(v["certification"]["proper"], true);
    assert_eq!(v["certification"]["distinguishing"], true);
    let thm47 = symbreak(&["construct", "--which", "thm47", "--graph", "K5+"]);
    assert!(thm47.status.success());
    let v: Value = serde_json::from_str(stdout(&thm47).trim()).unwrap();
    assert_eq!(v["palette"], 3);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(symbreak(&["verify", "--theorem", "thm-9.9", "--builtin", "3"]).status.code(), Some(2));
    assert_eq!(symbreak(&["verify", "--theorem", "thm-3.3"]).status.code(), Some(2));
    assert_eq!(symbreak(&["invariant", "--which", "D", "--graph6", "B!"]).status.code(), Some(2));
    assert_eq!(symbreak(&["invariant", "--which", "Dp", "--graph6", "K2"]).status.code(), Some(2));
    assert_eq!(symbreak(&["construct", "--which", "exceptional", "--graph", "C5"]).status.code(), Some(2));
}

#[test]
fn vertex_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .args(["aut", "--graph6", "C6"])
        .env("SYMBREAK_MAX_VERTICES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex count"));
}

#[test]
fn failed_records_exit_one() {
    // S(K3) has 6 vertices and fits under the cap; the subdivision of the
    // 6-vertex graph does not, so that record becomes an error.
    let corpus = tmp("one_large.g6");
    std::fs::write(&corpus, "Bw\nEQjO\n").unwrap();
    let report = tmp("one_large.json");
    let out = Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .args(["verify", "--theorem", "thm-3.3", "--corpus", corpus.to_str().unwrap()])
        .args(["--out", report.to_str().unwrap()])
        .env("SYMBREAK_MAX_VERTICES", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["summary"]["checked"], 2);
    assert_eq!(v["summary"]["failed"], 1);
    assert_eq!(v["summary"]["counterexamples"][0], "EQjO");
}

#[test]
fn tsv_has_one_row_per_graph() {
    let out = symbreak(&["verify", "--theorem", "thm-4.5", "--builtin", "4", "--format", "tsv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1 + 1 + 1 + 2 + 6);
}
