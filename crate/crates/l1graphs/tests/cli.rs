//! End-to-end tests of the binary: exit codes, batch mode, determinism, and
//! validation of every JSON output against the shipped schema files.

use std::process::{Command, Output};

const K23: &str = "D]o"; // K_{2,3}
const K4: &str = "C~";
const C5: &str = "Dhc";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l1graphs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    let text = String::from_utf8(out.stdout.clone()).expect("utf8 stdout");
    serde_json::from_str(text.trim()).expect("stdout is one JSON document")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/../../schemas/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let doc: serde_json::Value = serde_json::from_str(&text).expect("schema parses");
    jsonschema::validator_for(&doc).expect("schema compiles")
}

fn assert_valid(schema_name: &str, value: &serde_json::Value) {
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?} in {value}");
}

#[test]
fn check_matches_schema_and_exit_codes() {
    let out = run(&["check", "--g6", K23]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_valid("condition_report", &v);
    assert_eq!(v["ok"], true);
    assert_eq!(v["family_k"]["p"], 2);
}

#[test]
fn gen_emits_fig1_graph6() {
    let out = run(&["gen", "nonpancyclic-a", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    let g = l1graphs::graph6::parse_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g, l1graphs::generators::nonpancyclic_a(2).unwrap());
}

#[test]
fn hamilton_reports_exception_family_with_exit_zero() {
    let out = run(&["hamilton", "--g6", K23]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_valid("extension_result", &v);
    assert_eq!(v["outcome"], "exception_family");
}

#[test]
fn extension_outputs_match_schema() {
    for args in [
        vec!["extend-cycle", "--g6", K4, "--seq", "0,1,2"],
        vec!["extend-path", "--g6", "D]o", "--seq", "2,0,3,1"],
        vec!["hamilton", "--g6", K4],
        vec!["spanning-path", "--g6", K23, "--x", "0", "--y", "2"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_valid("extension_result", &stdout_json(&out));
    }
}

#[test]
fn spectrum_paths_classify_and_cycle_set_match_schemas() {
    let out = run(&["spectrum", "--g6", C5]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_valid("spectrum_report", &v);
    assert_eq!(v["lengths"], serde_json::json!([5]));

    let out = run(&["paths", "--g6", K23, "--x", "0", "--y", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid("path_counts", &stdout_json(&out));

    let out = run(&["classify-bipartite", "--g6", K23]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_valid("bipartite_class", &v);
    assert_eq!(v["tag"], "minus_vertex");

    let out = run(&["cycle-through-set", "--g6", K4, "--set", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid("cycle_through_set", &stdout_json(&out));
}

#[test]
fn argument_and_parse_errors_exit_two() {
    let out = run(&["check", "--g6", "???"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_valid("error", &v);
    assert_eq!(v["error"]["kind"], "parse");

    let out = run(&["extend-cycle", "--g6", C5, "--seq", "0,1,2"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_valid("error", &v);
    assert_eq!(v["error"]["kind"], "precondition");
}

#[test]
fn resource_cap_errors_exit_three() {
    // A 20-vertex cycle exceeds the lowered oracle cap.
    let big = l1graphs::graph6::encode_graph6(&l1graphs::Graph::cycle(20)).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_l1graphs"))
        .args(["spectrum", "--g6", &big])
        .env("L1GRAPHS_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_valid("error", &v);
    assert_eq!(v["error"]["kind"], "resource");
}

#[test]
fn usage_errors_exit_64() {
    let out = run(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(64), "missing input source is a usage error");
}

#[test]
fn batch_mode_emits_one_json_line_per_graph() {
    let dir = std::env::temp_dir().join("l1graphs-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("batch.g6");
    std::fs::write(&file, format!("{K4}\n{C5}\n{K23}\n")).unwrap();
    let out = run(&["check", "--in", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let oks: Vec<bool> = lines
        .iter()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["ok"] == true)
        .collect();
    assert_eq!(oks, vec![true, false, true]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["gen", "random", "--n", "9", "--seed", "42"],
        vec!["check", "--g6", K23],
        vec!["hamilton", "--g6", K4],
        vec!["spectrum", "--g6", C5],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn gen_dot_output_contains_all_edges() {
    let out = run(&["gen", "knn", "--n", "2", "--variant", "full", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph {"));
    assert_eq!(text.matches(" -- ").count(), 4);
}

#[test]
fn verify_corpus_small_run_is_clean() {
    let out = run(&[
        "verify-corpus",
        "--random-count",
        "5",
        "--max-n",
        "8",
        "--cycle-limit",
        "80",
        "--path-limit",
        "60",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_valid("verify_corpus", &v);
    assert_eq!(v["ok"], true);
}
