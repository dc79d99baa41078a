use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_firebreak"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(name: &str) -> Value {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas");
    let mut s: Value = serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();
    // Inline the one cross-file reference.
    if let Some(t) = s.pointer_mut("/properties/trace") {
        *t = schema("trace.schema.json");
    }
    s
}

fn assert_valid(schema_name: &str, v: &Value) {
    let validator = jsonschema::validator_for(&schema(schema_name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

#[test]
fn generate_formats() {
    let v = json(&run(&["generate", "--family", "petersen"]));
    assert_valid("graph.schema.json", &v);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
    let text = run(&["generate", "--family", "cycle", "--n", "4", "--text"]);
    assert_eq!(String::from_utf8_lossy(&text.stdout), "p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let dot = run(&["generate", "--family", "path", "--n", "3", "--dot"]);
    assert!(String::from_utf8_lossy(&dot.stdout).contains("graph"));
}

#[test]
fn orient_then_solve_through_a_pipe() {
    let o = run(&["orient", "--recipe", "subcubic", "--family", "petersen"]);
    let ov = json(&o);
    assert_valid("orientation.schema.json", &ov);
    assert_eq!(ov["recipe"], "subcubic");
    let solved = json(&run_with_stdin(&["solve", "--f", "1"], &o.stdout));
    assert_valid("solve-result.schema.json", &solved);
    assert_eq!(solved["beta"], 2);
    assert_eq!(solved["mode"], "fixed");
    assert_eq!(solved["exact"], true);
}

#[test]
fn solve_best_complete_five() {
    let v = json(&run(&["solve-best", "--family", "complete", "--n", "5", "--f", "1", "--threads", "2"]));
    assert_valid("solve-result.schema.json", &v);
    assert_eq!(v["beta"], 2);
    assert_eq!(v["mode"], "best");
    assert_eq!(v["seed"], 0);
    // The result file is itself a valid orientation input.
    let again = json(&run_with_stdin(&["solve", "--f", "1"], v.to_string().as_bytes()));
    assert_eq!(again["beta"], 2);
}

#[test]
fn threads_from_environment() {
    let out = bin()
        .args(["solve-best", "--family", "complete-bipartite", "--p", "2", "--q", "2"])
        .env("FIREBREAK_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(json(&out)["beta"], 1);
}

#[test]
fn simulate_scripted_defence() {
    let graph = "p 8 10\ne 0 1\ne 1 2\ne 2 4\ne 3 4\ne 2 3\ne 3 1\ne 0 5\ne 5 7\ne 5 6\ne 6 7\n";
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("eight.o");
    let orientation = graph.replace("p 8 10", "o 8 10").replace("e ", "a ");
    std::fs::write(&path, orientation).unwrap();
    let v = json(&run(&[
        "simulate",
        "--in",
        path.to_str().unwrap(),
        "--strategy",
        "scripted",
        "--script",
        "[[1],[6]]",
        "--start",
        "0",
    ]));
    assert_valid("trace.schema.json", &v);
    assert_eq!(v["burned"], 3);
}

#[test]
fn simulate_orients_graph_input_with_recipe() {
    let v = json(&run(&[
        "simulate", "--family", "complete", "--n", "7", "--recipe", "complete", "--strategy", "complete-cyclic", "--start", "3",
    ]));
    assert_valid("trace.schema.json", &v);
    assert!(v["burned"].as_u64().unwrap() <= 4);
}

#[test]
fn bounds_report() {
    let v = json(&run(&["bounds", "--family", "complete-bipartite", "--p", "4", "--q", "4", "--f", "1"]));
    assert_valid("bounds.schema.json", &v);
    let entry = v.as_array().unwrap().iter().find(|e| e["name"] == "biclique").unwrap();
    assert_eq!(entry["value"], "3");
    let k = json(&run(&["bounds", "--family", "random-ktree", "--n", "9", "--k", "2"]));
    let half = k.as_array().unwrap().iter().find(|e| e["name"] == "ktree-half").unwrap();
    assert_eq!((half["value"].as_str(), half["applicable"].as_bool()), (Some("2"), Some(true)));
}

#[test]
fn bounds_for_an_orientation_include_orientation_scope() {
    let o = run(&["orient", "--recipe", "complete", "--family", "complete", "--n", "5"]);
    let v = json(&run_with_stdin(&["bounds", "--f", "1"], &o.stdout));
    assert_valid("bounds.schema.json", &v);
    assert!(v.as_array().unwrap().iter().any(|e| e["scope"] == "orientation"));
}

#[test]
fn verify_suite_output_and_exit_codes() {
    let out = run(&["verify", "recurrence-closed-form"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid("suite-result.schema.json", &v);
    assert_eq!(v["passed"], true);

    // A zero budget cannot finish K4,4: the check is capped and the suite fails.
    let capped = run(&["verify", "bipartite-exact", "--budget-ms", "0"]);
    assert_eq!(capped.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert!(v["summary"]["capped"].as_u64().unwrap() >= 1);
    assert_eq!(v["passed"], false);

    let unknown = run(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn writes_to_out_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("grid.json");
    let out = run(&["orient", "--recipe", "grid-rect", "--w", "5", "--h", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid("orientation.schema.json", &v);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["solve-best", "--family", "complete"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--family", "cycle", "--n", "5"]).status.code(), Some(2));
    let bad = run_with_stdin(&["solve-best"], b"p 3 1\ne 0 7\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
    assert_eq!(run(&["solve-best", "--family", "complete", "--n", "9"]).status.code(), Some(2));
}
