//! End-to-end tests against the built binary: exit codes, JSON shape,
//! certificate and quotient files, seed handling.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn konvex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_konvex"))
        .args(args)
        .env_remove("KONVEX_SEED")
        .output()
        .expect("binary runs")
}

fn konvex_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_konvex"))
        .args(args)
        .env_remove("KONVEX_SEED")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, contents).expect("tmp file writes");
    path
}

const KLEIN: &str = r#"{"elements": ["e", "a", "b", "c"],
  "table": [["e","a","b","c"],["a","e","c","b"],["b","c","e","a"],["c","b","a","e"]]}"#;

const NON_ASSOCIATIVE: &str = r#"{"elements": ["0", "1", "2"],
  "table": [["0","1","2"],["1","2","2"],["2","2","1"]]}"#;

#[test]
fn validate_accepts_a_commutative_table() {
    let path = write_tmp("klein.json", KLEIN);
    let out = konvex(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["order"], 4);
    assert_eq!(v["outcome"]["elements"][1], "a");
}

#[test]
fn validate_rejects_a_non_associative_table() {
    let path = write_tmp("nonassoc.json", NON_ASSOCIATIVE);
    let out = konvex(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&out), 2);
    let v = stdout_json(&out);
    let msg = v["outcome"]["error"].as_str().unwrap();
    assert!(msg.contains("not associative"), "{msg}");
}

#[test]
fn validate_rejects_a_missing_file() {
    let out = konvex(&["validate", "/definitely/not/here.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn op_power_expands_an_interval() {
    let out = konvex(&["op", "power", "--carrier", "int-additive", "-n", "3", "0,1", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["result"], serde_json::json!(["0", "1", "2", "3"]));
    assert_eq!(v["outcome"]["saturated"], false);
}

#[test]
fn op_scale_reads_a_cayley_file_carrier() {
    let path = write_tmp("klein_op.json", KLEIN);
    let carrier = format!("@{}", path.display());
    let out = konvex(&["op", "scale", "--carrier", &carrier, "-n", "2", "a,b", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["result"], serde_json::json!(["e"]));
}

#[test]
fn op_scale_without_a_multiplier_is_a_usage_error() {
    let out = konvex(&["op", "scale", "--carrier", "cyclic(4)", "0,1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn op_sumset_takes_two_sets_and_no_multiplier() {
    let out = konvex(&["op", "sumset", "--carrier", "cyclic(5)", "0,1", "2", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["result"], serde_json::json!(["2", "3"]));

    let bad = konvex(&["op", "sumset", "--carrier", "cyclic(5)", "-n", "2", "0,1", "2"]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn op_rejects_an_unknown_label() {
    let out = konvex(&["op", "scale", "--carrier", "cyclic(4)", "-n", "2", "0,9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_reports_a_witness_with_exit_zero() {
    let out = konvex(&["check", "convex", "--carrier", "int-additive", "0,2", "--n", "2", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["verdict"], "fails");
    assert_eq!(v["outcome"]["witness"], "1");
}

#[test]
fn check_all_n_needs_a_finite_carrier() {
    let out = konvex(&["check", "convex", "--carrier", "int-additive", "0,1", "--all-n"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_all_n_finds_the_failing_multiplier() {
    let out = konvex(&["check", "konvex", "--carrier", "cyclic(12)", "0,3,6,9", "--all-n", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["verdict"], "fails");
    assert_eq!(v["outcome"]["witness_n"], 2);
    assert_eq!(v["outcome"]["witness"], "3");
}

#[test]
fn check_sweep_is_labelled_as_evidence() {
    let out = konvex(&["check", "convex", "--carrier", "int-additive", "0,1", "--n-max", "12", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["verdict"], "holds for n <= 12");
    let props = v["properties"].as_array().unwrap();
    assert!(props.iter().any(|p| p.as_str().unwrap().contains("evidence")));
}

#[test]
fn check_requires_exactly_one_range() {
    let none = konvex(&["check", "convex", "--carrier", "cyclic(4)", "0"]);
    assert_eq!(exit_code(&none), 2);
    let two = konvex(&["check", "convex", "--carrier", "cyclic(4)", "0", "--n", "2", "--all-n"]);
    assert_eq!(exit_code(&two), 2);
}

#[test]
fn hull_agrees_across_both_routes() {
    let out = konvex(&["hull", "--carrier", "cyclic(4)", "0", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["hull"], serde_json::json!(["0", "1", "2", "3"]));
    assert_eq!(v["outcome"]["methods_agree"], true);
}

#[test]
fn hull_respects_a_generated_multiplier_set() {
    let out = konvex(&["hull", "--carrier", "cyclic(4)", "1", "--multipliers", "3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["hull"], serde_json::json!(["1"]));
}

#[test]
fn hull_needs_a_finite_carrier() {
    let out = konvex(&["hull", "--carrier", "int-additive", "0,1"]);
    assert_eq!(exit_code(&out), 2);
    let generated = konvex(&["hull", "--carrier", "int-additive", "0,1", "--multipliers", "2"]);
    assert_eq!(exit_code(&generated), 2);
}

#[test]
fn separate_writes_a_verified_certificate() {
    let path = tmp("certificate.json");
    let out = konvex(&[
        "separate", "--carrier", "capped-add(3)", "0", "3",
        "--out", path.to_str().unwrap(), "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["violations"], serde_json::json!([]));

    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert["A"], serde_json::json!(["0"]));
    assert_eq!(cert["B"], serde_json::json!(["1", "2", "3"]));
    assert_eq!(cert["convex"]["A"], true);
    assert_eq!(cert["convex"]["B"], true);
    assert!(cert["evidence"]["tail"].is_u64() && cert["evidence"]["cycle"].is_u64());
    for entry in cert["insertion_log"].as_array().unwrap() {
        assert!(entry["side"] == "A" || entry["side"] == "B");
        assert!(entry["element"].is_string());
    }
}

#[test]
fn separate_keeps_konvex_sides_on_a_konvex_carrier() {
    let out = konvex(&["separate", "--carrier", "chain-min(4)", "1", "3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    let cert = &v["outcome"]["certificate"];
    assert_eq!(cert["konvex"]["S"], true);
    assert_eq!(cert["konvex"]["A"], true);
    assert_eq!(cert["konvex"]["B"], true);
}

#[test]
fn separate_rejects_colliding_inputs() {
    let out = konvex(&["separate", "--carrier", "cyclic(5)", "1", "2", "--json"]);
    assert_eq!(exit_code(&out), 2);
    let v = stdout_json(&out);
    let msg = v["outcome"]["error"].as_str().unwrap();
    assert!(msg.contains("[5]A meets [5]B"), "{msg}");
}

#[test]
fn quotient_exports_classes_and_table() {
    let path = tmp("quotient.json");
    let out = konvex(&[
        "quotient", "--carrier", "cyclic(6)", "--multipliers", "ALL",
        "--out", path.to_str().unwrap(), "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["cancellation_violations"], 0);

    let q: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let classes = q["classes"].as_array().unwrap();
    let sizes: usize = classes.iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(sizes, 6);
    let elements = q["quotient"]["elements"].as_array().unwrap();
    assert_eq!(q["quotient"]["table"].as_array().unwrap().len(), elements.len());
}

#[test]
fn quotient_respects_generated_multipliers() {
    let out = konvex(&["quotient", "--carrier", "cyclic(6)", "--multipliers", "5", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    // 5 is invertible mod 6, so division by 5 separates every element.
    assert_eq!(v["outcome"]["quotient_order"], 6);
}

#[test]
fn verify_passes_and_fault_injection_fails() {
    let ok = konvex(&["verify", "--order-cap", "4", "--seed", "11"]);
    assert_eq!(exit_code(&ok), 0);
    let faulty = konvex(&["verify", "--order-cap", "4", "--seed", "11", "--inject-fault", "--json"]);
    assert_eq!(exit_code(&faulty), 3);
    let v = stdout_json(&faulty);
    assert_eq!(v["outcome"]["failed"], 1);
    let checks = v["outcome"]["checks"].as_array().unwrap();
    let broken = checks.iter().find(|c| c["pass"] == false).unwrap();
    assert_eq!(broken["name"], "proper inclusions");
    assert!(broken["detail"].as_str().unwrap().contains("fault injected"));
}

#[test]
fn verify_reads_the_seed_from_the_environment() {
    let a = konvex_env(&["verify", "--order-cap", "3", "--json"], "KONVEX_SEED", "42");
    let b = konvex_env(&["verify", "--order-cap", "3", "--json"], "KONVEX_SEED", "42");
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "same seed must reproduce bytes");
    assert_eq!(stdout_json(&a)["inputs"]["seed"], 42);

    let flag = konvex_env(
        &["verify", "--order-cap", "3", "--seed", "42", "--json"],
        "KONVEX_SEED",
        "977",
    );
    assert_eq!(flag.stdout, a.stdout, "the flag outranks the environment");

    let bad = konvex_env(&["verify", "--order-cap", "3"], "KONVEX_SEED", "pi");
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn json_and_text_reports_carry_the_same_content() {
    let text = konvex(&["hull", "--carrier", "cyclic(4)", "0"]);
    let json = konvex(&["hull", "--carrier", "cyclic(4)", "0", "--json"]);
    assert_eq!(exit_code(&text), 0);
    let v = stdout_json(&json);
    let rendered = String::from_utf8(text.stdout).unwrap();
    for key in ["command", "inputs", "outcome", "properties", "exit_code"] {
        assert!(rendered.contains(key), "text report lacks {key}");
    }
    for label in v["outcome"]["hull"].as_array().unwrap() {
        assert!(rendered.contains(label.as_str().unwrap()));
    }
    assert_eq!(v["exit_code"], 0);
}

#[test]
fn parse_errors_use_the_usage_exit_code() {
    let out = konvex(&["op", "frobnicate", "--carrier", "cyclic(4)", "0"]);
    assert_eq!(exit_code(&out), 2);
    let none = konvex(&[]);
    assert_eq!(exit_code(&none), 2);
}
