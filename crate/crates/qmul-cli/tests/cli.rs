use std::process::{Command, Output};

fn qmul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmul"))
        .args(args)
        .env_remove("QMUL_DENSE_LIMIT")
        .output()
        .expect("binary runs")
}

fn qmul_with_limit(limit: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmul"))
        .args(args)
        .env("QMUL_DENSE_LIMIT", limit)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn multiply_prints_the_product_sentence() {
    let out = qmul(&["multiply", "--n", "3", "--x", "7", "--y", "5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "7 \u{00d7} 5 = 35 (p=1.000000)\n");
}

#[test]
fn multiply_json_reports_the_resolved_mode() {
    let out = qmul(&[
        "multiply", "--n", "3", "--x", "6", "--y", "7", "--mode", "hybrid", "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["product"], 42);
    assert_eq!(doc["mode"], "hybrid");
    assert_eq!(doc["qubits"], 22);
    assert!(doc["probability"].as_f64().unwrap() > 1.0 - 1e-9);

    // Auto resolves to dense while the circuit fits the budget.
    let auto = qmul(&["multiply", "--n", "2", "--x", "3", "--y", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&auto)).unwrap();
    assert_eq!(doc["mode"], "dense");
    assert_eq!(doc["product"], 9);
}

#[test]
fn out_of_range_operand_is_a_usage_error() {
    let out = qmul(&["multiply", "--n", "3", "--x", "9", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3 bits"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = qmul(&["multiply", "--n", "3", "--x", "1", "--y", "1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dense_past_the_limit_is_a_capacity_error() {
    let out = qmul(&["multiply", "--n", "4", "--x", "3", "--y", "5", "--mode", "dense"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("37 qubits"));
}

#[test]
fn env_limit_shrinks_the_dense_budget() {
    let forced = qmul_with_limit(
        "10",
        &["multiply", "--n", "2", "--x", "3", "--y", "3", "--mode", "dense"],
    );
    assert_eq!(forced.status.code(), Some(3));

    // Auto mode falls back to hybrid under the same budget.
    let auto = qmul_with_limit("10", &["multiply", "--n", "2", "--x", "3", "--y", "3", "--json"]);
    assert!(auto.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&auto)).unwrap();
    assert_eq!(doc["mode"], "hybrid");
    assert_eq!(doc["product"], 9);

    let bad = qmul_with_limit("many", &["multiply", "--n", "2", "--x", "1", "--y", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("QMUL_DENSE_LIMIT"));
}

#[test]
fn add_sums_values_exactly() {
    let out = qmul(&["add", "--bits", "3", "--values", "5,6,7"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "5 + 6 + 7 = 18 (p=1.000000)\n");
}

#[test]
fn add_with_no_carries_wraps() {
    let out = qmul(&["add", "--bits", "2", "--values", "3,3", "--t", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3 + 3 = 2 (p=1.000000)\n");
}

#[test]
fn add_rejects_oversized_values() {
    let out = qmul(&["add", "--bits", "2", "--values", "4,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exhaustive_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qmul(&[
        "verify",
        "--n",
        "2",
        "--exhaustive",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("all match"));
    assert!(stdout(&out).contains("transform pairs saved vs sequential baseline: 1"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["n"], 2);
    assert_eq!(report["cases_run"], 16);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert_eq!(report["metrics_proposed"]["qft_blocks"], 1);
    assert_eq!(report["metrics_baseline"]["qft_blocks"], 2);
}

#[test]
fn verify_samples_are_seeded() {
    let out = qmul(&["verify", "--n", "8", "--samples", "25", "--seed", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("verified 25 products at n=8 (hybrid)"));
}

#[test]
fn metrics_compares_the_four_designs() {
    let out = qmul(&["metrics", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("22 qubits"));
    assert!(text.contains("proposed, swap-free"));
    assert!(text.contains("baseline, with swaps"));
    // Proposed keeps one transform pair; baseline runs n of them.
    let proposed_line = text
        .lines()
        .find(|l| l.starts_with("proposed, swap-free"))
        .unwrap();
    assert!(proposed_line.trim_end().ends_with("1     1"));
}

#[test]
fn emit_qasm_to_stdout_and_json_to_file() {
    let out = qmul(&["emit", "--n", "1", "--format", "qasm"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("OPENQASM 3.0;"));
    assert!(text.contains("qubit[4] q;"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circuit.json");
    let out = qmul(&[
        "emit",
        "--n",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["qubits"], 11);
    assert!(!doc["gates"].as_array().unwrap().is_empty());

    let swapped = qmul(&["emit", "--n", "2", "--format", "qasm", "--swaps"]);
    assert!(stdout(&swapped).contains("swap q["));
}
