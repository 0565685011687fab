//! Golden tests for the binary: exact outputs on the worked problem files,
//! exit-code contract, and output stability.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcpolar"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn problem(name: &str) -> String {
    let path = Path::new("examples/problems").join(name);
    assert!(
        Path::new(env!("CARGO_MANIFEST_DIR")).join(&path).exists(),
        "missing problem file {name}"
    );
    path.to_string_lossy().into_owned()
}

#[test]
fn invert_worked_triple_matches_golden_values() {
    let out = run(&["invert", &problem("bc_inverse_worked.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "ok");
    assert_eq!(v["y"]["entries"], serde_json::json!([["0", "1"], ["0", "0"]]));
    assert_eq!(v["p"]["entries"], serde_json::json!([["1", "0"], ["0", "0"]]));
    assert_eq!(v["q"]["entries"], serde_json::json!([["0", "0"], ["0", "1"]]));
    let checks = v["verification"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    assert!(checks.iter().all(|c| c["holds"] == serde_json::json!(true)));
    assert!(checks
        .iter()
        .any(|c| c["label"].as_str().unwrap().starts_with("Def2.1-(3)")));
}

#[test]
fn invert_output_is_byte_stable() {
    let first = run(&["invert", &problem("bc_inverse_worked.json")]);
    let second = run(&["invert", &problem("bc_inverse_worked.json")]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn annihilating_triple_is_not_invertible_but_swapped_is() {
    let out = run(&["invert", &problem("bc_not_invertible.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "not (b,c)-invertible");

    let out = run(&["invert", &problem("bc_inverse_swapped.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    // the dual idempotents both equal a here
    let a_entries = serde_json::json!([["1", "0"], ["0", "0"]]);
    assert_eq!(v["y"]["entries"], a_entries);
    assert_eq!(v["p"]["entries"], a_entries);
    assert_eq!(v["q"]["entries"], a_entries);
}

#[test]
fn drazin_of_identity_and_jordan_block() {
    let out = run(&["invert", &problem("drazin_identity.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["index"], 0);
    assert_eq!(
        v["d_inverse"]["entries"],
        serde_json::json!([["1", "0"], ["0", "1"]])
    );

    let out = run(&["invert", &problem("drazin_jordan.json")]);
    let v = stdout_json(&out);
    assert_eq!(v["index"], 2);
    assert_eq!(
        v["d_inverse"]["entries"],
        serde_json::json!([["0", "0", "0"], ["0", "0", "0"], ["0", "0", "1/3"]])
    );
}

#[test]
fn moore_penrose_and_inverse_along_files() {
    let out = run(&["invert", &problem("moore_penrose.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(
        v["inverse"]["entries"],
        serde_json::json!([["1/4", "1/4"], ["1/4", "1/4"]])
    );

    let out = run(&["invert", &problem("inverse_along_group.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(
        v["y"]["entries"],
        serde_json::json!([["1/2", "0"], ["0", "0"]])
    );
}

#[test]
fn verify_accepts_published_idempotents_and_rejects_swapped() {
    let out = run(&["verify", &problem("verify_bc_polar.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["outcome"], "verified");

    let out = run(&["verify", &problem("verify_bc_polar_swapped.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "not verified");
    // the specific broken identity is visible in the report
    let failed: Vec<&str> = v["verification"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["holds"] == serde_json::json!(false))
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert!(failed.iter().any(|l| l.contains("pb = b")));
}

#[test]
fn verify_power_polar_file_and_missing_k() {
    let out = run(&["verify", &problem("verify_power_polar.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "verified");
    assert_eq!(v["k"], 3);
    assert_eq!(v["p"]["entries"], serde_json::json!([["1", "0"], ["0", "0"]]));

    // k is required for this operation
    let dir = std::env::temp_dir().join("bcpolar-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/problems/verify_power_polar.json"),
    )
    .unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v.as_object_mut().unwrap().remove("k");
    let no_k = dir.join("no_k.json");
    std::fs::write(&no_k, v.to_string()).unwrap();
    let out = run(&["verify", no_k.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_thm41_identity_triple() {
    let out = run(&["verify", &problem("verify_thm41_identity.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "verified");
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["value"], true);
    assert_eq!(v["P"]["entries"], serde_json::json!([["1", "0"], ["0", "1"]]));
}

#[test]
fn input_errors_exit_with_code_two() {
    // missing file
    let out = run(&["invert", "examples/problems/no_such_file.json"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed JSON from stdin-less invalid file path content
    let dir = std::env::temp_dir().join("bcpolar-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["invert", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // field mismatch between matrices
    let mismatched = dir.join("mismatch.json");
    std::fs::write(
        &mismatched,
        r#"{
            "operation": "bc-inverse",
            "a": {"field": "Q", "rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]},
            "b": {"field": {"Fp": 7}, "rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]},
            "c": {"field": "Q", "rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]}
        }"#,
    )
    .unwrap();
    let out = run(&["invert", mismatched.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // composite modulus
    let composite = dir.join("composite.json");
    std::fs::write(
        &composite,
        r#"{
            "operation": "drazin",
            "a": {"field": {"Fp": 6}, "rows": 1, "cols": 1, "entries": [["1"]]}
        }"#,
    )
    .unwrap();
    let out = run(&["invert", composite.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // moore-penrose over a prime field is rejected
    let fp_mp = dir.join("fp_mp.json");
    std::fs::write(
        &fp_mp,
        r#"{
            "operation": "moore-penrose",
            "a": {"field": {"Fp": 7}, "rows": 1, "cols": 1, "entries": [["1"]]}
        }"#,
    )
    .unwrap();
    let out = run(&["invert", fp_mp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flags
    let out = run(&["suite", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_small_run_exits_clean() {
    let out = run(&[
        "suite", "--seed", "5", "--field", "Fp:5", "--max-dim", "2", "--trials", "5",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["report"]["failures_total"], 0);
    assert_eq!(v["report"]["generator"], "SplitMix64");
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn suite_exhaustive_flag_runs_the_enumeration() {
    let out = run(&["suite", "--exhaustive-f2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["report"]["exhaustive_f2"], true);
    assert_eq!(v["report"]["field"], serde_json::json!({"Fp": 2}));
    let properties = v["report"]["properties"].as_array().unwrap();
    let thm25 = properties
        .iter()
        .find(|p| p["id"] == "THM25-EQUIV")
        .unwrap();
    assert_eq!(thm25["trials"], 4096);
    assert_eq!(thm25["failures"], 0);
}

#[test]
fn invert_reads_stdin_with_dash() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_bcpolar"))
        .args(["invert", "-"])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/problems/bc_inverse_worked.json"),
    )
    .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"], "ok");
}
