//! End-to-end checks of the binary: exit codes, report schema, unit
//! labeling, and the joules-only-with---temp contract.

use std::process::{Command, Output};

fn landauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_landauer")).args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = landauer(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bound_reports_both_bounds() {
    let doc = stdout_json(&["bound", "--problem", "sort", "--n", "8"]);
    assert_eq!(doc["command"], "bound");
    assert_eq!(doc["results"]["entropy_bound_bits"], 24.0);
    assert_eq!(doc["results"]["classical_bound_ops"], 16);
    assert_eq!(doc["results"]["time_steps_lower"], 24.0);
    assert_eq!(doc["units"]["entropy_bound_bits"], "bits");
    assert!(doc["results"].get("energy_joules").is_none());
}

#[test]
fn bound_with_m_adds_encoding_entropies() {
    let doc = stdout_json(&["bound", "--problem", "max", "--n", "8", "--m", "4"]);
    assert_eq!(doc["results"]["encoding_s1_bits"], 40.0);
    assert_eq!(doc["results"]["encoding_s2_bits"], 32.0);
    assert_eq!(doc["results"]["entropy_bound_bits"], 8.0);
}

#[test]
fn matmul_bound_follows_the_formula() {
    let doc = stdout_json(&["bound", "--problem", "matmul", "--n", "4", "--m", "8"]);
    assert_eq!(doc["results"]["entropy_bound_bits"], 288.0);
    assert!(doc["results"].get("classical_bound_ops").is_none());
}

#[test]
fn temp_gates_every_joule_field() {
    for args in [
        vec!["bound", "--problem", "sort", "--n", "64"],
        vec!["gate", "--standard", "toffoli"],
        vec!["profile", "--problem", "sort", "--algorithm", "merge", "--n", "16", "--trials", "3"],
        vec!["demon", "--particles", "4"],
    ] {
        let doc = stdout_json(&args);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(!text.contains("joule"), "{args:?} leaked joules: {text}");
        assert!(doc.get("temperature_kelvin").is_none());
    }

    let doc = stdout_json(&["bound", "--problem", "sort", "--n", "64", "--temp", "300"]);
    assert!(doc["results"]["energy_joules"].as_f64().unwrap() > 0.0);
    assert_eq!(doc["temperature_kelvin"], 300.0);
}

#[test]
fn gate_standard_reports_closed_form_beyond_the_cap() {
    let doc = stdout_json(&["gate", "--standard", "compare-gt", "--width", "3"]);
    assert_eq!(doc["results"]["reduction"], 1.0);
    assert_eq!(doc["results"]["analytic"], false);

    let doc = stdout_json(&["gate", "--standard", "compare-gt", "--width", "64"]);
    assert_eq!(doc["results"]["reduction"], 1.0);
    assert_eq!(doc["results"]["entropy_in"], 129.0);
    assert_eq!(doc["results"]["analytic"], true);
}

#[test]
fn gate_file_errors_name_the_path() {
    let out = landauer(&["gate", "--file", "/nonexistent/nowhere.tt"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("/nonexistent/nowhere.tt"), "stderr: {stderr}");
}

#[test]
fn gate_parse_errors_carry_line_numbers() {
    let dir = std::env::temp_dir().join("landauer-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.tt");
    std::fs::write(&path, "00 -> 00\n0x -> 01\n").unwrap();
    let out = landauer(&["gate", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(landauer(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(landauer(&["bound", "--problem", "sort"]).status.code(), Some(2)); // missing --n
    assert_eq!(landauer(&["bound", "--problem", "nonsense", "--n", "4"]).status.code(), Some(2));
    assert_eq!(landauer(&["gate"]).status.code(), Some(2)); // neither --file nor --standard
    assert_eq!(
        landauer(&["bound", "--problem", "matmul", "--n", "4"]).status.code(),
        Some(2),
        "matmul without --m"
    );
}

#[test]
fn computation_errors_exit_1() {
    assert_eq!(landauer(&["bound", "--problem", "sort", "--n", "0"]).status.code(), Some(1));
    assert_eq!(
        landauer(&[
            "profile",
            "--problem",
            "max",
            "--algorithm",
            "merge",
            "--n",
            "8",
            "--trials",
            "1"
        ])
        .status
        .code(),
        Some(1),
        "algorithm/problem mismatch"
    );
    assert_eq!(
        landauer(&["demon", "--particles", "30", "--samples", "10"]).status.code(),
        Some(1),
        "state space beyond the estimation cap"
    );
    assert_eq!(
        landauer(&["bound", "--problem", "sort", "--n", "4", "--temp=-10"]).status.code(),
        Some(1)
    );
}

#[test]
fn csv_format_matches_the_row_schema() {
    let out = landauer(&["bound", "--problem", "search", "--n", "8", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("key,value,units"));
    assert!(text.contains("entropy_bound_bits,3,bits"));

    let out = landauer(&["gate", "--standard", "erase", "--width", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reduction,4,bits"), "{text}");

    let out = landauer(&["demon", "--particles", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("entropy_before_bits,1,bits"), "{text}");
    assert!(text.contains("entropy_after_bits,0,bits"), "{text}");
}

#[test]
fn reports_round_trip_through_json() {
    for args in [
        vec!["bound", "--problem", "sort", "--n", "1024", "--temp", "300"],
        vec!["gate", "--standard", "toffoli"],
        vec![
            "profile",
            "--problem",
            "search",
            "--algorithm",
            "binary",
            "--n",
            "64",
            "--trials",
            "5",
            "--seed",
            "7",
        ],
        vec!["demon", "--particles", "6", "--samples", "1000", "--seed", "3"],
        vec!["grover", "--n", "100"],
    ] {
        let out = landauer(&args);
        assert!(out.status.success());
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let reserialized = serde_json::to_vec(&value).unwrap();
        let reparsed: serde_json::Value = serde_json::from_slice(&reserialized).unwrap();
        assert_eq!(value, reparsed, "{args:?}");
        for key in ["command", "parameters", "results", "units", "tool_version"] {
            assert!(value.get(key).is_some(), "{args:?} missing {key}");
        }
    }
}

#[test]
fn profile_radix_accounts_bucket_bits() {
    let doc = stdout_json(&[
        "profile",
        "--problem",
        "sort",
        "--algorithm",
        "radix",
        "--n",
        "1024",
        "--m",
        "10",
        "--trials",
        "2",
    ]);
    // defaults: buckets = n, passes = 1
    assert_eq!(doc["parameters"]["buckets"], 1024);
    assert_eq!(doc["results"]["measured_bits"]["min"], 10240.0);
    assert_eq!(doc["results"]["entropy_bound_bits"], 10240.0);
}

#[test]
fn demon_reports_estimates_when_sampling() {
    let doc = stdout_json(&[
        "demon",
        "--particles",
        "6",
        "--mode",
        "two-domain",
        "--samples",
        "20000",
        "--seed",
        "1",
    ]);
    assert_eq!(doc["results"]["entropy_before_bits"], 6.0);
    assert_eq!(doc["results"]["entropy_after_bits"], 0.0);
    let estimate = doc["results"]["entropy_estimate_bits"].as_f64().unwrap();
    assert!((estimate - 6.0).abs() < 0.1, "estimate {estimate}");
    assert_eq!(doc["seed"], 1);

    let doc = stdout_json(&["demon", "--particles", "4", "--mode", "n-cells"]);
    assert_eq!(doc["results"]["entropy_before_bits"], 8.0);
    assert!(doc["results"].get("entropy_estimate_bits").is_none());
}

#[test]
fn grover_ratio_is_sqrt_n() {
    let doc = stdout_json(&["grover", "--n", "100"]);
    assert_eq!(doc["results"]["energy_ratio"], 10.0);
    assert_eq!(doc["units"]["energy_ratio"], "ratio");
    let doc = stdout_json(&["grover", "--n", "1"]);
    assert_eq!(doc["results"]["energy_ratio"], 1.0);
}
