use std::process::{Command, Output};

use serde_json::Value;

fn mlde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlde"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (String, Value) {
    let out = mlde(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let value = serde_json::from_str(&text).expect("valid json");
    (text, value)
}

fn assert_round_trips(text: &str, value: &Value) {
    let mut again = serde_json::to_string_pretty(value).unwrap();
    again.push('\n');
    assert_eq!(again, text);
}

#[test]
fn character_yang_lee() {
    let out = mlde(&["character", "--a", "11/60", "--terms", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("coefficients: 1,0,1,1,1,1,2,2,3\n"));

    let (text, v) = json(&[
        "character",
        "--a",
        "11/60",
        "--terms",
        "9",
        "--format",
        "json",
    ]);
    assert_round_trips(&text, &v);
    assert_eq!(v["series"]["exponent"], "11/60");
    let coeffs: Vec<&str> = v["series"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "0", "1", "1", "1", "1", "2", "2", "3"]);
}

#[test]
fn negative_rationals_parse() {
    let out = mlde(&[
        "character",
        "--a",
        "-1/24",
        "--terms",
        "6",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "power,coefficient");
    assert_eq!(lines[1], "-1/24,1");
    assert_eq!(lines[2], "23/24,3");
}

#[test]
fn forms_and_mlde() {
    let (text, v) = json(&["forms", "eta", "--terms", "6", "--format", "json"]);
    assert_round_trips(&text, &v);
    assert_eq!(v["weight"], "1/2");
    assert_eq!(v["series"]["exponent"], "1/24");

    let (_, v) = json(&["mlde", "--k1", "1/48", "--terms", "6", "--format", "json"]);
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 2);
    assert_eq!(sols[0]["root"], "-1/12");
    assert_eq!(sols[1]["root"], "1/4");
    assert!(sols.iter().all(|s| s["residual_zero"] == true));
}

#[test]
fn tables_two_lists_nine_pairs() {
    let (text, v) = json(&["tables", "--which", "2", "--format", "json"]);
    assert_round_trips(&text, &v);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert!(v["errata"].as_array().unwrap().is_empty());

    let md = stdout(&mlde(&["tables", "--which", "2"]));
    assert_eq!(
        md.lines()
            .filter(|l| l.starts_with("| ") && l.contains("7/6"))
            .count(),
        9
    );
}

#[test]
fn table_four_flags_errata() {
    let (_, v) = json(&[
        "tables", "--which", "4", "--terms", "16", "--format", "json",
    ]);
    let errata = v["errata"].as_array().unwrap();
    assert!(errata
        .iter()
        .any(|e| e["printed"] == "264664" && e["computed"] == "264644"));
    assert!(errata
        .iter()
        .any(|e| e["printed"] == "-6/5" && e["computed"] == "5/6"));
}

#[test]
fn classify_report() {
    let (text, v) = json(&["classify", "--format", "json"]);
    assert_round_trips(&text, &v);
    let summary = &v["verdict_summary"];
    let bucket = |k: &str| summary["buckets"][k].as_array().map_or(0, Vec::len);
    assert_eq!(bucket("Identified"), 8);
    assert_eq!(bucket("ResidualSMatrix"), 3);
    assert_eq!(summary["late_eliminations"], 3);
    assert_eq!(summary["survivors"], 14);
    let total: usize = summary["buckets"]
        .as_object()
        .unwrap()
        .values()
        .map(|b| b.as_array().unwrap().len())
        .sum();
    assert_eq!(total, v["candidates"].as_array().unwrap().len());
    assert_eq!(summary["two_simple_modules"].as_array().unwrap().len(), 5);
    assert_eq!(v["oracles_pass"], true);
    assert!(!v["errata"].as_array().unwrap().is_empty());
}

#[test]
fn classify_csv_has_one_row_per_candidate() {
    let out = mlde(&["classify", "--terms", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 45);
    assert!(text
        .lines()
        .any(|l| l.starts_with("225,133,7,-7/24,11/24,") && l.contains("Identified")));
}

#[test]
fn smatrix_reports() {
    let (text, v) = json(&["smatrix", "--c", "-10", "--format", "json"]);
    assert_round_trips(&text, &v);
    assert_eq!(v["symmetrizable"], false);
    assert_eq!(v["margin_holds"], true);
    assert!(v["fit_residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(v["closed_forms"]["f1"], "I3 Delta3^2/eta^6");
    assert_eq!(v["closed_forms"]["errata"][0]["component"], 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("yl.json");
    let out = mlde(&[
        "character",
        "--a",
        "-1/60",
        "--terms",
        "5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["a"], "-1/60");
}

#[test]
fn usage_errors() {
    for args in [
        &["character", "--a", "1/x"][..],
        &["smatrix", "--c", "4"],
        &["classify", "--terms", "3"],
        &["tables", "--which", "6"],
        &["forms", "nope"],
        &["mlde", "--k1", "1/7"],
    ] {
        let out = mlde(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}
