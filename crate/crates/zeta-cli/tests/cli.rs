//! End-to-end CLI contract: flags, formats, exit codes, and record shapes.

use std::process::{Command, Output};

fn zeta_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta"))
        .args(args)
        .env_remove("ZETA_DEFAULT_TOL")
        .env_remove("ZETA_CHECK_FAULT_INJECT")
        .output()
        .expect("spawn zeta")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

/// Pulls the value out of `zeta(...) = VALUE  (method: ...)` text output.
fn parse_text_value(line: &str) -> f64 {
    let rhs = line.split('=').nth(1).expect("= in output");
    let token = rhs.split_whitespace().next().expect("value token");
    assert!(!token.contains('i'), "expected a real value, got {token}");
    token.parse().expect("parse value")
}

#[test]
fn eval_minus_one_text() {
    let out = zeta_bin(&["eval", "--s", "-1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!((parse_text_value(&text) + 1.0 / 12.0).abs() <= 5e-11, "{text}");
    assert!(text.contains("method: ladder"), "{text}");
}

#[test]
fn eval_pole_is_exit_one_with_record() {
    let out = zeta_bin(&["eval", "--s", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).starts_with("error: pole"));

    let out = zeta_bin(&["eval", "--s", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["error"], "pole");
    assert_eq!(record["s"]["re"], 1.0);
}

#[test]
fn eval_two_with_loose_tol() {
    let out = zeta_bin(&["eval", "--s", "2", "--tol", "1e-8"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!((parse_text_value(&text) - 1.64493407).abs() <= 5e-9, "{text}");
    assert!(text.contains("method: direct"), "{text}");
}

#[test]
fn eval_complex_argument_syntax() {
    let out = zeta_bin(&["eval", "--s", "0.5,14.134725", "--format", "json"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let re = record["value"]["re"].as_f64().unwrap();
    let im = record["value"]["im"].as_f64().unwrap();
    assert!((re * re + im * im).sqrt() <= 1e-5, "first zero missed");
    assert_eq!(record["method"], "ladder");
}

#[test]
fn eval_usage_errors() {
    assert_eq!(zeta_bin(&["eval", "--s", "abc"]).status.code(), Some(2));
    assert_eq!(zeta_bin(&["eval", "--s", "1,2,3"]).status.code(), Some(2));
    assert_eq!(zeta_bin(&["eval"]).status.code(), Some(2));
    assert_eq!(zeta_bin(&["eval", "--s", "2", "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn eval_env_var_default_tol() {
    let out = Command::new(env!("CARGO_BIN_EXE_zeta"))
        .args(["eval", "--s", "3"])
        .env("ZETA_DEFAULT_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(out.status.success());
    // the committed estimate must follow the env-provided tolerance: far
    // looser than the 1e-10 default would produce
    let text = stdout_of(&out);
    let err: f64 = text
        .split("err <= ")
        .nth(1)
        .and_then(|t| t.trim_end_matches(")\n").parse().ok())
        .expect("err field");
    assert!(err <= 1e-6 && err > 1e-8, "{text}");
}

#[test]
fn special_known_values() {
    for (k, want) in [("1", "-1/12"), ("0", "-1/2"), ("11", "691/32760"), ("2", "0")] {
        let out = zeta_bin(&["special", "--k", k]);
        assert!(out.status.success());
        assert_eq!(stdout_of(&out).trim(), want);
    }
    assert_eq!(zeta_bin(&["special", "--k", "-1"]).status.code(), Some(2));
    assert_eq!(zeta_bin(&["special", "--k", "1.5"]).status.code(), Some(2));
}

#[test]
fn special_json_record() {
    let out = zeta_bin(&["special", "--k", "11", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["value"], "691/32760");
    assert_eq!(record["k"], 11);
    assert_eq!(record["method"], "exact");
    assert!(record.get("s").is_none());
}

#[test]
fn bernoulli_table_text() {
    let out = zeta_bin(&["bernoulli", "--upto", "2"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["0\t1", "1\t-1/2", "2\t1/6"]);

    let out = zeta_bin(&["bernoulli", "--upto", "0"]);
    assert_eq!(stdout_of(&out).trim(), "0\t1");

    let out = zeta_bin(&["bernoulli", "--upto", "12"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().last().unwrap(), "12\t-691/2730");

    assert_eq!(zeta_bin(&["bernoulli", "--upto", "-3"]).status.code(), Some(2));
}

#[test]
fn bernoulli_csv_is_machine_form() {
    let out = zeta_bin(&["bernoulli", "--upto", "3", "--format", "csv"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["n,value", "0,1/1", "1,-1/2", "2,1/6", "3,0/1"]);
}

#[test]
fn table_real_axis_values() {
    let out = zeta_bin(&["table", "--re-from", "-2", "--re-to", "0", "--step", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "re,im,value_re,value_im,method,depth_k,err_estimate"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    let expected = [0.0, -1.0 / 12.0, -0.5];
    for (row, want) in rows.iter().zip(expected) {
        let re: f64 = row[0].parse().unwrap();
        let v: f64 = row[2].parse().unwrap();
        assert!((v - want).abs() <= 1e-9, "zeta({re}) = {v}, want {want}");
    }
    // deterministic ascending order
    assert_eq!(rows[0][0], "-2");
    assert_eq!(rows[2][0], "0");
}

#[test]
fn table_pole_row_is_flagged_not_fatal() {
    let out = zeta_bin(&["table", "--re-from", "1", "--re-to", "1", "--step", "1"]);
    assert!(out.status.success(), "pole row must not fail the command");
    let text = stdout_of(&out);
    let data: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(data.len(), 1);
    assert!(data[0].contains("pole"), "{text}");
}

#[test]
fn table_near_first_nontrivial_zero() {
    let out = zeta_bin(&[
        "table", "--re-from", "0.5", "--re-to", "0.5", "--step", "1", "--im", "14.134725",
    ]);
    let text = stdout_of(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let vre: f64 = row[2].parse().unwrap();
    let vim: f64 = row[3].parse().unwrap();
    assert!((vre * vre + vim * vim).sqrt() <= 1e-5);
}

#[test]
fn table_usage_errors() {
    assert_eq!(
        zeta_bin(&["table", "--re-from", "2", "--re-to", "1", "--step", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        zeta_bin(&["table", "--re-from", "0", "--re-to", "1", "--step", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_json_rows_parse() {
    let out = zeta_bin(&[
        "table", "--re-from", "-1", "--re-to", "1", "--step", "1", "--format", "json",
    ]);
    let text = stdout_of(&out);
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    assert!((rows[0]["value"]["re"].as_f64().unwrap() + 1.0 / 12.0).abs() <= 1e-9);
    assert!((rows[1]["value"]["re"].as_f64().unwrap() + 0.5).abs() <= 1e-9);
    assert_eq!(rows[2]["error"], "pole"); // s = 1 row
}

#[test]
fn json_output_round_trips_via_stdout() {
    let out = zeta_bin(&["eval", "--s", "-2.5,0.5", "--format", "json"]);
    let line = stdout_of(&out);
    let v1: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let reprinted = serde_json::to_string(&v1).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(v1, v2);
    for field in ["s", "value", "method", "depth_k", "err_estimate"] {
        assert!(v1.get(field).is_some(), "missing field {field}");
    }
}

#[test]
fn eval_csv_shape() {
    let out = zeta_bin(&["eval", "--s", "2.5", "--format", "csv"]);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "re,im,value_re,value_im,method,depth_k,err_estimate"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 7);
    assert_eq!(row[4], "direct");
}

#[test]
fn check_below_rounding_floor_fails() {
    let out = zeta_bin(&["check", "--tol", "1e-16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn check_detects_injected_fault() {
    let out = Command::new(env!("CARGO_BIN_EXE_zeta"))
        .args(["check"])
        .env("ZETA_CHECK_FAULT_INJECT", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("suite=ladder_vs_exact") && text.contains("FAIL"), "{text}");
}

#[test]
fn check_rejects_unknown_grid() {
    assert_eq!(zeta_bin(&["check", "--grid", "dense"]).status.code(), Some(2));
}
