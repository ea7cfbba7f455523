use std::process::{Command, Output};

use serde_json::Value;

fn charsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = charsum(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    charsum(args).status.code()
}

#[test]
fn field_info() {
    let v = json(&["field-info", "--m", "3"]);
    assert_eq!(v["m"], 3);
    assert_eq!(v["n"], 6);
    assert_eq!(v["irr_poly"], "0b");
    assert_eq!(v["nu"], "01");
    assert_eq!(v["theta_relation"], "t^2+t=nu");
    assert_eq!(json(&["field-info", "--m", "2"])["nu"], "02");
    assert_eq!(code(&["field-info", "--m", "0"]), Some(2));
    assert_eq!(code(&["field-info", "--m", "3", "--poly", "0f"]), Some(2));
}

#[test]
fn eval_examples() {
    let v = json(&["eval", "--sum", "p", "--m", "3", "--mu", "01", "--mode", "both"]);
    assert_eq!((v["brute"].as_i64(), v["closed"].as_i64()), (Some(14), Some(14)));
    assert_eq!(v["match"], true);

    assert_eq!(code(&["eval", "--sum", "q", "--m", "3", "--mu", "00", "--mode", "closed"]), Some(2));

    let v = json(&["eval", "--sum", "r", "--m", "2", "--L", "01*X^(2^1)", "--mode", "both"]);
    assert_eq!((v["brute"].as_i64(), v["closed"].as_i64()), (Some(16), Some(16)));
    assert_eq!(v["L"], "01*X^(2^1)");

    let v = json(&["eval", "--sum", "qs", "--m", "5", "--mu", "03", "--s", "2", "--mode", "reduced"]);
    assert!(v["reduced"].is_i64());
}

#[test]
fn eval_paper_literal_is_documented() {
    let v = json(&["eval", "--sum", "p", "--m", "2", "--mu", "01", "--paper-literal"]);
    assert_eq!((v["brute"].as_i64(), v["closed"].as_i64()), (Some(14), Some(-18)));
    assert_eq!(v["documented_discrepancy"], true);
}

#[test]
fn eval_fault_exits_one() {
    let args = ["eval", "--sum", "q", "--m", "3", "--mu", "01", "--inject-fault", "q"];
    assert_eq!(code(&args), Some(1));
}

#[test]
fn eval_usage_errors() {
    assert_eq!(code(&["eval", "--sum", "qs", "--m", "3", "--mu", "01"]), Some(2));
    assert_eq!(code(&["eval", "--sum", "r", "--m", "3", "--L", "01*X^(2^3)"]), Some(2));
    assert_eq!(code(&["eval", "--sum", "p", "--m", "3", "--mu", "zz"]), Some(2));
    assert_eq!(code(&["eval", "--sum", "q", "--m", "3", "--mu", "01", "--paper-literal"]), Some(2));
}

#[test]
fn verify_q_and_weil() {
    let v = json(&["verify", "--scope", "q", "--m-min", "2", "--m-max", "6"]);
    assert_eq!(v["summary"]["verified"], true);
    assert_eq!(v["summary"]["mismatched"], 0);
    let v = json(&["verify", "--scope", "weil", "--m-min", "3", "--m-max", "7"]);
    assert_eq!(v["summary"]["verified"], true);
}

#[test]
fn verify_paper_literal_reports_discrepancy() {
    let v = json(&["verify", "--scope", "p", "--m-min", "2", "--m-max", "2", "--paper-literal"]);
    let s = &v["summary"];
    assert_eq!(s["verified"], true);
    assert_eq!(s["documented_discrepancies"], 1);
    assert_eq!(s["paper_literal_discrepancies"], 1);
    let row = &v["rows"][0];
    assert_eq!((row["brute"].as_i64(), row["closed"].as_i64()), (Some(14), Some(-18)));
}

#[test]
fn verify_budget_and_csv() {
    let args = ["verify", "--scope", "kloosterman", "--m-min", "12", "--m-max", "12", "--budget", "10"];
    assert_eq!(code(&args), Some(2));
    let out = charsum(&["verify", "--scope", "r", "--m-min", "2", "--m-max", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("sum,m,s,param,brute,closed,match,documented_discrepancy\n"));
    assert!(text.lines().last().unwrap().contains("verified=true"));
}

#[test]
fn table_kloosterman() {
    let out = charsum(&["table", "--what", "kloosterman", "--m", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 8);
    let mut values: Vec<i64> = rows
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    values.sort();
    values.dedup();
    assert_eq!(values, [-5, -1, 3]);
    assert!(text.contains("lw_match=true"));
}

#[test]
fn table_weil_and_qs() {
    let v = json(&["table", "--what", "weil", "--m", "3", "--s", "1"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    for r in rows {
        assert_eq!(r["match"], true);
        assert!([0, -4, 4].contains(&r["c_direct"].as_i64().unwrap()));
    }
    let v = json(&["table", "--what", "qs", "--m", "3", "--s", "1"]);
    for r in v.as_array().unwrap().iter().skip(1) {
        assert_eq!(r["match"], true);
        assert_eq!(r["brute"], r["reduced"]);
    }
    assert_eq!(code(&["table", "--what", "weil", "--m", "4", "--s", "1"]), Some(2));
}

#[test]
fn bench_runs_and_rejects_zero_reps() {
    let v = json(&["bench", "--sum", "q", "--m", "3", "--reps", "1"]);
    assert_eq!(v["agree"], true);
    assert_eq!(code(&["bench", "--sum", "p", "--m", "3", "--reps", "0"]), Some(2));
}

#[test]
fn decompose_round_trip() {
    let v = json(&["decompose", "--m", "3", "--x", "03+05t"]);
    assert_eq!(v["polar"]["y"], "04");
    assert_eq!(v["affine"]["u"], "05");
    let v = json(&["decompose", "--m", "3", "--x", "03+00t"]);
    assert_eq!(v["in_subfield"], true);
    assert!(v["affine"].is_null());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--scope", "r", "--m-min", "2", "--m-max", "4", "--seed", "7"];
    let a = charsum(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_charsum"))
        .args(args)
        .env("CHARSUM_THREADS", "1")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
}

#[test]
fn bad_thread_count_is_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_charsum"))
        .args(["field-info", "--m", "3"])
        .env("CHARSUM_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
