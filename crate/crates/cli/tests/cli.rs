use std::process::{Command, Output};

use serde_json::Value;

use secondsol::golden;
use secondsol::json::{bezout_report_from_json, expansion_report_from_json, orbit_from_json, poly_from_json, pq_from_json};
use secondsol::pqpoly::{build_p, build_q};
use secondsol::{Rational, Scalar};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secondsol")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn chg_table_single_entry() {
    assert_eq!(stdout(&["chg-table", "--N", "2", "--n", "1", "--format", "text"]), "x^2 - 5x + 2\n");
    assert_eq!(stdout(&["chg-table", "--N", "0", "--n", "0"]), "0\n");
    assert_eq!(stdout(&["chg-table", "--N", "3", "--n", "0"]), "-x^2 + 8x - 11\n");
}

#[test]
fn chg_table_all_reproduces_reference() {
    let text = stdout(&["chg-table", "--all"]);
    assert_eq!(text, golden::reference_text());
    assert_eq!(text.lines().filter(|l| !l.is_empty() && !l.starts_with("n ")).count(), 35);
    let rows = json(&["chg-table", "--all", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 35);
    for row in rows {
        let big_n = row["params"]["N"].as_u64().unwrap() as usize;
        let n = row["params"]["n"].as_u64().unwrap() as usize;
        assert_eq!(poly_from_json(&row["P"]).unwrap(), golden::golden_poly(big_n, n).unwrap());
    }
}

#[test]
fn dalembert_harmonic_json() {
    let v = json(&["dalembert", "--example", "harmonic", "--upto", "5", "--format", "json"]);
    let second = orbit_from_json(&v["second"]).unwrap();
    assert_eq!(second.last().unwrap(), &Rational::from_ratio(77, 60));
    assert_eq!(v["solves_recurrence"], Value::Bool(true));
    assert_eq!(orbit_from_json(&v["first"]).unwrap().len(), 6);
}

#[test]
fn dalembert_with_user_coefficients() {
    // (n+2) y_{n+2} - (2n+3) y_{n+1} + (n+1) y_n = 0 entered by hand
    let v = json(&["dalembert", "--coeffs", "a=2,1;b=-3,-2;c=1,1", "--upto", "5", "--format", "json"]);
    let second = orbit_from_json(&v["second"]).unwrap();
    assert_eq!(second.last().unwrap(), &Rational::from_ratio(77, 60));
    let v = json(&["dalembert", "--example", "double-root", "--r", "2", "--upto", "4", "--format", "json"]);
    assert_eq!(orbit_from_json(&v["second"]).unwrap().last().unwrap(), &Rational::from_i64(48));
}

#[test]
fn pq_round_trip() {
    let v = json(&["pq", "--n", "4", "--format", "json"]);
    assert_eq!(pq_from_json(&v["P"]).unwrap(), build_p(4));
    assert_eq!(pq_from_json(&v["Q"]).unwrap(), build_q(4));
    let text = stdout(&["pq", "--n", "4"]);
    assert!(text.starts_with("P_4 (5) = b0 b1 b2 b3 + "), "{text}");
}

#[test]
fn bezout_report_round_trip() {
    let v = json(&["bezout", "--N", "2", "--n", "1", "--format", "json"]);
    let r = bezout_report_from_json(&v).unwrap();
    assert_eq!(r.pair.s.to_string(), "-2");
    assert_eq!(r.pair.t.to_string(), "x - 3");
    assert_eq!(r.c, Rational::from_i64(6));
    assert_eq!(v["degree_s"], 0);
    assert_eq!(v["degree_t"], 1);
    assert_eq!(v["closed_form"], "equal");
}

#[test]
fn series_report_round_trip() {
    let v = json(&["series-compare", "--N", "3", "--n", "2", "--format", "json"]);
    let r = expansion_report_from_json(&v).unwrap();
    assert!(r.equal);
    assert_eq!(r.order, 20);
    let text = stdout(&["series-compare", "--N", "0", "--n", "1", "--order", "1"]);
    assert!(text.contains("x^0   1 - γ"), "{text}");
    assert!(text.contains("equal: true"));
}

#[test]
fn verification_sweeps_pass() {
    assert!(stdout(&["chg-verify", "--N", "3", "--n", "2"]).lines().all(|l| l.starts_with("PASS")));
    assert!(run(&["bezout", "--all"]).status.success());
    assert!(run(&["series-compare", "--all"]).status.success());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["chg-table", "--N", "1"],
        &["chg-table", "--N", "x", "--n", "1"],
        &["dalembert", "--example", "nope"],
        &["dalembert", "--coeffs", "a=1;b=2"],
        &["bezout", "--N", "0", "--n", "3"],
        &["chg-table", "--N", "1", "--n", "1", "--format", "yaml"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failed_computation_exits_1() {
    // f_n = n - 1 vanishes at n = 1, so reduction of order is not applicable
    let out = run(&["dalembert", "--coeffs", "a=1;b=-2;c=1", "--seeds=-1,0", "--upto", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vanishes"));
}

#[test]
fn output_is_deterministic() {
    let args = ["selftest", "--format", "json"];
    let (a, b) = (stdout(&args), stdout(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
}
