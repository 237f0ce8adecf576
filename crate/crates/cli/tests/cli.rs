use std::process::{Command, Output};

use serde_json::Value;
use tmoments::Rational;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tmoments"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn jacobi_moment_example() {
    let v = json(&[
        "moment",
        "--ensemble",
        "jacobi",
        "--beta",
        "2",
        "--k",
        "2",
        "--n",
        "2",
        "--a",
        "0",
        "--b",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(v["value"], "11/15");
    assert_eq!(v["conjecture"], false);
    assert!(v["value_decimal"].as_str().unwrap().starts_with("7.33333"));
    let repro = &v["reproducibility"];
    assert_eq!(repro["command"], "moment");
    assert_eq!(repro["argv"][0], "moment");
}

#[test]
fn delay_coefficient_example() {
    let v = json(&[
        "coeff", "--target", "delay", "--beta", "2", "--k", "2", "--p", "1", "--w", "3",
    ]);
    assert_eq!(v["value"], "0");
}

#[test]
fn conjectured_coefficient_is_flagged() {
    let args = [
        "coeff",
        "--target",
        "transmission",
        "--beta",
        "1",
        "--delta",
        "-1",
        "--k",
        "2",
        "--p",
        "2",
        "--u",
        "2",
    ];
    assert_eq!(json(&args)["conjecture"], true);
    let settled = json(&[
        "coeff",
        "--target",
        "transmission",
        "--beta",
        "1",
        "--k",
        "2",
        "--p",
        "2",
        "--u",
        "2",
    ]);
    assert_eq!(settled["conjecture"], false);
}

#[test]
fn verify_coker_passes() {
    let out = run(&["verify", "--suite", "coker", "--kmax", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn domain_errors_exit_one_without_output() {
    let cases: [&[&str]; 4] = [
        // decimal notation is not a rational
        &[
            "coeff", "--target", "delay", "--beta", "2", "--k", "2", "--p", "1", "--w", "0.5",
        ],
        // w must exceed 1
        &[
            "coeff", "--target", "delay", "--beta", "2", "--k", "2", "--p", "1", "--w", "1",
        ],
        &[
            "coeff",
            "--target",
            "transmission",
            "--beta",
            "4",
            "--k",
            "1",
            "--p",
            "2",
            "--u",
            "2",
        ],
        &[
            "moment",
            "--ensemble",
            "jacobi",
            "--beta",
            "3",
            "--k",
            "1",
            "--n",
            "2",
            "--a",
            "0",
            "--b",
            "0",
        ],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn seeded_sampling_is_byte_identical() {
    let args = [
        "sample",
        "--ensemble",
        "laguerre",
        "--beta",
        "1",
        "--n",
        "6",
        "--b",
        "7",
        "--seed",
        "99",
        "--samples",
        "3",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let other = run(&[
        "sample",
        "--ensemble",
        "laguerre",
        "--beta",
        "1",
        "--n",
        "6",
        "--b",
        "7",
        "--seed",
        "100",
        "--samples",
        "3",
    ]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn emitted_rationals_round_trip() {
    let coeffs = json(&[
        "genfun",
        "--id",
        "t2-beta2-delta",
        "--u",
        "5/3",
        "--delta",
        "1",
        "--order",
        "3",
    ]);
    let emitted = coeffs["coefficients"][2]["value"]
        .as_str()
        .unwrap()
        .to_string();
    let x: Rational = emitted.parse().unwrap();
    assert!(x > Rational::from_integer(0.into()));
    // Feed the emitted string back as both Jacobi exponents; the first moment
    // is Aomoto's n(b+n)/(a+b+2n).
    let args = [
        "moment",
        "--ensemble",
        "jacobi",
        "--beta",
        "2",
        "--k",
        "1",
        "--n",
        "3",
        "--a",
        &emitted,
        "--b",
        &emitted,
    ];
    let first = json(&args);
    assert_eq!(first["inputs"]["a"], emitted.as_str());
    let n = Rational::from_integer(3.into());
    let aomoto = &n * (&x + &n) / (&x + &x + &n + &n);
    let value: Rational = first["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(value, aomoto);
    assert_eq!(json(&args)["value"], first["value"]);
}

#[test]
fn csv_has_the_value_columns() {
    let out = run(&[
        "genfun", "--id", "d0", "--w", "2", "--order", "6", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let repro = lines.next().unwrap();
    assert!(repro.starts_with("# {"));
    assert_eq!(
        lines.next().unwrap(),
        "k,n,p,value_rational,value_decimal,flags"
    );
    let values: Vec<&str> = lines.map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(values, ["0", "1", "2", "6", "22", "90"]);
}
