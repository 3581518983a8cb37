use std::process::{Command, Output};

use serde_json::Value;

fn dumas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dumas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn eisenstein_certificate() {
    let out = dumas(&[
        "check",
        "--ring",
        "Z",
        "--poly",
        "X^4+2*X+2",
        "--val",
        "ord:2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["values"],
        serde_json::json!(["1", "1", "+inf", "+inf", "0"])
    );
    assert_eq!(v["theorem_backed"], Value::Bool(true));
}

#[test]
fn cube_root_is_found() {
    let out = dumas(&[
        "oracle",
        "--ring",
        "Z[sqrt(11)]",
        "--poly",
        "X^3 - (999250+1846625g)",
        "--coord-bound",
        "60",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("factor: X - (10+55g)\n"), "{text}");
}

#[test]
fn cubic_prime_certificate() {
    let out = dumas(&[
        "prime-cert",
        "--ring",
        "Z[cbrt(12)]",
        "--elem",
        "(7-3g)",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["details"]["norm"], "19");
    assert_eq!(v["details"]["certificate"], "norm 19 is prime");
}

#[test]
fn parse_errors_name_the_position() {
    let out = dumas(&["check", "--ring", "Z[X Y]", "--poly", "X", "--val", "ord:2"]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1, column 5"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_flags_are_usage_errors() {
    assert_eq!(dumas(&["check", "--poly", "X^2+1"]).status.code(), Some(4));
    assert_eq!(dumas(&[]).status.code(), Some(4));
    assert_eq!(
        dumas(&["fuzz", "--mode", "sideways"]).status.code(),
        Some(4)
    );
}

#[test]
fn help_and_version() {
    let out = dumas(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("prime-above"));
    assert_eq!(dumas(&["--version"]).status.code(), Some(0));
}

#[test]
fn fuzz_mode_must_match_degrees() {
    let out = dumas(&[
        "fuzz", "--mode", "validate", "--n-max", "7", "--trials", "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let out = dumas(&[
        "fuzz", "--mode", "validate", "--trials", "20", "--seed", "9", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["seed"], "9");
    assert_eq!(v["details"]["certified"], "20");
}

#[test]
fn seeded_runs_repeat() {
    let args = [
        "axioms",
        "--ring",
        "Z[Y,Z]",
        "--val",
        "codeg:1,3",
        "--pairs",
        "500",
        "--seed",
        "5",
        "--json",
    ];
    let a = dumas(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, dumas(&args).stdout);
}
