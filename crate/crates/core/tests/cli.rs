use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn plain_examples() {
    assert_eq!(stdout(&["pm", "--t", "1", "--d", "-1", "--m", "10"]), "55");
    assert_eq!(stdout(&["pm", "--t", "2", "--d", "1", "--m", "4", "--engine", "binomial"]), "4");
    assert_eq!(stdout(&["pm", "--t", "1", "--d", "\u{2212}1", "--m", "12", "--mod", "100"]), "44 mod 100");
    assert_eq!(stdout(&["xpow", "--t", "1", "--d", "-1", "--m", "5"]), "5,3");
    assert_eq!(stdout(&["matpow", "--matrix", "1,1;1,0", "--m", "5"]), "8,5;5,3");
    assert_eq!(stdout(&["fib", "--n", "12"]), "144");
    assert_eq!(stdout(&["lucas", "--n", "10"]), "123");
    assert_eq!(stdout(&["symbolic", "--m", "3"]), "T^2 - D");
}

#[test]
fn engines_agree_through_the_cli() {
    for engine in ["iterative", "binomial", "doubling"] {
        let args = ["matpow", "--matrix", "3,-4;7,2", "--m", "37", "--engine", engine];
        assert_eq!(stdout(&args), stdout(&["matpow", "--matrix", "3,-4;7,2", "--m", "37"]));
    }
}

#[test]
fn json_numbers_are_strings() {
    let v = json(&["pm", "--t", "1", "--d", "-1", "--m", "100", "--json"]);
    assert_eq!(v["value"], "354224848179261915075");
    assert_eq!(v["m"], "100");
    assert_eq!(v["ring"], "bigint");

    let v = json(&["xpow", "--t", "2", "--d", "3", "--m", "4", "--json"]);
    assert_eq!((v["a"].as_str(), v["b"].as_str()), (Some("-4"), Some("-3")));

    let v = json(&["matpow", "--matrix", "1,1;1,0", "--m", "5", "--json"]);
    assert_eq!(v["entries"][1][0], "5");

    let v = json(&["fibnm", "--n", "3", "--m", "4", "--json"]);
    assert_eq!(v["fnm"], "144");
    assert_eq!(v["pass"], true);

    let v = json(&["symbolic", "--m", "5", "--json"]);
    assert_eq!(v["poly"], "T^4 - 3*T^2*D + D^2");
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);

    let v = json(&["bench", "--ms", "256", "--json"]);
    for record in v.as_array().unwrap() {
        assert!(record["multiplications"].is_string());
        assert!(record["wall_time_ns"].is_string());
    }
}

#[test]
fn plain_output_round_trips() {
    let matrix = stdout(&["matpow", "--matrix", "2,-1;5,3", "--m", "9"]);
    let back = stdout(&["matpow", "--matrix", &matrix, "--m", "1"]);
    assert_eq!(back, matrix);

    let poly = stdout(&["symbolic", "--m", "9"]);
    let parsed: quadpow::ring::BivariatePoly = poly.parse().unwrap();
    assert_eq!(parsed.to_string(), poly);
}

#[test]
fn verify_passes_and_fault_is_caught() {
    let ok = run(&["verify", "--scope", "symbolic"]);
    assert_eq!(ok.status.code(), Some(0));
    let summary = String::from_utf8(ok.stdout).unwrap();
    assert!(!summary.contains("FAIL"));

    let bad = run(&["verify", "--scope", "symbolic", "--inject-fault", "sign-flip", "--json"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_ne!(v["failed"], "0");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["pm", "--t", "x", "--d", "1", "--m", "3"][..],
        &["pm", "--t", "1", "--d", "1", "--m", "3", "--mod", "1"],
        &["pm", "--t", "1", "--d", "1", "--m", "-3"],
        &["matpow", "--matrix", "1,2;3", "--m", "2"],
        &["fib", "--n", "0", "--engine", "binomial"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = run(&["pm", "--t", "x", "--d", "1", "--m", "3"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("position 0"));
}
