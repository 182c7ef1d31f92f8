use std::process::{Command, Output};

use schubert_core::classes::{factorial_schur_det, Theory};
use schubert_core::combinat::Composition;
use schubert_core::poly::{from_json_value, to_text};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env("SCHUBERT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = schubert(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn schur_examples() {
    assert_eq!(stdout(&["schur", "--k", "1", "--n-cap", "2", "--lam", "1", "--format", "text"]), "x1 + t1\n");
    assert_eq!(stdout(&["schur", "--k", "2", "--n-cap", "2", "--lam", "0", "--format", "text"]), "1\n");
    assert_eq!(stdout(&["schur", "--k", "2", "--n-cap", "2", "--lam", "1,0"]), "x1 + x2 + t1 + t2\n");
}

#[test]
fn groth_examples() {
    assert_eq!(stdout(&["groth", "--k", "1", "--lam", "1"]), "x1 + T1 - x1*T1\n");
    assert_eq!(stdout(&["groth", "--lam", ""]), "1\n");
    let all = stdout(&["groth", "--k", "2", "--n-cap", "2", "--lam", "2,1", "--route", "all"]);
    let lines: Vec<&str> = all.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("determinant: "));
    assert_eq!(lines[3], "MATCH");
}

#[test]
fn push_examples() {
    assert_eq!(stdout(&["push", "--theory", "coh", "--k", "2", "--lam", "1,2"]), "0\n");
    let expected = factorial_schur_det(&Composition::new(vec![1, 1]), 2, 3).unwrap().neg();
    assert_eq!(stdout(&["push", "--theory", "coh", "--k", "2", "--lam", "0,2"]), format!("{}\n", to_text(&expected)));
    assert_eq!(stdout(&["push", "--theory", "k", "--k", "1", "--lam", "1"]), "x1 + T1 - x1*T1\n");
    let all = stdout(&["push", "--theory", "k", "--k", "2", "--n-cap", "2", "--lam", "0,2", "--route", "all"]);
    assert!(all.ends_with("MATCH\n") && !all.contains("MISMATCH"));
}

#[test]
fn json_round_trips_through_parser() {
    let out = stdout(&["groth", "--k", "2", "--n-cap", "2", "--lam", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let parsed = from_json_value(v["value"].clone()).unwrap();
    let det = schubert_core::classes::determinant_for(Theory::KTheory, &Composition::new(vec![2, 1]), 2, 2).unwrap();
    assert_eq!(parsed, det);

    let out = stdout(&["localize", "--k", "2", "--n-cap", "2", "--lam", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 6);
    for p in points {
        from_json_value(p["value"].clone()).unwrap();
    }
}

#[test]
fn straighten_and_dgroth() {
    assert_eq!(stdout(&["straighten", "--k", "2", "--lam", "1,2"]), "sign 0\n0\n");
    assert_eq!(
        stdout(&["straighten", "--theory", "k", "--k", "2", "--n-cap", "2", "--lam", "0,2"]),
        "position 1: holds\n"
    );
    assert_eq!(stdout(&["dgroth", "--perm", "2,1"]), "x1 + T1 - x1*T1\n");
    assert_eq!(stdout(&["dgroth", "--perm", "1,2,3"]), "1\n");
    assert_eq!(
        stdout(&["dgroth", "--k", "1", "--n-cap", "2", "--lam", "2"]),
        stdout(&["groth", "--k", "1", "--n-cap", "2", "--lam", "2"])
    );
}

#[test]
fn localize_single_point() {
    assert_eq!(stdout(&["localize", "--k", "2", "--n-cap", "2", "--lam", "1", "--at", "0"]), "0\n");
    assert_eq!(stdout(&["localize", "--k", "2", "--n-cap", "2", "--lam", "1", "--at", "1"]), "t2 - t3\n");
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "operators", "--k", "3", "--trials", "100", "--seed", "7"],
        vec!["verify", "--suite", "routes-coh", "--k", "3", "--n-cap", "3"],
        vec!["verify", "--suite", "vanishing", "--k", "2", "--n-cap", "2"],
        vec!["verify", "--suite", "dgroth", "--k", "3"],
    ] {
        let out = stdout(&args);
        assert!(out.contains(" 0 failed"), "{out}");
    }
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["schur", "--k", "2", "--n-cap", "2", "--lam", "3"],
        vec!["schur", "--k", "2", "--lam", "1,2"],
        vec!["push", "--k", "1", "--lam", "1,1"],
        vec!["push", "--k", "0"],
        vec!["verify", "--suite", "bogus"],
        vec!["dgroth", "--perm", "1,1"],
        vec!["schur", "--theory", "q"],
    ] {
        let out = schubert(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "localize", "--k", "2", "--n-cap", "2", "--seed", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["push", "--theory", "k", "--k", "3", "--n-cap", "2", "--lam", "1,0,2", "--route", "all", "--format", "latex"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn bench_rows_are_ordered() {
    let out = stdout(&["bench", "--k", "3", "--n-cap", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<(u64, String)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["k"].as_u64().unwrap(), r["route"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(keys.first().unwrap().0, 1);
    assert_eq!(keys.last().unwrap().0, 3);
    assert!(keys.windows(2).all(|w| w[0].0 <= w[1].0));
    let text = stdout(&["bench", "--k", "4", "--n-cap", "1"]);
    assert!(text.lines().any(|l| l.split_whitespace().nth(3) == Some("24")));
}
