use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cupstack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

#[test]
fn gen_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q4.txt");
    let out = run(&[
        "gen",
        "--family",
        "hypercube",
        "--d",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().next(), Some("16 32"));

    let out = run(&["gen", "--family", "kneser", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("10 15"));

    let out = run(&["gen", "--family", "biwheel", "--l", "24", "--removed", "1,9,17"]);
    assert_eq!(stdout(&out).lines().next(), Some("49 69"));
}

#[test]
fn solve_reports_verdicts_through_exit_codes() {
    let out = run(&[
        "solve",
        "--family",
        "hypercube:4",
        "--method",
        "hamilton",
        "--target",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["moves"].as_array().unwrap().len(), 15);

    let out = run(&[
        "solve", "--family", "kab:2,4", "--method", "search", "--target", "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "not");

    let out = run(&["solve", "--family", "path:12", "--target", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["moves"].as_array().unwrap().len(), 11);

    let out = run(&[
        "solve",
        "--family",
        "biwheel:24:1,9,17",
        "--method",
        "bipartite-paths",
        "--target",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["moves"].as_array().unwrap().len(), 48);
}

#[test]
fn solve_power_writes_plan() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--out-dir",
        dir.path().to_str().unwrap(),
        "solve",
        "--method",
        "power",
        "--base",
        "kab:2,4",
        "--r",
        "4",
        "--partition",
        "2,0,3;4,1,5",
        "--target",
        "700",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let plan: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("plan.json")).unwrap()).unwrap();
    assert_eq!(plan["method"], "power-grids");
    assert_eq!(plan["hypotheses"]["guaranteed"], true);
    assert!(dir.path().join("solution.json").is_file());
}

#[test]
fn minweight_rows() {
    let out = run(&["minweight", "--family", "path:12", "--all-targets"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "22,20,20,18,18,20,20,18,18,20,20,22");
    let out = run(&["minweight", "--family", "path:1"]);
    assert_eq!(stdout(&out).trim(), "0");
    let out = run(&["minweight", "--family", "kab:2,4", "--target", "3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn census_and_chain() {
    let out = run(&["census", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let found = json(&out)["found"].as_array().unwrap().len();
    assert_eq!(found, 4);

    let out = run(&["chain", "--base", "f10", "--super", "kab:4,6", "--length", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chain"]["edges"].as_array().unwrap().len(), 5);
    assert_eq!(v["chain"]["classifications"][0], "stackable");
}

#[test]
fn certify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--out-dir",
        dir.path().to_str().unwrap(),
        "certify",
        "--family",
        "cactus:5:complete:2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["strongly_non_stackable"], true);

    let saved = dir.path().join("certificates.json");
    let out = run(&[
        "certify",
        "--family",
        "cactus:5:complete:2",
        "--check",
        saved.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "certify",
        "--family",
        "path:6",
        "--check",
        saved.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["certify", "--family", "path:5", "--target", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["solve", "--family", "path:6", "--target", "2"]);
    let moves = json(&out)["moves"].clone();
    let good = dir.path().join("good.json");
    fs::write(&good, moves.to_string()).unwrap();
    let out = run(&[
        "verify",
        "--family",
        "path:6",
        "--target",
        "2",
        "--moves",
        good.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "verify",
        "--family",
        "path:6",
        "--target",
        "3",
        "--moves",
        good.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"[{"from": 0, "to": 2, "cups": 1}]"#).unwrap();
    let out = run(&[
        "verify",
        "--family",
        "path:6",
        "--target",
        "2",
        "--moves",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_and_errors() {
    let out = run(&["--budget", "3", "decide", "--family", "path:10", "--target", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["decide", "--family", "kab:2,4", "--target", "9"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_across_worker_counts() {
    let a = run(&["--deterministic", "decide", "--family", "f10"]);
    let b = run(&["--workers", "4", "decide", "--family", "f10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
