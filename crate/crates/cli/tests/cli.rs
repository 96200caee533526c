use std::process::Command;

use kac_cli::run;
use serde_json::Value;

const EXAMPLE: &str = "rho:7,5,4,2,1|1,2,4,7,8,10";

fn ok(args: &[&str]) -> String {
    let mut full = vec!["kac"];
    full.extend_from_slice(args);
    let (code, out) = run(full);
    assert_eq!(code, 0, "{args:?}: {out}");
    out
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).expect("valid JSON")
}

#[test]
fn diagram_of_example() {
    assert_eq!(ok(&["diagram", EXAMPLE]), "@1:xx.x>.x<.<\n");
    let v = json(&["diagram", EXAMPLE]);
    assert_eq!(v["diagram"]["start"], 1);
    assert_eq!(v["diagram"]["symbols"], "xx.x>.x<.<");
}

#[test]
fn factors_of_example() {
    let out = ok(&["factors", EXAMPLE]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 19);
    assert!(rows[0].starts_with("∅ "));
    assert!(rows[18].starts_with("L11 L12 L33 L44 "));
    let lengths: Vec<u64> = json(&["factors", EXAMPLE])["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["length"].as_u64().unwrap())
        .collect();
    assert!(lengths.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn layers() {
    assert_eq!(ok(&["layers", "2,1|0"]), "0: ∅\n");
    let out = ok(&["layers", EXAMPLE]);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().nth(1), Some("1: L11, L33, L34, L44"));
    assert_eq!(json(&["layers", "0|0"])["sizes"], serde_json::json!([1, 1]));
}

#[test]
fn graph_formats() {
    let v = json(&["graph", EXAMPLE]);
    assert_eq!(v["r"], 4);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 19);
    assert_eq!(v["layers"].as_array().unwrap().len(), 5);
    for e in v["edges"].as_array().unwrap() {
        assert_eq!(e.as_array().unwrap().len(), 2);
    }
    let dot = ok(&["--format", "dot", "graph", "2,1|0"]);
    assert!(dot.starts_with("digraph kac {"));
    assert_eq!(dot.matches("->").count(), 0);
    assert!(ok(&["graph", EXAMPLE]).starts_with("19 vertices, "));
}

#[test]
fn kl_on_gl11_chain() {
    let v = json(&["--depth", "6", "kl", "0|0"]);
    let kl: Vec<&str> = v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["kl"].as_str().unwrap())
        .collect();
    assert_eq!(kl, ["1", "-q", "q^2", "-q^3", "q^4", "-q^5", "q^6"]);
    assert_eq!(v["truncated"], true);
    let table = ok(&["--depth", "2", "kl", "0|0"]);
    assert!(table.lines().nth(1).unwrap().starts_with("mu"));
}

#[test]
fn reduce_and_codes() {
    let v = json(&["reduce", EXAMPLE]);
    assert_eq!(v["core_diagram"], "@1:xx.x.x");
    assert_eq!(v["core"], "3,2,1,1|1,1,2,3");
    assert_eq!(v["report"]["mismatches"].as_array().unwrap().len(), 0);
    let codes = ok(&["codes", EXAMPLE]);
    assert!(codes.lines().any(|l| l == "L11 L33 L14      1 4 3 4 [4]"));
}

#[test]
fn osp_subcommand() {
    let out = ok(&["osp", "--n", "1", "--weight", "0;0"]);
    assert!(out.contains("atypical root: ε-δ1"));
    assert!(out.contains("jantzen length: 1"));
    let v = json(&["osp", "--n", "2", "--weight", "10;3,1"]);
    assert_eq!(v["jantzen_length"], 0);
    let (code, out) = run(["kac", "osp", "--n", "2", "--weight", "0;0"]);
    assert_eq!(code, 1);
    assert!(out.contains("expected 2"));
}

#[test]
fn check_subcommand() {
    let out = ok(&["check", EXAMPLE]);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert!(json(&["check", "0|0"])["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn exit_codes() {
    let (code, out) = run(["kac", "factors", "1,x|0"]);
    assert_eq!(code, 1);
    assert!(out.contains("`x`"));
    let (code, out) = run(["kac", "diagram", "0,1|0"]);
    assert_eq!(code, 1);
    assert!(out.contains("not dominant"), "{out}");
    assert_eq!(run(["kac", "frobnicate", "0|0"]).0, 2);
    assert_eq!(run(["kac", "diagram"]).0, 2);
    assert_eq!(run(["kac", "--format", "xml", "diagram", "0|0"]).0, 2);
    assert_eq!(run(["kac", "--format", "dot", "layers", "0|0"]).0, 2);
    assert_eq!(run(["kac", "--help"]).0, 0);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_kac");
    let out = Command::new(bin)
        .args(["diagram", EXAMPLE])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "@1:xx.x>.x<.<\n");
    let bad = Command::new(bin)
        .args(["diagram", "1,x|0"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("`x`"));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
