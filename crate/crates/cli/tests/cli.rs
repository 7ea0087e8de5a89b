use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sobriety"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write_space(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_sober_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(&dir, "sierpinski.json", r#"{"points":["a","b"],"covers":[["a","b"]]}"#);
    let o = run(&["check", "--space", p.to_str().unwrap(), "--prop", "sober"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["holds"], true);
    assert_eq!(v["characterizations_agreed"], true);
}

#[test]
fn check_with_system_and_cross() {
    let o = run(&["check", "--space", "builtin:diamond", "--prop", "super_h_sober", "--system", "R", "--cross"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["crosscheck_super"]["agreed"], true);
}

#[test]
fn zoo_claim() {
    let o = run(&["zoo", "johnstone", "not_well_filtered"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"]["verdict"], "verified");
}

#[test]
fn sweep_is_deterministic() {
    let a = run(&["sweep", "--seed", "7"]);
    let b = run(&["sweep", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["sweep", "--seed", "7", "--count", "200", "--max-points", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["totals"]["checkers"].as_u64().unwrap() > 0);
}

#[test]
fn inspect_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"points":["x","y","z"],"opens":[[],["z"],["y","z"],["x","y","z"]]}"#;
    let p = write_space(&dir, "c.json", text);
    let first = json(&run(&["inspect", "--space", p.to_str().unwrap()]));
    let q = write_space(&dir, "again.json", &first["space"].to_string());
    let second = json(&run(&["inspect", "--space", q.to_str().unwrap()]));
    assert_eq!(first["space"], second["space"]);
    assert_eq!(first["closed_sets"], 4);
}

#[test]
fn reflect_and_render() {
    let o = run(&["reflect", "--space", "builtin:diamond", "--system", "R", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["universal_property"]["unique"], true);
    let o = run(&["render", "--space", "builtin:sierpinski", "--what", "smyth"]);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("digraph \"smyth\""));
    let o = run(&["construct", "product", "--space", "builtin:sierpinski", "--space", "builtin:sierpinski"]);
    assert_eq!(json(&o)["space"]["points"].as_array().unwrap().len(), 4);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(&dir, "bad.json", r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#);
    let o = run(&["check", "--space", p.to_str().unwrap(), "--prop", "sober"]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "NotT0");
    let o = run(&["check", "--space", "builtin:diamond", "--prop", "h_sober"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["construct", "smyth", "--space", "builtin:diamond", "--cap-smyth", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["zoo", "nowhere"]);
    assert_eq!(o.status.code(), Some(2));
}
