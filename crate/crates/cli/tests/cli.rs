use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use edgeblocks::{fixtures, Multigraph};
use serde_json::Value;

fn write_graph(dir: &Path, name: &str, g: &Multigraph) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(&g.to_document()).unwrap()).unwrap();
    path
}

fn run(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeblocks"))
        .args(args)
        .arg("--input")
        .arg(input)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn blocks_of_ex1_has_three_3_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let ex1 = fixtures::ex1();
    let input = write_graph(dir.path(), "ex1.json", &ex1.graph);
    let o = run(&["blocks"], &input);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let level3 = v["levels"].as_array().unwrap().iter().find(|l| l["k"] == 3).unwrap();
    let blocks: Vec<Vec<usize>> = serde_json::from_value(level3["blocks"].clone()).unwrap();
    let copies: Vec<Vec<usize>> = ex1.copies.iter().map(|c| c.iter().collect()).collect();
    assert_eq!(blocks, copies);
}

#[test]
fn treecut_of_ex1_is_a_star_with_an_empty_hub() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "ex1.json", &fixtures::ex1().graph);
    let o = run(&["treecut", "--k", "3", "--format", "dot"], &input);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("--")).count(), 4);
    assert_eq!(dot.matches("∅").count(), 1);
    assert_eq!(dot.matches("order=2").count(), 3);
}

#[test]
fn verify_c4_passes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "c4.json", &fixtures::c4());
    let o = run(&["verify"], &input);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["equivalent"], true);
}

#[test]
fn nested_restricts_to_orders_below_k() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "ex1.json", &fixtures::ex1().graph);
    let all: Value = serde_json::from_str(&stdout(&run(&["nested"], &input))).unwrap();
    let below: Value = serde_json::from_str(&stdout(&run(&["nested", "--k", "3"], &input))).unwrap();
    let below = below["members"].as_array().unwrap();
    assert_eq!(below.len(), 3);
    assert!(below.iter().all(|m| m["order"].as_u64().unwrap() < 3));
    assert!(all["members"].as_array().unwrap().len() > below.len());
}

#[test]
fn oracle_check_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "bowtie.json", &fixtures::bowtie());
    let o = run(&["oracle-check"], &input);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn input_and_config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertices":2,"edges":[[0,0]]}"#).unwrap();
    assert_eq!(run(&["blocks"], &bad).status.code(), Some(2));
    let disconnected = dir.path().join("two.json");
    std::fs::write(&disconnected, r#"{"vertices":4,"edges":[[0,1],[2,3]]}"#).unwrap();
    assert_eq!(run(&["nested"], &disconnected).status.code(), Some(2));
    assert_eq!(run(&["blocks"], &dir.path().join("missing.json")).status.code(), Some(2));
    let c4 = write_graph(dir.path(), "c4.json", &fixtures::c4());
    assert_eq!(run(&["blocks", "--k", "0"], &c4).status.code(), Some(2));
    assert_eq!(run(&["verify", "--format", "dot"], &c4).status.code(), Some(2));
    assert_eq!(run(&["treecut", "--root", "9"], &c4).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "ex1.json", &fixtures::ex1().graph);
    for cmd in ["blocks", "nested", "treecut", "verify"] {
        let a = run(&[cmd], &input);
        let b = run(&[cmd], &input);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let out = dir.path().join(format!("{cmd}.out"));
        let c = run(&[cmd, "--output", out.to_str().unwrap()], &input);
        assert_eq!(c.status.code(), Some(0));
        assert!(c.stdout.is_empty());
        assert_eq!(std::fs::read(&out).unwrap(), a.stdout, "{cmd}");
    }
}
