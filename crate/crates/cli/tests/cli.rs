use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn powdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powdom"))
        .args(args)
        .env_remove("POWDOM_MAX_N")
        .output()
        .unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const FIG1: &str = "6 5\n0 2\n2 4\n4 5\n1 3\n3 4\n";
const N6: &str = "tests/data/connected_n6.g6";

#[test]
fn analyze_edge_list_with_trace() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig1.edges", FIG1);
    let o = powdom(&["analyze", s(&f), "--trace"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"rad_p\": 2"));
    let v = json(&o);
    assert_eq!(v["solve"]["gamma_p"], 1);
    assert_eq!(v["solve"]["witness"], serde_json::json!([4]));
    assert_eq!(
        v["trace"]["layers"],
        serde_json::json!([[2, 3, 4, 5], [0, 1, 2, 3, 4, 5]])
    );
    assert_eq!(v["trace"]["excess"], 4);
}

#[test]
fn analyze_complete_graph() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k5.g6", "D~{\n");
    let o = powdom(&["analyze", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(
        (v["solve"]["gamma_p"].as_u64(), v["solve"]["rad_p"].as_u64()),
        (Some(1), Some(1))
    );
    assert_eq!(v["report"]["invariants"]["is_complete"], true);
}

#[test]
fn analyze_empty_and_malformed_inputs() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.g6", "");
    let o = powdom(&["analyze", s(&empty)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());

    let bad = write(&dir, "bad.g6", "D~{\nD~\n");
    let o = powdom(&["analyze", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let loops = write(&dir, "loop.edges", "3 1\n1 1\n");
    assert_eq!(powdom(&["analyze", s(&loops)]).status.code(), Some(1));
    let missing = dir.path().join("nope.g6");
    assert_eq!(powdom(&["analyze", s(&missing)]).status.code(), Some(1));
}

#[test]
fn size_limits() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.g6", "D~{\n");
    let o = powdom(&["analyze", s(&k5), "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());

    let via_env = Command::new(env!("CARGO_BIN_EXE_powdom"))
        .args(["analyze", s(&k5)])
        .env("POWDOM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(2));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_powdom"))
        .args(["analyze", s(&k5), "--max-n", "5"])
        .env("POWDOM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));

    assert_eq!(
        powdom(&["analyze", s(&k5), "--max-n", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(
        powdom(&["analyze", s(&k5), "--threads", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn disconnected_needs_per_component() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two.edges", "5 3\n0 1\n2 3\n3 4\n");
    let o = powdom(&["analyze", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--per-component"));
    let o = powdom(&["analyze", s(&f), "--per-component"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["solve"]["gamma_p"], 2);
    assert_eq!(v["solve"]["components"], 2);
    assert_eq!(v["report"]["entries"][2]["applicable"], false);
}

#[test]
fn one_based_edge_lists_and_json_input() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p3.edges", "3 2\n1 2\n2 3\n");
    let o = powdom(&["analyze", s(&f), "--one-based"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o)["graph"]["edges"],
        serde_json::json!([[0, 1], [1, 2]])
    );
    assert_eq!(powdom(&["analyze", s(&f)]).status.code(), Some(1));

    let j = write(
        &dir,
        "g.json",
        r#"[{"n": 3, "edges": [[0, 1], [1, 2]]}, {"n": 2, "edges": [[0, 1]]}]"#,
    );
    let o = powdom(&["analyze", s(&j)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["graph6"], "Bg");
}

#[test]
fn analyze_table_and_graph6_output() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig1.edges", FIG1);
    let o = powdom(&["analyze", s(&f), "--format", "table", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("gamma_p = 1  rad_p = 2  witness = {4}"));
    assert!(text.contains("P2 = {0,1,2,3,4,5}"));
    let o = powdom(&["analyze", s(&f), "--format", "graph6"]);
    assert_eq!(stdout(&o), "EQKG\n");
    assert_eq!(
        powdom(&["analyze", s(&f), "--format", "csv"]).status.code(),
        Some(1)
    );
}

#[test]
fn family_verify_split_example() {
    let o = powdom(&["family", "S", "4", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let g6 = stdout(&o);
    assert_eq!(g6.trim().len(), 1 + (12 * 11 / 2_usize).div_ceil(6));
    assert!(stderr(&o).contains("gamma_p = 2 rad_p = 4"));

    let o = powdom(&["family", "s", "4", "2", "--verify", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["verified"]["matches"], true);
    assert_eq!(v["expected"]["n"], 12);
    assert_eq!(v["params"], serde_json::json!({"g": 2, "p": 4}));
}

#[test]
fn family_errors() {
    let o = powdom(&["family", "F", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no suitable candidate graph for F(2)"));
    assert!(o.stdout.is_empty());
    assert_eq!(powdom(&["family", "Q", "2"]).status.code(), Some(1));
    assert_eq!(powdom(&["family", "G2", "2"]).status.code(), Some(1));
    assert_eq!(powdom(&["family", "G2", "x"]).status.code(), Some(1));
    assert_eq!(powdom(&["family", "H", "3", "1"]).status.code(), Some(1));
}

#[test]
fn family_large_instance() {
    let o = powdom(&["family", "H", "5", "4", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graph"]["n"], 44);
    assert_eq!(v["expected"]["Delta"], 5);
    assert_eq!(
        powdom(&["family", "H", "5", "4", "2", "--verify"])
            .status
            .code(),
        Some(2)
    );
    let o = powdom(&["family", "H", "5", "4", "2", "--verify", "--max-n", "44"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn family_verification_mismatch_exits_4() {
    // The claimed radius 2k is not attained for k = 3.
    let o = powdom(&["family", "G2", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("solver found (1, 5)"));
    assert_eq!(
        powdom(&["family", "G2", "4", "--verify"]).status.code(),
        Some(0)
    );
}

#[test]
fn family_edge_list_round_trips_through_analyze() {
    let dir = TempDir::new().unwrap();
    let o = powdom(&["family", "D", "3", "--format", "edgelist"]);
    let f = write(&dir, "d3.edges", &stdout(&o));
    let o = powdom(&["analyze", s(&f)]);
    let v = json(&o);
    assert_eq!(
        (v["solve"]["gamma_p"].as_u64(), v["solve"]["rad_p"].as_u64()),
        (Some(3), Some(1))
    );
}

#[test]
fn batch_small_corpus_has_no_violations() {
    let o = powdom(&["batch", N6]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 113);
    let summary: Value = serde_json::from_str(lines[112]).unwrap();
    assert_eq!(summary["summary"]["graphs"], 112);
    assert_eq!(summary["summary"]["violations"], 0);
    for l in &lines[..112] {
        let r: Value = serde_json::from_str(l).unwrap();
        assert!(r["violated"].as_array().unwrap().is_empty());
    }
}

#[test]
fn batch_is_deterministic_across_thread_counts() {
    let one = powdom(&["batch", N6, "--threads", "1"]);
    let four = powdom(&["batch", N6, "--threads", "4"]);
    let again = powdom(&["batch", N6, "--threads", "4"]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);
    let csv1 = powdom(&["batch", N6, "--format", "csv", "--threads", "1"]);
    let csv3 = powdom(&["batch", N6, "--format", "csv", "--threads", "3"]);
    assert_eq!(csv1.stdout, csv3.stdout);
    assert!(stdout(&csv1).starts_with("line,graph6,n,gamma_p,rad_p,witness,tight,violated\n"));
}

#[test]
fn batch_family_corpus_is_b3_tight() {
    let dir = TempDir::new().unwrap();
    let mut corpus = String::new();
    for k in 4..=6 {
        corpus.push_str(&stdout(&powdom(&["family", "G2", &k.to_string()])));
    }
    let f = write(&dir, "g2.g6", &corpus);
    let o = powdom(&["batch", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for l in &lines[..3] {
        let r: Value = serde_json::from_str(l).unwrap();
        assert!(
            r["tight"].as_array().unwrap().contains(&Value::from("B3")),
            "{l}"
        );
    }
}

#[test]
fn batch_empty_and_bad_lines() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.g6", "");
    let o = powdom(&["batch", s(&empty)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let mixed = write(&dir, "mixed.g6", "D~{\n!!\nBw\n");
    let o = powdom(&["batch", s(&mixed)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains("\"line\":3"));
    assert!(lines[2].contains("\"errors\":1"));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn batch_reports_violations_with_exit_3() {
    // K_2 and P_4 exceed the split-graph radius bound.
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "small.g6", "A_\nCU\nBw\n");
    let o = powdom(&["batch", s(&f)]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text
        .lines()
        .last()
        .unwrap()
        .contains("\"violated\":{\"B6\":2}"));
}

#[test]
fn audit_csv_rows() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig1.edges", FIG1);
    let o = powdom(&["audit", s(&f), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("graph_id,bound_id"));
    assert!(lines[2].starts_with("0,B2,true,true,<=,5,2,true,false"));
}

#[test]
fn zf_reversal_on_worked_example() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig1.edges", FIG1);
    let o = powdom(&["zf", s(&f), "--set", "0,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["reversal"], serde_json::json!([3, 5]));
    assert_eq!(v["reversal_is_zfs"], true);
    assert_eq!(v["lemma_holds"], true);

    let o = powdom(&[
        "zf",
        s(&f),
        "--set",
        "0,1",
        "--policy",
        "priority",
        "--priority",
        "0,1,3,2,4,5",
    ]);
    assert_eq!(json(&o)["reversal"], serde_json::json!([2, 5]));

    let f1 = write(&dir, "fig1-one.edges", "6 5\n1 3\n3 5\n5 6\n2 4\n4 5\n");
    let o = powdom(&["zf", s(&f1), "--set", "1,2", "--one-based"]);
    assert_eq!(json(&o)["initial"], serde_json::json!([0, 1]));
    assert_eq!(json(&o)["reversal"], serde_json::json!([3, 5]));

    let r1 = powdom(&["zf", s(&f), "--policy", "random", "--seed", "9"]);
    let r2 = powdom(&["zf", s(&f), "--policy", "random", "--seed", "9"]);
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(json(&r1)["initial"], serde_json::json!([2, 3, 4, 5]));

    assert_eq!(powdom(&["zf", s(&f), "--set", "5"]).status.code(), Some(1));
    assert_eq!(powdom(&["zf", s(&f), "--set", "9"]).status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k4.g6");
    let o = powdom(&["family", "K", "4", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "C~\n");
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(powdom(&[]).status.code(), Some(1));
    assert_eq!(powdom(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(powdom(&["--help"]).status.code(), Some(0));
    assert_eq!(
        powdom(&["batch", N6, "--format", "graph6"]).status.code(),
        Some(1)
    );
}
