//! Exit-code and document contract of the binary: 0 positive branch,
//! 1 negative/witness branch, 2 input error, 3 timeout; every emitted
//! document carries verification = true.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tk5"))
}

fn write_temp(name: &str, contents: &[u8]) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("tk5-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn doc_of(stdout: &[u8]) -> serde_json::Value {
    serde_json::from_slice(stdout).expect("stdout is one JSON document")
}

#[test]
fn tk5_on_k6_exits_zero_with_certificate() {
    let path = write_temp("k6.g6", b"E~~w");
    let out = bin().args(["tk5", "--in"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["verification"]["verified"], true);
    assert_eq!(doc["outcome"]["certificate"]["branch"].as_array().unwrap().len(), 5);
}

#[test]
fn planarity_on_petersen_exits_one_with_kuratowski() {
    let path = write_temp("petersen.g6", b"IheA@GUAo\n");
    let out = bin().args(["planarity", "--in"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["planar"], false);
    assert_eq!(doc["verification"]["verified"], true);
}

#[test]
fn classify_k7_minus_edge_reports_outcome_ii() {
    let mut edges = Vec::new();
    for u in 0..7 {
        for v in (u + 1)..7 {
            if (u, v) != (5, 6) {
                edges.push(serde_json::json!([u, v]));
            }
        }
    }
    let body = serde_json::json!({ "n": 7, "edges": edges }).to_string();
    let path = write_temp("k7me.json", body.as_bytes());
    let out = bin()
        .args([
            "classify", "--x1", "0", "--x2", "1", "--y1", "5", "--y2", "6", "--w", "2,3,4",
            "--in",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["outcome"], "ii");
    assert_eq!(doc["verification"]["verified"], true);
}

#[test]
fn malformed_input_exits_two() {
    let path = write_temp("junk.g6", &[0x10, 0x11]);
    let out = bin().args(["planarity", "--in"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_two() {
    let out = bin().args(["planarity", "--nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_budget_times_out_with_exit_three() {
    // A dense 12-vertex graph with no TK5 answer inside a zero budget.
    let mut edges = Vec::new();
    for u in 0..12 {
        for v in (u + 1)..12 {
            edges.push(serde_json::json!([u, v]));
        }
    }
    let body = serde_json::json!({ "n": 12, "edges": edges }).to_string();
    let path = write_temp("k12.json", body.as_bytes());
    let out = bin()
        .args(["tk5", "--budget-ms", "0", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reads_stdin_when_no_input_given() {
    let mut child = bin()
        .args(["connectivity"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"3\n0 1\n1 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["connectivity"], 1);
}

#[test]
fn two_paths_witness_branch_exits_one() {
    let path = write_temp("c4.el", b"4\n0 1\n1 2\n2 3\n0 3\n");
    let out = bin()
        .args(["two-paths", "--s1", "0", "--s2", "1", "--t1", "2", "--t2", "3", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["branch"], "witness");
    assert_eq!(doc["verification"]["verified"], true);
}

#[test]
fn gadget_command_emits_census() {
    let out = bin().args(["gadget"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["graph"]["n"], 9);
    assert_eq!(doc["outcome"]["graph"]["edges"].as_array().unwrap().len(), 16);
}

#[test]
fn cycle3_obstruction_branch() {
    // K2,3 with the three degree-2 terminals.
    let path = write_temp("k23.el", b"5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let out = bin()
        .args(["cycle3", "--y", "2,3,4", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["branch"], "obstruction");
}

#[test]
fn reduce_on_k7_minus_edge_reports_k4minus_variant() {
    let mut edges = Vec::new();
    for u in 0..7 {
        for v in (u + 1)..7 {
            if (u, v) != (5, 6) {
                edges.push(serde_json::json!([u, v]));
            }
        }
    }
    let body = serde_json::json!({ "n": 7, "edges": edges }).to_string();
    let path = write_temp("k7me_reduce.json", body.as_bytes());
    let out = bin()
        .args([
            "reduce", "--x1", "0", "--x2", "1", "--y1", "5", "--y2", "6", "--w", "2,3,4",
            "--in",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = doc_of(&out.stdout);
    assert_eq!(doc["outcome"]["variant"], "k4minus-in-g-minus-y2");
    assert_eq!(doc["verification"]["verified"], true);
}

#[test]
fn reduce_rejects_non_five_connected_input_by_name() {
    let path = write_temp("c6.el", b"6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = bin()
        .args([
            "reduce", "--x1", "0", "--x2", "1", "--y1", "2", "--y2", "3", "--w", "1,2,4",
            "--in",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("5-connected"));
}
