//! End-to-end checks of the command-line interface: exit codes, report
//! shape, file outputs, and byte-determinism of decision sections.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contractk"))
}

fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Everything before the first blank line.
fn decision_section(text: &str) -> String {
    text.split("\n\n").next().unwrap_or("").to_string()
}

const C5: &str = "p contract 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n";
const P4: &str = "p contract 4 3\ne 0 1\ne 1 2\ne 2 3\n";

#[test]
fn solve_split_contraction_yes_and_no() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.graph", C5);

    let out = bin().args(["solve", "split-contraction", "--k", "2"]).arg(&c5).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("decision YES"));
    assert!(text.contains("certificate "));
    assert!(text.contains("time_ms "));

    let out = bin().args(["solve", "split-contraction", "--k", "1"]).arg(&c5).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("decision NO"));
}

#[test]
fn recognize_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.graph", P4);

    let out = bin().args(["recognize", "threshold"]).arg(&p4).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness P4 0 1 2 3"));

    let out = bin().args(["recognize", "split"]).arg(&p4).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("clique 1 2"));
    assert!(text.contains("independent 0 3"));
}

#[test]
fn verify_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.graph", "p contract 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let cert = write(dir.path(), "cert.txt", "e 0 1\n");

    let out = bin()
        .args(["verify", "split-contraction", "--k", "1", "--cert"])
        .arg(&cert)
        .arg(&c4)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("decision VALID"));

    let c5 = write(dir.path(), "c5.graph", C5);
    let out = bin()
        .args(["verify", "split-contraction", "--k", "1", "--cert"])
        .arg(&cert)
        .arg(&c5)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("decision INVALID"));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "p contract 2 1\ne 0 7\n");
    let out = bin().args(["solve", "split-contraction", "--k", "1"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");
}

#[test]
fn budget_cap_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    // K8: 28 edges; k = 8 with a tiny cap trips the enumeration guard.
    let mut text = String::from("p contract 8 28\n");
    for u in 0..8 {
        for v in u + 1..8 {
            text.push_str(&format!("e {u} {v}\n"));
        }
    }
    let g = write(dir.path(), "k8.graph", &text);
    let out = bin()
        .args(["oracle", "split-contraction", "--k", "8", "--cap", "10"])
        .arg(&g)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generate_writes_instance_and_roles() {
    let dir = tempfile::tempdir().unwrap();
    let bip = write(dir.path(), "in.bip", "p bipartite 1 1 1 1\ne 0 1\n");
    let out_path = dir.path().join("gen.graph");
    let out = bin()
        .args(["generate", "rbds-to-split"])
        .arg(&bip)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("budget 2"));
    assert!(text.contains("n 10"));
    let gen = std::fs::read_to_string(&out_path).unwrap();
    assert!(gen.starts_with("p contract 10 "));
    let roles = std::fs::read_to_string(dir.path().join("gen.graph.roles")).unwrap();
    assert!(roles.contains("v 2 u"));
    assert!(roles.lines().count() == 10);
}

#[test]
fn oracle_bipartite_problems() {
    let dir = tempfile::tempdir().unwrap();
    let bip = write(dir.path(), "b.bip", "p bipartite 2 2 2 1\ne 0 2\ne 1 3\n");
    let out = bin().args(["oracle", "rbds"]).arg(&bip).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Budget override flips the answer.
    let out = bin().args(["oracle", "rbds", "--t", "2"]).arg(&bip).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("solution 2 3"));

    let out = bin().args(["oracle", "osdomatic", "--t", "2"]).arg(&bip).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["oracle", "osdomatic", "--t", "1"]).arg(&bip).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("block0 0 1"));
}

#[test]
fn decision_sections_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.graph", C5);

    let run = |args: &[&str], file: &Path| {
        let out = bin().args(args).arg(file).output().unwrap();
        decision_section(&stdout(&out))
    };
    for args in [
        &["solve", "split-contraction", "--k", "2"][..],
        &["solve", "clique-contraction", "--k", "3"][..],
        &["oracle", "split-contraction", "--k", "2"][..],
        &["recognize", "split"][..],
    ] {
        let a = run(args, &c5);
        let b = run(args, &c5);
        assert_eq!(a, b, "non-deterministic decision section for {args:?}");
        assert!(!a.contains("time_ms"), "timing leaked into decision section");
    }

    let bench = |seed: &str| {
        let out = bin()
            .args(["bench", "--family", "labeled-split", "--seed", seed])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        decision_section(&stdout(&out))
    };
    assert_eq!(bench("0"), bench("0"));
}
