//! End-to-end tests of the `oseq` binary: exit codes, stable JSON output,
//! generator-file handling, and witness round-trips.

use std::path::Path;
use std::process::{Command, Output};

fn oseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oseq"))
        .args(args)
        .env_remove("PURE_O_JOBS")
        .output()
        .expect("binary runs")
}

fn oseq_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oseq"))
        .args(args)
        .env_remove("PURE_O_JOBS")
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hvector_output_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("triple.txt"), "x1*x2*x3\n").unwrap();
    let out = oseq_in(dir.path(), &["hvector", "--gens", "triple.txt"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"h\":[1,3,3,1]}\n");
}

#[test]
fn check_pure_flat_witness() {
    let out = oseq(&["check-pure", "1,5,5,5,3", "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["query"], serde_json::json!([1, 5, 5, 5, 3]));
    assert_eq!(v["verdict"], "Pure");
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn classify_flat_exit_and_reason() {
    let out = oseq(&["classify-flat", "4", "5", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reason"], "ExceedsTwiceSocle");
    assert_eq!(v["rule"], "lemma-1.3");

    let out = oseq(&["classify-flat", "4", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_pure_not_pure_exits_1() {
    let out = oseq(&["check-pure", "1,3,3,3,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inconclusive_exits_3() {
    let out = oseq(&["check-pure", "1,6,6,6,6", "--nodes", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "Inconclusive");
    assert_eq!(v["reason"], "NodeBudgetExceeded");
}

#[test]
fn generator_file_errors() {
    let dir = tempfile::tempdir().unwrap();

    std::fs::write(dir.path().join("dup.txt"), "x1\nx1\n").unwrap();
    let out = oseq_in(dir.path(), &["hvector", "--gens", "dup.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");

    std::fs::write(dir.path().join("empty.txt"), "# only a comment\n").unwrap();
    let out = oseq_in(dir.path(), &["hvector", "--gens", "empty.txt"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(dir.path().join("bad.txt"), "x1\nx0^2\n").unwrap();
    let out = oseq_in(dir.path(), &["hvector", "--gens", "bad.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");

    let out = oseq_in(dir.path(), &["hvector", "--gens", "missing.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_sequences_exit_2() {
    for seq in ["2,3", "1,0,2", "1,2,0", "1,x", ""] {
        let out = oseq(&["check-o", seq]);
        assert_eq!(out.status.code(), Some(2), "sequence {seq:?}");
    }
}

#[test]
fn witness_roundtrips_through_load() {
    let dir = tempfile::tempdir().unwrap();
    let out = oseq_in(
        dir.path(),
        &["witness", "flat", "4", "5", "3", "--out", "w.txt"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h"], serde_json::json!([1, 5, 5, 5, 3]));

    // The written file re-parses to the same h-vector.
    let out = oseq_in(dir.path(), &["hvector", "--gens", "w.txt"]);
    assert_eq!(stdout(&out), "{\"h\":[1,5,5,5,3]}\n");
}

#[test]
fn witness_out_of_range_exits_2() {
    let out = oseq(&["witness", "socle2", "4", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("BelowLowerBound"), "stderr was: {err}");
}

#[test]
fn pq_profile_output() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.txt"), "x1*x2^3\nx3*x4^3\nx5^4\n").unwrap();
    let out = oseq_in(dir.path(), &["pq", "--gens", "g.txt"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["p"], serde_json::json!([2, 2, 1]));
    assert_eq!(v["q"], serde_json::json!([2, 2, 1]));
    assert_eq!(v["sum_p"], 5);
    assert_eq!(v["sum_q"], 5);
}

#[test]
fn enumerate_catalog_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = oseq_in(
        dir.path(),
        &["enumerate", "2", "2", "3", "--catalog", "cat.jsonl"],
    );
    assert_eq!(out.status.code(), Some(0));
    let contents = std::fs::read_to_string(dir.path().join("cat.jsonl")).unwrap();
    let lines: Vec<&str> = contents.lines().collect();
    assert_eq!(lines.len(), 4);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["h"], serde_json::json!([1, 1, 1]));
    assert_eq!(first["witness"], serde_json::json!(["x1^2"]));
}

#[test]
fn verify_clean_grid_exits_0() {
    let out = oseq(&["verify", "4", "3", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["disagreements"], serde_json::json!([]));
    assert_eq!(v["inconclusive"], serde_json::json!([]));
    assert_eq!(v["agreements"].as_array().unwrap().len(), 12);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["check-pure", "1,4,4,3", "--witness"],
        vec!["enumerate", "3", "3", "3"],
        vec!["verify", "3", "4", "4"],
        vec!["check-pure", "1,4,4,3", "--witness", "--jobs", "2"],
    ] {
        let first = oseq(&args);
        let second = oseq(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
    // Worker count must not change the answer either.
    let one = oseq(&["verify", "3", "4", "4", "--jobs", "1"]);
    let four = oseq(&["verify", "3", "4", "4", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn jobs_env_variable_is_honored() {
    let flagged = oseq(&["verify", "3", "3", "3", "--jobs", "1"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_oseq"))
        .args(["verify", "3", "3", "3"])
        .env("PURE_O_JOBS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(flagged.status.code(), Some(0));
    assert_eq!(flagged.stdout, via_env.stdout);

    let bad_env = Command::new(env!("CARGO_BIN_EXE_oseq"))
        .args(["verify", "3", "3", "3"])
        .env("PURE_O_JOBS", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn text_format_summaries() {
    let out = oseq(&["check-o", "1,2,4", "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not an O-sequence"));

    let out = oseq(&["classify-flat", "4", "4", "2", "--format", "text"]);
    assert!(stdout(&out).contains("pure"));
}
