//! End-to-end tests of the `tilings` binary: output bytes, exit codes, JSON
//! round-trips.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilings"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn count_two_by_two_square() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "square.txt", "0 0\n0 1\n1 0\n1 1\n");
    assert_eq!(
        stdout_of(&["count", "--file", &file, "--mode", "dimer"]),
        "2\n"
    );
    assert_eq!(
        stdout_of(&["count", "--file", &file, "--mode", "md"]),
        "7\n"
    );
    let weighted = stdout_of(&["count-weighted", "--file", &file]);
    assert_eq!(weighted, "h^2 + v^2\n");
}

#[test]
fn frame_seq_prints_one_term_per_line() {
    let out = stdout_of(&[
        "frame-seq",
        "2",
        "2",
        "2",
        "2",
        "--terms",
        "16",
        "--mode",
        "dimer",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 16);
    assert_eq!(lines[0], "36");
    assert_eq!(lines[1], "196");
    assert_eq!(lines[15], "104073336269956");
}

#[test]
fn rect_seq_with_oracle_check() {
    let out = stdout_of(&[
        "rect-seq",
        "3",
        "--terms",
        "7",
        "--mode",
        "md",
        "--verify-oracle",
    ]);
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn weighted_sequences_render_polynomials() {
    let out = stdout_of(&[
        "rect-seq",
        "1",
        "--terms",
        "3",
        "--mode",
        "md",
        "--weighted",
    ]);
    assert_eq!(out, "1\nm\nh + m^2\n");
}

#[test]
fn json_outputs_roundtrip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "square.txt", "0 0\n0 1\n1 0\n1 1\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["count", "--file", &file, "--format", "json"],
        vec![
            "count-weighted",
            "--file",
            &file,
            "--format",
            "json",
            "--mode",
            "md",
        ],
        vec!["rect-seq", "2", "--terms", "8", "--format", "json"],
        vec![
            "frame-seq",
            "2",
            "2",
            "2",
            "2",
            "--terms",
            "6",
            "--format",
            "json",
            "--mode",
            "md",
        ],
        vec!["frame-gf", "1", "3", "3", "1", "--format", "json"],
        vec!["cross-seq", "2", "2", "--terms", "6", "--format", "json"],
        vec![
            "frame-gf-bivariate",
            "2",
            "2",
            "2",
            "2",
            "--terms",
            "15",
            "--max-order",
            "6",
            "--format",
            "json",
        ],
        vec![
            "moments", "2", "2", "2", "2", "--terms", "3", "--format", "json",
        ],
    ];
    for args in cases {
        let text = stdout_of(&args);
        let value: Value = serde_json::from_str(text.trim_end()).expect("valid JSON");
        let reserialized = serde_json::to_string(&value).unwrap();
        assert_eq!(reserialized, text.trim_end(), "roundtrip for {args:?}");
    }
}

#[test]
fn generating_function_plain_fixtures() {
    // canonical forms are stable byte for byte
    assert_eq!(
        stdout_of(&["frame-gf", "1", "3", "3", "1", "--max-order", "12"]),
        "(36 - 32*t - 116*t^2 + 40*t^3 + 28*t^4 - 8*t^5) / \
         (1 - 4*t - 3*t^2 + 16*t^3 - 3*t^4 - 4*t^5 + t^6)\n"
    );
    assert_eq!(
        stdout_of(&["cross-gf", "2", "2", "--max-order", "8"]),
        "(-2 + 2*t - 2*t^2) / (-1 + 5*t + 15*t^2 - 15*t^3 - 5*t^4 + t^5)\n"
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["frame-gf", "2", "2", "2", "2", "--max-order", "8"]);
    let b = run(&["frame-gf", "2", "2", "2", "2", "--max-order", "8"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frame-seq", "2", "2", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["rect-seq", "0", "--terms", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn computation_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    // unreadable file
    let out = run(&[
        "count",
        "--file",
        dir.path().join("missing.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    // duplicate cell, with the offending line named
    let dup = write_file(dir.path(), "dup.txt", "0 0\n0 0\n");
    let out = run(&["count", "--file", &dup]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr was: {err}");
    // malformed line
    let bad = write_file(dir.path(), "bad.txt", "0 0\n1 2 3\n");
    let out = run(&["count", "--file", &bad]);
    assert_eq!(out.status.code(), Some(2));
    // width beyond the cap
    let out = run(&["frame-seq", "9", "9", "9", "9", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guess_cfinite_from_terms_file() {
    let dir = tempfile::tempdir().unwrap();
    let fib = write_file(dir.path(), "fib.txt", "0 1 1 2 3 5 8 13 21 34\n");
    assert_eq!(
        stdout_of(&["guess-cfinite", "--file", &fib, "--max-order", "8"]),
        "[[0, 1], [1, 1]]\n"
    );
    let json = stdout_of(&["guess-cfinite", "--file", &fib, "--format", "json"]);
    assert_eq!(
        json,
        "{\"coeffs\":[\"1\",\"1\"],\"initial\":[\"0\",\"1\"]}\n"
    );
    // not C-finite within the order bound
    let junk = write_file(
        dir.path(),
        "junk.txt",
        "1 1 2 6 24 120 720 5040 40320 362880\n",
    );
    assert_eq!(
        stdout_of(&["guess-cfinite", "--file", &junk, "--max-order", "3"]),
        "none\n"
    );
}

#[test]
fn cfinite_equal_and_verify_bound() {
    let dir = tempfile::tempdir().unwrap();
    let fib = write_file(
        dir.path(),
        "fib.json",
        r#"{"initial":[0,1],"coeffs":[1,1]}"#,
    );
    let fib3 = write_file(
        dir.path(),
        "fib3.json",
        r#"{"initial":["0","1","1"],"coeffs":["1","1","0"]}"#,
    );
    let other = write_file(
        dir.path(),
        "other.json",
        r#"{"initial":[1,1],"coeffs":[1,1]}"#,
    );
    assert_eq!(stdout_of(&["cfinite-equal", &fib, &fib3]), "true\n");
    assert_eq!(stdout_of(&["cfinite-equal", &fib, &other]), "false\n");

    let terms = write_file(dir.path(), "t.txt", "0 1 1 2 3 5 8 13 21 34 55 89\n");
    assert_eq!(
        stdout_of(&["verify-bound", &fib, &terms, "--bound", "2"]),
        "ProvedUnderBound\n"
    );
    assert_eq!(
        stdout_of(&["verify-bound", &fib, &terms, "--bound", "30"]),
        "Inconclusive\n"
    );
    let wrong = write_file(dir.path(), "w.txt", "0 1 1 2 3 5 8 13 21 35\n");
    assert_eq!(
        stdout_of(&["verify-bound", &fib, &wrong, "--bound", "2"]),
        "Refuted\n"
    );
}

#[test]
fn growth_formats() {
    let dir = tempfile::tempdir().unwrap();
    let fib = write_file(
        dir.path(),
        "fib.json",
        r#"{"initial":[0,1],"coeffs":[1,1]}"#,
    );
    let plain = stdout_of(&["growth", &fib, "--index", "40"]);
    assert!(plain.starts_with("1.618033989 ±"), "got {plain}");
    let json = stdout_of(&["growth", &fib, "--index", "40", "--format", "json"]);
    let value: Value = serde_json::from_str(json.trim_end()).unwrap();
    let estimate = value["estimate"].as_f64().unwrap();
    assert!((estimate - 1.618033988749895).abs() < 1e-9);
}

#[test]
fn bivariate_conventions_differ_only_in_degenerate_entries() {
    let trace = stdout_of(&[
        "frame-gf-bivariate",
        "2",
        "2",
        "2",
        "2",
        "--terms",
        "15",
        "--max-order",
        "6",
    ]);
    assert!(trace.starts_with("P = 36 - 23*x - 23*y"), "got {trace}");
    // the true-region table is not doubly C-finite within this order bound
    let region = stdout_of(&[
        "frame-gf-bivariate",
        "2",
        "2",
        "2",
        "2",
        "--terms",
        "15",
        "--max-order",
        "6",
        "--convention",
        "region",
    ]);
    assert_eq!(region, "none\n");
}

#[test]
fn oracle_flag_validates_bivariate_table() {
    let out = run(&[
        "frame-gf-bivariate",
        "2",
        "2",
        "2",
        "2",
        "--terms",
        "8",
        "--max-order",
        "6",
        "--verify-oracle",
    ]);
    assert!(out.status.success());
    let out = run(&[
        "frame-gf-bivariate",
        "2",
        "2",
        "2",
        "2",
        "--terms",
        "8",
        "--max-order",
        "6",
        "--convention",
        "region",
        "--verify-oracle",
    ]);
    assert!(out.status.success());
}
