//! End-to-end tests of the `mgu` binary: exact output and exit codes.

use std::process::{Command, Output};

fn mgu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mgu"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn unify_success_output_and_exit() {
    let out = mgu(&["unify", "G[A; x]", "G[y; F[y]]"]);
    assert_eq!(stdout(&out), "SUCCESS {x -> F[A]; y -> A}\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unify_failure_output_and_exit() {
    let out = mgu(&["unify", "G[x; x]", "G[y; F[y]]"]);
    assert_eq!(stdout(&out), "FAILURE\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unify_result_reparses_and_unifies() {
    let out = mgu(&["unify", "(x F[y])", "(G[B] z)"]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let printed = line.strip_prefix("SUCCESS ").unwrap().trim_end();
    let s = mgu_cli::parse_subst(printed).unwrap();
    let t = mgu_cli::parse_term("(x F[y])").unwrap();
    let u = mgu_cli::parse_term("(G[B] z)").unwrap();
    assert_eq!(s.apply(&t), s.apply(&u));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = mgu(&["unify", "G[A;", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("1:5"), "stderr: {}", stderr(&out));

    let out = mgu(&["vars", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1:1: empty input"), "stderr: {}", stderr(&out));
}

#[test]
fn usage_errors_exit_2() {
    let out = mgu(&[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());

    let out = mgu(&["frobnicate", "x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mgu(&["unify", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let out = mgu(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("unify"));
}

#[test]
fn apply_prints_substituted_term() {
    let out = mgu(&["apply", "G[A; x]", "{x -> F[A]; y -> A}"]);
    assert_eq!(stdout(&out), "G[A; F[A]]\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compose_prints_canonical_composition() {
    let out = mgu(&["compose", "{x -> y}", "{y -> A}"]);
    assert_eq!(stdout(&out), "{x -> A; y -> A}\n");
    assert_eq!(out.status.code(), Some(0));

    // Shadowed and trivial bindings disappear in the canonical output.
    let out = mgu(&["compose", "{x -> x; y -> B; y -> A}", "{}"]);
    assert_eq!(stdout(&out), "{y -> B}\n");
}

#[test]
fn occurs_strict_relation() {
    let out = mgu(&["occurs", "x", "x"]);
    assert_eq!(stdout(&out), "false\n");
    assert_eq!(out.status.code(), Some(0));

    let out = mgu(&["occurs", "x", "F[x]"]);
    assert_eq!(stdout(&out), "true\n");
}

#[test]
fn vars_sorted_list() {
    let out = mgu(&["vars", "G[y; F[x; y]]"]);
    assert_eq!(stdout(&out), "x y\n");

    let out = mgu(&["vars", "A"]);
    assert_eq!(stdout(&out), "\n");
}

#[test]
fn trace_lines_and_result() {
    let out = mgu(&["trace", "G[A; x]", "G[y; F[y]]"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.last().unwrap(), &"SUCCESS {x -> F[A]; y -> A}");
    assert_eq!(lines.len(), 5);
    for line in &lines[..4] {
        assert!(line.starts_with("head ") || line.starts_with("tail "), "line: {line}");
        assert!(line.ends_with(" PASS"), "line: {line}");
    }

    let out = mgu(&["trace", "A", "A"]);
    assert_eq!(stdout(&out), "SUCCESS {}\n");

    let out = mgu(&["trace", "G[x; x]", "G[y; F[y]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("FAILURE\n"));
}

#[test]
fn check_small_universe_passes() {
    let out = mgu(&[
        "check", "--consts", "1", "--vars", "1", "--depth", "1", "--seed", "7", "--random", "100",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("terms: 6"), "{text}");
    assert!(text.contains("random cases: 100"), "{text}");
    assert!(text.trim_end().ends_with("result: PASS"), "{text}");
}
