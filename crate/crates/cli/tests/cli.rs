//! End-to-end tests that spawn the compiled binary and check bytes and
//! exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mockingbird"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("mockingbird"));
}

#[test]
fn seq_prints_one_value_per_line() {
    let out = run(&["seq", "elements", "-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1\n1\n2\n6\n42\n1806\n");
}

#[test]
fn seq_handles_big_integers_and_long_names() {
    let out = run(&["seq", "edges", "--count", "5"]);
    assert_eq!(stdout_of(&out), "0\n0\n1\n7\n97\n");

    let out = run(&["seq", "max-deg", "-n", "3"]);
    assert_eq!(stdout_of(&out), "1\n1\n1\n");

    let out = run(&["seq", "intervals", "-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).ends_with("438176621806663544657\n"));
}

#[test]
fn seq_rejects_unknown_names() {
    let out = run(&["seq", "fibonacci"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("fibonacci"));
}

#[test]
fn lattice_stats_for_a_degree() {
    let out = run(&["lattice", "-d", "3", "--format", "stats"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "6 7 17 2 3\n");
}

#[test]
fn lattice_stats_for_a_forest() {
    let out = run(&["lattice", "-f", "o[o[]]o[]", "--format", "stats"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "12 20 51 3 4\n");
}

#[test]
fn lattice_json_for_a_singleton() {
    let out = run(&["lattice", "-t", "M", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&stdout_of(&out)).expect("output parses as JSON");
    assert_eq!(value["elements"], serde_json::json!(["M"]));
    assert_eq!(value["covers"], serde_json::json!([]));
    assert_eq!(value["bottom"], serde_json::json!(0));
}

#[test]
fn lattice_dot_lists_every_element() {
    let out = run(&["lattice", "-d", "2", "--format", "dot"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"M(MM)\""));
    assert!(text.contains("\"MM(MM)\""));
    assert_eq!(text.matches(" -> ").count(), 1);
}

#[test]
fn lattice_refuses_large_degrees_without_force() {
    let out = run(&["lattice", "-d", "7"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("--force"));
}

#[test]
fn lattice_refuses_large_predicted_sizes_without_force() {
    // Six stacked whites predict far more elements than the build ceiling.
    let out = run(&["lattice", "-f", "o[o[o[o[o[o[]]]]]]", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("--force"));

    // Five stacked whites fit the build ceiling but not the stats ceiling.
    let out = run(&["lattice", "-f", "o[o[o[o[o[]]]]]", "--format", "stats"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("--force"));
}

#[test]
fn lattice_requires_exactly_one_source() {
    let none = run(&["lattice"]);
    assert_eq!(none.status.code(), Some(1));

    let both = run(&["lattice", "-d", "2", "-t", "M"]);
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn lattice_rejects_malformed_input_as_usage_errors() {
    let forest = run(&["lattice", "-f", "o["]);
    assert_eq!(forest.status.code(), Some(1));
    assert!(!stderr_of(&forest).is_empty());

    let term = run(&["lattice", "-t", "M(K)"]);
    assert_eq!(term.status.code(), Some(1));
    assert!(!stderr_of(&term).is_empty());
}

#[test]
fn rewrite_identity_graph_in_dot() {
    let out = run(&["rewrite", "--cls", "I", "--term", "II(III)", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches(" -> ").count(), 9);
    let node_lines = text
        .lines()
        .filter(|line| line.trim_end().ends_with("\";") && !line.contains("->"))
        .count();
    assert_eq!(node_lines, 7);
}

#[test]
fn rewrite_prints_adjacency_text_by_default() {
    let out = run(&["rewrite", "--cls", "M", "--term", "M(M(MM))"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("nodes 6\narcs 7\n"));
    assert!(text.contains("0 M(M(MM))\n"));
}

#[test]
fn rewrite_finds_normal_forms_within_a_step_budget() {
    let out = run(&["rewrite", "--cls", "K,S", "--term", "KKK", "--steps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("nodes 2\narcs 1\n"));
    assert!(text.contains("1 K\n"));
}

#[test]
fn rewrite_reports_truncation_with_partial_output() {
    let out = run(&["rewrite", "--cls", "M", "--term", "M(M(MM))", "--steps", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).starts_with("nodes "));
    assert!(stderr_of(&out).contains("budget"));
}

#[test]
fn rewrite_accepts_rules_files() {
    let dir = std::env::temp_dir().join("mockingbird-cli-tests");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("swap.rules");
    std::fs::write(&path, "# swap the two arguments\nQ 2 := x2x1\n").expect("write rules");

    let out = run(&[
        "rewrite",
        "--rules",
        path.to_str().expect("path is UTF-8"),
        "--term",
        "Qx1x2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("nodes 2\narcs 1\n"));
    assert!(text.contains("1 x2x1\n"));
}

#[test]
fn rewrite_rejects_duplicate_rules_across_sources() {
    let dir = std::env::temp_dir().join("mockingbird-cli-tests");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("identity.rules");
    std::fs::write(&path, "I 1 := x1\n").expect("write rules");

    let out = run(&[
        "rewrite",
        "--cls",
        "I",
        "--rules",
        path.to_str().expect("path is UTF-8"),
        "--term",
        "II",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn rewrite_requires_some_rules() {
    let out = run(&["rewrite", "--term", "KKK"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn verify_defaults_to_fast_and_reports_every_criterion() {
    let first = run(&["verify"]);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout_of(&first);
    assert_eq!(text.matches(" PASS ").count(), 14);
    assert!(text.ends_with("all 14 criteria passed\n"));

    // The explicit spelling is byte-identical: output is deterministic.
    let second = run(&["verify", "--suite", "fast"]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout_of(&second), text);
}
