//! Golden-file tests for the command-line interface.
//!
//! Each test runs the compiled binary against a fixture under `tests/data/`
//! and pins the output byte-for-byte (or, for larger documents, pins the
//! load-bearing lines). Exit statuses are part of the contract: 0 success,
//! 1 module error, 2 usage error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stringalg"))
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn validate_accepts_good_presentation() {
    assert_eq!(stdout(&["validate", &data("gp23.json")]), "ok\n");
}

#[test]
fn validate_rejects_three_loops_with_status_one() {
    let out = run(&["validate", &data("three_loops.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("too-many-outgoing"), "stderr: {err}");
    assert!(err.contains("too-many-incoming"), "stderr: {err}");
}

#[test]
fn sign_maps_text_is_pinned() {
    assert_eq!(
        stdout(&["sign-maps", &data("gp23.json")]),
        "a: sigma=-1 tau=+1\nb: sigma=+1 tau=-1\n"
    );
}

#[test]
fn sign_maps_json_is_pinned() {
    assert_eq!(
        stdout(&["sign-maps", &data("gp23.json"), "--format", "json"]),
        "{\"sigma\":{\"a\":-1,\"b\":1},\"tau\":{\"a\":1,\"b\":-1}}\n"
    );
}

#[test]
fn strings_enumeration_is_pinned() {
    assert_eq!(
        stdout(&["strings", &data("gp23.json"), "--maxlen", "2"]),
        "a\na-\nb\nb-\na-b\nab-\nb-a\nb-b-\nba-\nbb\n"
    );
}

#[test]
fn bands_list_canonical_rotations() {
    assert_eq!(stdout(&["bands", &data("kronecker.json"), "--maxlen", "4"]), "a-b\nb-a\n");
    // Each listed word is a canonical rotation (rightmost syllable direct);
    // a band and its inverse are distinct entries, rotations collapse.
    assert_eq!(stdout(&["bands", &data("gp23.json"), "--maxlen", "4"]), "a-b\nb-a\na-bb\nb-b-a\n");
}

#[test]
fn hammock_table_matches_six_state_figure() {
    assert_eq!(
        stdout(&["hammock", &data("gp23.json"), "--vertex", "v"]),
        "alphabet: 0 1\n\
         start: 0\n\
         0 [1_(v,1)] accepting: 0->1 1->2\n\
         1 [a] accepting: 1->3\n\
         2 [b-] accepting: 0->4 1->5\n\
         3 [b-a] accepting: 0->4 1->5\n\
         4 [ab-] accepting: 1->3\n\
         5 [b-b-] accepting: 0->4\n"
    );
}

#[test]
fn right_hammock_relabels_by_inversion() {
    let text =
        stdout(&["hammock", &data("gp23.json"), "--anchor-string", "1_(v,1)", "--side", "right"]);
    assert!(text.contains("[b-b-]"), "{text}");
    assert!(text.lines().count() == 8, "{text}");
}

#[test]
fn rees_acceptor_for_loop_algebra() {
    assert_eq!(
        stdout(&["rees", &data("loop.json")]),
        "alphabet: a a-\n\
         start: 0\n\
         0 [\u{3b5}] rejecting: a->1 a-->2\n\
         1 [a] accepting: \n\
         2 [a-] accepting: \n"
    );
}

#[test]
fn order_type_reports_start_component() {
    let text = stdout(&["order-type", &data("gp23.json"), "--vertex", "v"]);
    assert!(text.contains("w + sh(w* + w) + w*"), "{text}");
    assert!(text.contains("[start]"), "{text}");
    assert!(text.contains("# anchor 1_(v,1) start v0"), "{text}");
    // Both signs of the vertex are reported.
    assert!(text.contains("# anchor 1_(v,-1) start v0"), "{text}");
}

#[test]
fn order_type_single_anchor_via_string() {
    let text = stdout(&["order-type", &data("loop.json"), "--anchor-string", "1_(v,1)"]);
    assert_eq!(text, "# anchor 1_(v,1) start v0\nv0 = 2  [start]\nv1 = 1\n");
}

#[test]
fn order_type_output_is_deterministic() {
    let a = stdout(&["order-type", &data("gp23.json"), "--format", "json"]);
    let b = stdout(&["order-type", &data("gp23.json"), "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"schema_version\":1"), "{a}");
}

#[test]
fn classify_reads_standalone_automata() {
    let text = stdout(&["classify", &data("eta_automaton.json")]);
    assert!(text.contains("1 [q] omega=true omega_bar=true eta=true eta_bar=true"), "{text}");
    assert!(text.contains("language: empty=false finite=false scattered=false"), "{text}");
}

#[test]
fn classify_reads_presentations() {
    let text = stdout(&["classify", &data("gp23.json")]);
    assert!(text.contains("hammock 1_(v,1)"), "{text}");
    assert!(text.contains("hammock 1_(v,-1)"), "{text}");
    assert!(text.contains("3 [b-a] omega=true omega_bar=true eta=true eta_bar=true"), "{text}");
}

#[test]
fn is_domestic_answers() {
    assert_eq!(stdout(&["is-domestic", &data("gp23.json")]), "false\n");
    assert_eq!(stdout(&["is-domestic", &data("loop.json")]), "true\n");
    assert_eq!(stdout(&["is-domestic", &data("kronecker.json")]), "true\n");
}

#[test]
fn word_problem_matches_solver_input() {
    assert_eq!(
        stdout(&["word-problem", &data("gp23.json"), "--vertex", "v"]),
        "# start v0\n\
         v0 = v1 * v2\n\
         v1 = * v3\n\
         v2 = v4 * v5\n\
         v3 = v4 * v5\n\
         v4 = * v3\n\
         v5 = v4 *\n"
    );
}

#[test]
fn solve_wp_solves_text_systems() {
    assert_eq!(stdout(&["solve-wp", &data("zigzag.wp")]), "u = w + sh(w* + w) + w*\n");
}

#[test]
fn solve_wp_json_reports_quasi_rationality() {
    assert_eq!(
        stdout(&["solve-wp", &data("zigzag.wp"), "--format", "json"]),
        "{\"quasi_rational\":false,\"schema_version\":1,\
         \"solution\":{\"u\":\"w + sh(w* + w) + w*\"}}\n"
    );
}

#[test]
fn expand_prints_tree_and_frontier() {
    assert_eq!(
        stdout(&["expand", &data("zigzag.wp"), "--unknown", "u", "--depth", "0"]),
        "u(* u * * u *)\nfrontier: * u * * u *\n"
    );
}

#[test]
fn term_normalizes_and_reports_predicates() {
    let text = stdout(&["term", "w* + 2 + w"]);
    assert!(text.starts_with("normalized: w* + w\n"), "{text}");
    assert!(text.contains("scattered: true  is_eta: false"), "{text}");
    let eta = stdout(&["term", "sh(1, 1)"]);
    assert!(eta.starts_with("normalized: sh(1)\n"), "{eta}");
    assert!(eta.contains("is_eta: true"), "{eta}");
}

#[test]
fn term_rejects_garbage_with_status_one() {
    let out = run(&["term", "w + + w"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exceptional_kronecker_has_error_term_two() {
    let text = stdout(&["exceptional", &data("kronecker.json")]);
    assert!(text.starts_with("e = 2\n"), "{text}");
    assert!(text.contains("vertex 1 band b-a: left=true right=true"), "{text}");
    assert!(text.contains("vertex 2 band ab-: left=true right=true"), "{text}");
}

#[test]
fn exceptional_gp23_is_empty_under_target_coupling() {
    assert_eq!(stdout(&["exceptional", &data("gp23.json")]), "e = 0\n");
}

#[test]
fn exceptional_gp23_source_coupling_rejects_candidates() {
    let text = stdout(&["exceptional", &data("gp23.json"), "--d-orientation", "source"]);
    assert!(text.starts_with("e = 0\n"), "{text}");
    assert!(text.contains("rejected candidates:"), "{text}");
    assert!(text.contains("ab-"), "{text}");
}

#[test]
fn exceptional_dot_needs_a_vertex() {
    let out = run(&["exceptional", &data("gp23.json"), "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
    let ok = run(&["exceptional", &data("gp23.json"), "--format", "dot", "--vertex", "v"]);
    assert!(ok.status.success());
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.starts_with("digraph surgery {"), "{text}");
}

#[test]
fn hammock_without_selector_is_usage_error() {
    let out = run(&["hammock", &data("gp23.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_vertex_is_module_error() {
    let out = run(&["hammock", &data("gp23.json"), "--vertex", "zzz"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown vertex"), "{err}");
}

#[test]
fn missing_file_is_module_error() {
    let out = run(&["validate", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(1));
}
