//! End-to-end checks of the command-line surface: exit codes, the
//! emit/parse round trip, and the extend/extract pipeline.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lie2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lie2_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lie2"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_catalog_entry() {
    let out = lie2(&["verify", "--catalog", "L^2_{1|1}"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Lie axioms: pass"));
}

#[test]
fn verify_failure_exits_one() {
    let bad = "field 2^1 0x3\nsdim 1 1\nbasis e1 | e2\nbracket e1 e2 = e2\nsquaring e2 = e1\n";
    let out = lie2_stdin(&["verify", "--file", "-"], bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("squaring Jacobi"));
}

#[test]
fn parse_error_exits_two() {
    let bad = "field 2^1 0x3\nsdim 1 1\nbasis e1 | e2\nbracket e1 e3 = e2\n";
    let out = lie2_stdin(&["verify", "--file", "-"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn usage_error_exits_two() {
    let out = lie2(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emit_parse_round_trip_is_identity() {
    let emitted = stdout(&lie2(&["emit", "--catalog", "L^d_{2|2}", "--param", "eps=1"]));
    let reverified = lie2_stdin(&["verify", "--file", "-"], &emitted);
    assert_eq!(reverified.status.code(), Some(0));
    // byte-identical re-emission through the parser is covered by the
    // library round-trip tests; here we check determinism across runs
    let again = stdout(&lie2(&["emit", "--catalog", "L^d_{2|2}", "--param", "eps=1"]));
    assert_eq!(emitted, again);
}

#[test]
fn constraint_violation_is_reported() {
    let out = lie2(&["emit", "--catalog", "L^c_{2|2}", "--param", "eps=1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("constraint"));
}

#[test]
fn extend_then_extract_round_trips() {
    let input = "\
field 2^1 0x3
sdim 1 1
basis e1 | e2
bracket e1 e2 = e2
nabla e1 e2 = e2
alpha e1 e2 = e2*
gamma e2 = e1*
";
    let ext = lie2_stdin(&["extend", "--file", "-"], input);
    assert_eq!(ext.status.code(), Some(0));
    let ext_text = stdout(&ext);
    assert!(ext_text.contains("bracket e1 e2 = e2 + e2*"));
    assert!(ext_text.contains("squaring e2 = e1*"));
    let back = lie2_stdin(&["extract", "--file", "-"], &ext_text);
    assert_eq!(back.status.code(), Some(0));
    let back_text = stdout(&back);
    assert!(back_text.contains("bracket e1 e2 = e2"));
    assert!(back_text.contains("nabla e1 e2 = e2"));
    assert!(back_text.contains("alpha e1 e2 = e2*"));
    assert!(back_text.contains("gamma e2 = e1*"));
}

#[test]
fn lagrangian_cohomology_of_the_odd_kind() {
    let input = "\
field 2^1 0x3
sdim 0 2
basis | e1 e2
";
    // with no nabla/prod block the zero connection is attached, matching
    // the format's omitted-entries-are-zero convention
    let out = lie2_stdin(&["lagrangian-cohomology", "--file", "-", "--kind", "odd"], input);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("XH2_L dim 2"));
    assert!(text.contains("alpha e1 e2 = Pi("));
}

#[test]
fn queerify_idempotent_scalar() {
    let input = "\
field 2^1 0x3
sdim 1 0
basis e1 |
p2 e1 = e1
";
    let out = lie2_stdin(&["queerify", "--file", "-"], input);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sdim 1 1"));
    assert!(text.contains("squaring Pi(e1) = e1"));
}

#[test]
fn machine_mode_is_deterministic() {
    let a = stdout(&lie2(&["reproduce", "pasha", "--machine"]));
    let b = stdout(&lie2(&["reproduce", "pasha", "--machine"]));
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.starts_with("{\"table\":\"pasha\"")));
}

#[test]
fn reproduce_classif2_matches() {
    let out = lie2(&["reproduce", "classif2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 mismatches"));
}

#[test]
fn search_lss_emits_orbit_representatives() {
    let out = lie2(&["search-lss", "--catalog", "L^2_{1|1}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("prod e2 e2 = e1"));
    assert!(text.contains("left-alternative: true"));
}
