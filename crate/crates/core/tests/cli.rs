//! Smoke tests against the compiled binary: output formats and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_taftknot"))
}

#[test]
fn invariant_text_output() {
    let out = bin()
        .args(["invariant", "--braid", "B2: s1^-3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("-q^(9/2) + q^(5/2) + q^(3/2) + q^(1/2)"),
        "{text}"
    );
}

#[test]
fn invariant_machine_output_is_json() {
    let out = bin()
        .args(["invariant", "--braid", "[1, 1, 1]", "--strands", "2", "--format", "machine"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("machine output parses as JSON");
    assert_eq!(v["writhe"], 3);
    assert_eq!(v["components"], 1);
}

#[test]
fn bad_braid_exits_with_parse_code() {
    let out = bin()
        .args(["invariant", "--braid", "garbage"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_runs() {
    let out = bin()
        .args(["verify", "--suite", "ribbon"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS]"), "{text}");
    assert!(!text.contains("[FAIL]"), "{text}");
}
