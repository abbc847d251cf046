//! Runs the `mwpoly` binary and compares stdout with files in
//! `tests/golden/`. Set `MWPOLY_BLESS=1` to rewrite them.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwpoly"))
        .args(args)
        .env_remove("MWPOLY_LOG")
        .output()
        .expect("spawn mwpoly")
}

fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("MWPOLY_BLESS").is_some() {
        fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected),
        "{args:?} differs from {name}"
    );
}

#[test]
fn table1_csv() {
    golden("table1.csv", &["table1", "--format", "csv"]);
}

#[test]
fn table1_json() {
    golden("table1.json", &["table1"]);
}

#[test]
fn classify_mw_7_2() {
    golden("classify_mw_7_2.json", &["classify", "--poly", "mw:7,2"]);
}

#[test]
fn classify_reducible() {
    golden("classify_x4_x2_1.json", &["classify", "--poly", "x^4+x^2+1"]);
}

#[test]
fn search_csv() {
    golden("search_x3_x_1.csv", &["search", "--poly", "x^3+x+1", "--max-deg", "10", "--format", "csv"]);
}

#[test]
fn mw_enum_classified() {
    golden("mw_enum_7.csv", &["mw-enum", "--m", "7", "--classify", "--format", "csv"]);
}

#[test]
fn oa_both_methods() {
    golden("oa_mw_9_2_n18.json", &["oa", "--poly", "mw:9,2", "--n", "18"]);
}

#[test]
fn lfsr_with_identity_check() {
    golden("lfsr_mw_5_2.json", &["lfsr", "--poly", "mw:5,2", "--len", "40", "--check-prop2"]);
}

#[test]
fn corollary1_report() {
    golden("corollary1_9_13.json", &["corollary1", "--m-min", "9", "--m-max", "13"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["--rng-seed", "42", "lfsr", "--poly", "mw:7,1", "--seed", "random", "--len", "64"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--rng-seed", "43", "lfsr", "--poly", "mw:7,1", "--seed", "random", "--len", "64"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["frobnicate"][..],
        &["classify"],
        &["classify", "--poly", "x^3+y"],
        &["mw-enum", "--m", "8"],
        &["search", "--poly", "x^3+x", "--max-deg", "6"],
        &["corollary1", "--m-min", "5", "--m-max", "9"],
        &["oa", "--poly", "x^3+x+1", "--n", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_errors_report_offset() {
    let out = run(&["classify", "--poly", "x^3+y"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('4'), "{err}");
}
