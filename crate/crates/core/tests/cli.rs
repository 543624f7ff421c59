//! End-to-end runs of the `quasidet` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasidet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_matrix(dir: &Path, name: &str, entries: &[&[&str]]) -> String {
    let rows = entries.len();
    let cols = entries.first().map_or(0, |r| r.len());
    let body = serde_json::json!({ "rows": rows, "cols": cols, "entries": entries });
    let path = dir.join(name);
    fs::write(&path, body.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn qdet_of_constant_matrix() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(dir.path(), "a.json", &[&["1", "2"], &["3", "4"]]);
    let o = run(&["qdet", "--matrix", &m, "--p", "1", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    // 1 - 2 * 4^{-1} * 3
    assert_eq!(stdout(&o).trim(), "-1/2");
}

#[test]
fn qdet_methods_agree_on_cli() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(dir.path(), "a.json", &[&["2", "1/3", "7"], &["1", "5", "-2"], &["4", "1", "1"]]);
    let outs: Vec<String> = ["recursive", "minor-inverse", "auto"]
        .iter()
        .map(|method| stdout(&run(&["qdet", "--matrix", &m, "--p", "3", "--q", "2", "--method", method])))
        .collect();
    assert!(outs.iter().all(|o| o == &outs[0] && !o.is_empty()), "{outs:?}");
}

#[test]
fn symbolic_qdet_prints_formula() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(dir.path(), "x.json", &[&["a", "b"], &["c", "d"]]);
    let o = run(&["qdet", "--matrix", &m, "--p", "1", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for v in ["a", "b", "c", "d", "inv"] {
        assert!(s.contains(v), "{s}");
    }
}

#[test]
fn undefined_qdet_exits_2() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(dir.path(), "s.json", &[&["1", "2"], &["1", "0"]]);
    let o = run(&["qdet", "--matrix", &m, "--p", "1", "--q", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(run(&["qdet"]).status.code(), Some(3));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(3));
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"rows":2,"cols":2,"entries":[["1"]]}"#).unwrap();
    let o = run(&["qdet", "--matrix", bad.to_str().unwrap(), "--p", "1", "--q", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn quasi_pluecker_commutative_ratio() {
    let dir = TempDir::new().unwrap();
    // p^{{3}}_{12} = det(cols 2,3) / det(cols 1,3)
    let m = write_matrix(dir.path(), "k.json", &[&["1", "2", "0"], &["3", "1", "1"]]);
    let o = run(&["qpc", "left", "--matrix", &m, "--i", "1", "--j", "2", "--set", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn gauss_emits_three_factors() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(dir.path(), "g.json", &[&["2", "1"], &["1", "3"]]);
    let o = run(&["gauss", "--matrix", &m]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["U", "Y", "L"] {
        assert_eq!(v[k]["rows"], 2);
    }
}

#[test]
fn rogers_ramanujan_matches() {
    let o = run(&["rr", "--order", "6", "--depth", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 7);
    assert!(s.lines().all(|l| l.ends_with("match")));
    assert!(s.lines().nth(1).unwrap().starts_with("z^1: -q |"), "{s}");
}

#[test]
fn symm_and_contfrac_pass() {
    let o = run(&["symm", "--n", "3", "--d", "2", "--check", "vieta", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["contfrac", "--n", "4", "--d", "2", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_report_and_replay() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let r = report.to_str().unwrap();
    let o = run(&["verify", "--only", "SYLVESTER,NEG-COMMUTE", "--samples", "3", "--report", r]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let first = fs::read_to_string(&report).unwrap();

    let o = run(&["replay", "--report", r, "--id", "NEG-COMMUTE", "--index", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["reproduced"], true);
    assert_eq!(out["still_differs"], true);

    let o = run(&["replay", "--report", r, "--id", "SYLVESTER", "--index", "0"]);
    assert_eq!(o.status.code(), Some(3));

    let again = dir.path().join("r2.json");
    run(&["verify", "--only", "SYLVESTER,NEG-COMMUTE", "--samples", "3", "--report", again.to_str().unwrap()]);
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(strip(&first), strip(&fs::read_to_string(&again).unwrap()));
}

#[test]
fn failing_identity_exits_1() {
    let o = run(&["verify", "--only", "BERENSTEIN", "--sizes", "3", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn list_identities_is_tab_separated() {
    let o = run(&["list-identities"]);
    let s = stdout(&o);
    assert!(s.lines().count() >= 30);
    assert!(s.lines().all(|l| l.split('\t').count() == 3));
    assert!(s.lines().any(|l| l.starts_with("SYLVESTER\t")));
}
