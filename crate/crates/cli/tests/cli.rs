use std::path::PathBuf;
use std::process::{Command, Output};

use master_kernels::catalog::{self, records_from_csv, records_from_json};
use master_kernels_cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, JOBS_ENV};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_master-kernels")).args(args).env_remove(JOBS_ENV).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("master-kernels").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("master-kernels-{}-{name}", std::process::id()))
}

#[test]
fn passing_verification_exits_zero() {
    let out = scratch("pass.json");
    assert_eq!(code(&["verify", "--case", "X1", "--set", "p=1.5", "--out", out.to_str().unwrap()]), EXIT_PASS);
    let _ = std::fs::remove_file(out);
}

#[test]
fn failing_verification_exits_one() {
    let out = bin(&["verify", "--case", "X1", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let records = records_from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(records.len(), 1);
    assert!(!records[0].pass);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["verify"],
        &["verify", "--case", "NOPE"],
        &["verify", "--case", "X1", "--set", "p=2"],
        &["verify", "--case", "X1", "--set", "p"],
        &["verify", "--case", "X1", "--set", "zz=1"],
        &["verify", "--all", "--set", "p=0.5"],
        &["verify", "--all", "--case", "X1"],
        &["verify", "--case", "X1", "--tol", "0"],
        &["sweep", "--case", "X1", "--param", "p"],
        &["sweep", "--case", "X1", "--param", "p", "--range", "1:0:0.5"],
        &["sweep", "--case", "X1", "--case", "C7", "--param", "p", "--range", "0:1:0.5"],
        &["suite", "--set", "p=0.5"],
        &["list", "--jobs", "0"],
    ] {
        assert_eq!(code(args), EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn usage_errors_are_reported_on_stderr() {
    let out = bin(&["verify", "--case", "NOPE"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("NOPE"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bin(&["--help"]).status.code(), Some(EXIT_PASS));
    assert_eq!(bin(&["--version"]).status.code(), Some(EXIT_PASS));
}

#[test]
fn out_file_round_trips_as_json_and_csv() {
    let json = scratch("out.json");
    let csv = scratch("out.csv");
    let args = ["verify", "--case", "X1", "GAUSS-COS", "--out"];
    let with = |path: &PathBuf, extra: &[&str]| {
        let mut a: Vec<&str> = args.to_vec();
        a.push(path.to_str().unwrap());
        a.extend_from_slice(extra);
        code(&a)
    };
    assert_eq!(with(&json, &[]), EXIT_PASS);
    assert_eq!(with(&csv, &["--format", "csv"]), EXIT_PASS);
    let from_json = records_from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let from_csv = records_from_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    for recs in [&from_json, &from_csv] {
        let cases: Vec<&str> = recs.iter().map(|r| r.case.as_str()).collect();
        assert_eq!(cases, ["X1", "GAUSS-COS"]);
        assert!(recs.iter().all(|r| r.pass));
    }
    for (a, b) in from_json.iter().zip(&from_csv) {
        assert_eq!((a.lhs_value(), a.rhs_value(), &a.params), (b.lhs_value(), b.rhs_value(), &b.params));
    }
    let _ = std::fs::remove_file(json);
    let _ = std::fs::remove_file(csv);
}

#[test]
fn suite_covers_the_catalog() {
    let out = bin(&["suite", "--format", "json"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let records = records_from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let ids: Vec<&str> = catalog::entries().iter().map(|e| e.id).collect();
    let cases: Vec<&str> = records.iter().map(|r| r.case.as_str()).collect();
    assert_eq!(cases, ids);
}

#[test]
fn verify_all_matches_suite() {
    let out = bin(&["verify", "--all", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let records = records_from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(records.len(), catalog::entries().len());
}

#[test]
fn sweep_writes_one_row_per_admissible_point() {
    let out = bin(&["sweep", "--case", "X1", "--param", "p", "--range", "0.5:3:0.5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("p,"));
    // 1, 2 and 3 are excluded from the window.
    assert_eq!(lines.count(), 3);
}

#[test]
fn jobs_come_from_the_environment() {
    let with_env = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_master-kernels"))
            .args(["verify", "--case", "X1", "C7", "--format", "json"])
            .env(JOBS_ENV, v)
            .output()
            .unwrap()
    };
    let one = with_env("1");
    let four = with_env("4");
    assert_eq!(one.status.code(), Some(EXIT_PASS));
    assert_eq!(four.status.code(), Some(EXIT_PASS));
    let strip = |o: &Output| {
        let mut r = records_from_json(&String::from_utf8(o.stdout.clone()).unwrap()).unwrap();
        r.iter_mut().for_each(|r| r.ms = 0.0);
        r
    };
    assert_eq!(strip(&one), strip(&four));
    assert_eq!(with_env("abc").status.code(), Some(EXIT_USAGE));
    assert_eq!(with_env("0").status.code(), Some(EXIT_USAGE));
}

#[test]
fn list_and_export_describe_every_entry() {
    let out = bin(&["list"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let text = String::from_utf8(out.stdout).unwrap();
    for e in catalog::entries() {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(e.id)), "{} missing", e.id);
    }
    let out = bin(&["export"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), catalog::entries().len());
    assert_eq!(v[0]["id"], "FCOSH");
}
