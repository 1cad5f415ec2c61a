use std::io::Write;
use std::process::{Command, Output};

use splab::verify::SuiteReport;
use tempfile::NamedTempFile;

fn splab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn insert_prints_the_tableau() {
    let o = splab(&["insert", "7", "3", "9", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3 4 7'\n9\n");
    let o = splab(&["insert", "7,3,9,4"]);
    assert_eq!(stdout(&o), "3 4 7'\n9\n");
}

#[test]
fn insert_edge_cases() {
    let o = splab(&["insert"]);
    assert_eq!((code(&o), stdout(&o)), (0, String::new()));
    assert_eq!(code(&splab(&["insert", "x"])), 2);
    assert_eq!(code(&splab(&["insert", "0"])), 2);
}

#[test]
fn rectify_mixed_with_trace() {
    let f = file_with(". . . . 1\n. 2 4\n3\n");
    let path = f.path().to_str().unwrap();
    let o = splab(&["rectify-mixed", path]);
    assert_eq!((code(&o), stdout(&o)), (0, "1 2' 3'\n4\n".to_string()));
    let o = splab(&["rectify-mixed", path, "--trace"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "pass=1 coll=5 rule=5a letter=2 from=(2,3) to=(2,2)");
    assert_eq!(lines[1], "pass=1 coll=5 rule=5b letter=3 from=(3,3) to=(2,3)");
    assert!(out.ends_with("1 2' 3'\n4\n"));
    assert!(lines.iter().filter(|l| l.starts_with("pass=")).all(|l| l.contains(" rule=")));
}

#[test]
fn rectify_rejects_bad_input() {
    let f = file_with("1 2\n1 3\n");
    assert_eq!(code(&splab(&["rectify-mixed", f.path().to_str().unwrap()])), 2);
    let low_diagonal = file_with("1' 2\n");
    assert_eq!(code(&splab(&["rectify-mixed", low_diagonal.path().to_str().unwrap()])), 2);
    assert_eq!(code(&splab(&["rectify-mixed", "/nonexistent/file"])), 2);
}

#[test]
fn rectify_sw_and_standardize() {
    let f = file_with(". 1\n2'\n");
    let path = f.path().to_str().unwrap();
    let o = splab(&["rectify-sw", path]);
    assert_eq!((code(&o), stdout(&o)), (0, "1 2'\n".to_string()));
    let o = splab(&["standardize", path]);
    assert_eq!(stdout(&o), ". 1\n2\n");
}

#[test]
fn enumerate_counts() {
    let o = splab(&["enumerate", "2", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).split("\n\n").count(), 4);
    let o = splab(&["enumerate", "2", "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(code(&splab(&["enumerate", "2,2", "--n", "2"])), 2);
}

#[test]
fn expand_skew_prints_b() {
    let o = splab(&["expand-skew", "2,1/1"]);
    assert_eq!((code(&o), stdout(&o)), (0, "2\t1\n".to_string()));
    let o = splab(&["expand-skew", "3,1/1", "--check-sw"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.ends_with("\tPASS")));
}

#[test]
fn plactic_skew_lines() {
    let o = splab(&["plactic-skew", "2,1/1", "-n", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with("\t1")));
    // 1 and 1' both land in the class of 1 and there is no diagonal box
    let o = splab(&["plactic-skew", "2/1", "-n", "1"]);
    assert_eq!(stdout(&o), "1\t2\n");
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = splab(&["verify", "mixed-jdt", "--n", "3", "--len", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("tested 1092, failed 0"), "{}", stdout(&o));
    assert_eq!(code(&splab(&["verify", "bogus"])), 3);
    assert_eq!(code(&splab(&["verify", "cho", "--max-size", "0"])), 2);
    assert_eq!(code(&splab(&["verify"])), 2);
}

#[test]
fn verify_json_round_trips_and_ignores_jobs() {
    let run = |jobs: &str| {
        let o = splab(&["verify", "sw-count", "--max-size", "4", "--json", "--jobs", jobs]);
        assert_eq!(code(&o), 0);
        stdout(&o)
    };
    let one = run("1");
    let report: SuiteReport = serde_json::from_str(&one).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), one.trim_end());
    assert_eq!(report.failed, 0);
    assert_eq!(one, run("2"));
}

#[test]
fn unknown_command_is_usage_error() {
    assert_eq!(code(&splab(&["frobnicate"])), 2);
    assert_eq!(code(&splab(&["--help"])), 0);
}
