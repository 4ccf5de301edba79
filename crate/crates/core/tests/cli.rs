use std::path::Path;
use std::process::{Command, Output};

use bondy::cli::{Format, SystemDocument};

fn bondy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bondy"))
        .args(args)
        .env("BONDY_WORKERS", "2")
        .output()
        .expect("run bondy")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const TEN_SET_EXAMPLE: &str = r#"{"ground": 7, "sets": [[1],[2],[3],[4],[1,2],[3,4],[1,2,5],[3,4,5],[1,2,5,6],[3,4,5,7]]}"#;

#[test]
fn check_reports_ten_set_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.json", TEN_SET_EXAMPLE);
    let o = bondy(&["check", &f, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bondy"], false);
    assert_eq!(v["inclusion_minimal"], true);
    assert_eq!(v["slender"], false);
    assert_eq!(v["lambda1"], serde_json::json!([1, 2, 3, 4, 6, 7]));
}

#[test]
fn bondy_verdict_is_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "empty.txt", "ground 3\n");
    let o = bondy(&["check", &f]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("Bondy") && !out.contains("non-Bondy"), "{out}");
    assert!(out.contains("{1,2,3}"), "{out}");
}

#[test]
fn malformed_documents_fail_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", r#"{"ground": 3, "sets": [[1], [1,4]]}"#);
    let o = bondy(&["check", &f]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("set #2 [1, 4]"), "{err}");
    let f = write(dir.path(), "dup.txt", "ground 2\n1\n-\n1\n");
    let o = bondy(&["check", &f]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("duplicate of set #1"));
}

#[test]
fn build_emits_checked_document() {
    let o = bondy(&["build", "--s", "7", "--t", "8"]);
    assert!(o.status.success());
    let doc = SystemDocument::parse(&stdout(&o), Format::Json).unwrap();
    assert_eq!(doc.ground, 7);
    assert_eq!(doc.sets.len(), 8);

    let o = bondy(&["build", "--s", "6", "--t", "12", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "ground 6\n-\n6\n1,2\n1,5\n2,3\n3,4\n4,5\n1,2,4\n1,3,4\n1,3,5\n2,3,5\n2,4,5\n"
    );

    let o = bondy(&["build", "--s", "6", "--t", "13"]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("t exceeds 2s"));
}

#[test]
fn build_output_revalidates_under_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let p = path.to_str().unwrap();
    let o = bondy(&["build", "--s", "11", "--t", "22", "--variant", "no-empty", "-o", p]);
    assert!(o.status.success());
    let o = bondy(&["check", p, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["slender"], true);
    assert_eq!(v["size"], 22);
    assert_eq!(v["contains_empty"], false);
}

#[test]
fn build_trace_envelope() {
    let o = bondy(&["build", "--s", "9", "--t", "12", "--trace"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["trace"]["rule"], "extend");
    assert_eq!(v["system"]["sets"].as_array().unwrap().len(), 12);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["spectrum", "--s", "5", "--json"],
        vec!["build", "--s", "10", "--t", "17", "--trace"],
        vec!["enumerate", "--s", "4", "--t", "6"],
    ] {
        assert_eq!(bondy(&args).stdout, bondy(&args).stdout, "{args:?}");
    }
}

#[test]
fn enumerate_and_spectrum() {
    let o = bondy(&["enumerate", "--s", "3", "--t", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class_count"], 8);
    let o = bondy(&["enumerate", "--s", "4", "--t", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 classes"));
    let o = bondy(&["spectrum", "--s", "5", "--kind", "slender", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([6, 7, 8, 10]));
    assert_eq!(v["provenance"], "exhaustive");
    let o = bondy(&["spectrum", "--s", "8", "--certify"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("constructive certificate"));
    let o = bondy(&["spectrum", "--s", "6"]);
    assert!(!o.status.success());
}

#[test]
fn bad_worker_env_is_an_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_bondy"))
        .args(["spectrum", "--s", "3"])
        .env("BONDY_WORKERS", "zero")
        .output()
        .unwrap();
    assert!(!o.status.success());
}

#[test]
fn complement_and_minimize() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.txt", "ground 2\n-\n1\n2\n");
    let o = bondy(&["complement", &f, "--format", "text"]);
    assert_eq!(stdout(&o), "ground 2\n1\n2\n1,2\n");

    let f = write(dir.path(), "p.txt", "ground 2\n-\n1\n2\n1,2\n");
    let out = dir.path().join("m.json");
    let o = bondy(&["minimize", &f, "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let doc = SystemDocument::parse(&std::fs::read_to_string(&out).unwrap(), Format::Json).unwrap();
    assert_eq!(doc.sets, vec![vec![], vec![1], vec![2]]);

    let f = write(dir.path(), "b.txt", "ground 2\n1\n");
    assert!(!bondy(&["minimize", &f]).status.success());
}
