use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn nhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nhom")).args(args).output().expect("spawn nhom")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = nhom(&all);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nhom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn hilbert_parafermion_two() {
    let o = nhom(&["hilbert", "--algebra", "parafermion", "--D", "2", "--max-degree", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("P_A: 1,2,4,6,9,12,16,20"), "{}", stdout(&o));
}

#[test]
fn chi_parafermion_three_is_refuted() {
    let o = nhom(&["chi", "--algebra", "parafermion", "--D", "3", "--max-degree", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("χ = 1 + 6t^5"), "{out}");
    assert!(out.contains("refuted at 5"), "{out}");
}

#[test]
fn plactic_normal_form_rows() {
    let o = nhom(&["plactic", "normal-form", "121", "--D", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("1 1\n2\n"), "{}", stdout(&o));
    let v = json(&["plactic", "normal-form", "3121"]);
    assert_eq!(v["shape"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["readingWord"], "3211");
}

#[test]
fn json_envelope() {
    let v = json(&["hilbert", "--algebra", "plactic", "--D", "2", "--max-degree", "4"]);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["command"], "hilbert");
    assert_eq!(v["algebra"]["name"], "plactic");
    assert_eq!(v["algebra"]["relationDegree"], 3);
    assert_eq!(v["maxDegree"], 4);
    assert_eq!(v["poincare"], serde_json::json!([1, 2, 4, 6, 9]));
}

#[test]
fn json_is_deterministic_and_independent_of_jobs() {
    for cmd in ["koszul", "homology", "dual", "checks"] {
        let base = ["--algebra", "plactic", "--D", "2", "--max-degree", "5", "--format", "json"];
        let mut one = vec![cmd, "--jobs", "1"];
        one.extend(base);
        let mut four = vec![cmd, "--jobs", "4"];
        four.extend(base);
        let a = nhom(&one);
        let b = nhom(&four);
        let c = nhom(&four);
        assert!(a.status.success(), "{cmd}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        assert_eq!(b.stdout, c.stdout, "{cmd}");
    }
}

#[test]
fn koszul_verdicts() {
    let v = json(&["koszul", "--algebra", "parafermion", "--D", "2", "--max-degree", "6"]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["verdict"]["status"], "acyclic");
    assert_eq!(v["verdict"]["upTo"], 6);
    let v = json(&["koszul", "--algebra", "plactic", "--D", "3", "--max-degree", "5"]);
    assert_eq!(v["verdict"]["status"], "nonzeroHomology");
    assert_eq!(v["verdict"]["degree"], 5);
    let top = &v["slices"][4]["positions"];
    let homology: Vec<u64> = top.as_array().unwrap().iter().map(|p| p["homology"].as_u64().unwrap()).collect();
    assert_eq!(homology, [0, 0, 6, 0]);
}

#[test]
fn checks_pass_for_catalog() {
    for args in [
        vec!["checks", "--algebra", "parafermion", "--D", "2"],
        vec!["checks", "--algebra", "plactic", "--D", "2", "--max-degree", "5"],
        vec!["checks", "--algebra", "as", "--q", "-1/2", "--r", "1", "--max-degree", "5"],
    ] {
        let o = nhom(&args);
        assert!(o.status.success(), "{args:?}: {}{}", stdout(&o), stderr(&o));
        assert!(!stdout(&o).contains("[FAIL]"));
    }
}

#[test]
fn relation_file_matches_catalog() {
    let path = temp_file("knuth.rel", "# plactic, two letters\nD=2 N=3\n1*121 - 1*211\n1*212 - 1*221\n");
    let a = json(&["hilbert", "--file", path.to_str().unwrap(), "--max-degree", "6"]);
    let b = json(&["hilbert", "--algebra", "plactic", "--D", "2", "--max-degree", "6"]);
    assert_eq!(a["poincare"], b["poincare"]);
    assert_eq!(a["algebra"]["file"], path.to_str().unwrap());
}

#[test]
fn header_only_file_is_free() {
    let path = temp_file("free.rel", "D=2 N=3\n");
    let v = json(&["hilbert", "--file", path.to_str().unwrap(), "--max-degree", "5"]);
    assert_eq!(v["poincare"], serde_json::json!([1, 2, 4, 8, 16, 32]));
}

#[test]
fn parse_error_is_located() {
    let path = temp_file("bad.rel", "D=2 N=3\n1*121 - 1*131\n");
    let o = nhom(&["hilbert", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2, column 11"), "{err}");
    assert!(err.contains("131"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let path = temp_file("dup.rel", "D=2 N=3\n");
    let cases: [&[&str]; 5] = [
        &["hilbert"],
        &["hilbert", "--algebra", "plactic"],
        &["hilbert", "--algebra", "plactic", "--D", "2", "--file", path.to_str().unwrap()],
        &["hilbert", "--algebra", "as", "--q", "1"],
        &["hilbert", "--file", "/nonexistent/nhom.rel"],
    ];
    for args in cases {
        let o = nhom(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error"), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn memory_guard_refuses_large_degrees() {
    let o = nhom(&["hilbert", "--algebra", "parafermion", "--D", "3", "--max-degree", "30"]);
    assert_eq!(o.status.code(), Some(2));
    let o = nhom(&["hilbert", "--algebra", "parafermion", "--D", "3", "--max-degree", "4", "--max-words", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plactic_count_agrees() {
    let v = json(&["plactic", "count", "--D", "3", "--max-degree", "5"]);
    assert_eq!(v["ok"], true);
}
