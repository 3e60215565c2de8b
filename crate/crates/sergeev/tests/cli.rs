//! Contract tests for the command-line front end: exit codes, reproducible
//! output, and the element constructors.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sergeev"))
}

#[test]
fn verify_pass_exits_zero() {
    let out = bin()
        .args(["verify", "--d", "2", "--l", "3", "--f", "1,0,0,0", "--suite", "main-theorem"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    assert_eq!(report["schema"], 1);
}

#[test]
fn verify_failure_exits_one() {
    // the transposition-square sub-check contradicts direct computation at
    // odd level, so the cxcycles suite reports a failure there
    let out = bin()
        .args(["verify", "--d", "4", "--l", "3", "--suite", "cxcycles"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_error_exits_two() {
    let out = bin()
        .args(["verify", "--d", "2", "--l", "3", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // mixed-parity f violates the polynomial constraint
    let out = bin()
        .args(["verify", "--d", "2", "--l", "3", "--f", "1,1,0,0", "--suite", "signs"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_config_gives_byte_identical_output() {
    let run = || {
        bin()
            .args(["verify", "--d", "3", "--l", "2", "--suite", "cxcycles", "--seed", "42"])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn element_cxcycle_example() {
    // l = 2: (1 2)^{(0)} = (x_1+x_2)s + (x_1−x_2)s c_1 c_2 — four terms
    let out = bin()
        .args(["element", "--d", "2", "--l", "2", "--kind", "cxcycle", "--A", "1,2", "--r", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["algebra"], "graded");
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn element_jm_vanishes_at_level() {
    let out = bin()
        .args(["element", "--d", "2", "--l", "3", "--kind", "jm", "--i", "1", "--k", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn element_p_symmetric_squares() {
    let out = bin()
        .args(["element", "--d", "2", "--l", "3", "--kind", "p", "--mu", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["algebra"], "sergeev");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    // x̂_1^2 + x̂_2^2
    assert_eq!(terms[0]["e"], serde_json::json!([0, 2]));
    assert_eq!(terms[1]["e"], serde_json::json!([2, 0]));
}

#[test]
fn element_rejects_bad_indexing_set() {
    let out = bin()
        .args(["element", "--d", "2", "--l", "3", "--kind", "m", "--mu", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn center_reports() {
    let out = bin()
        .args(["center", "--d", "1", "--l", "3", "--algebra", "sergeev", "--parity", "even"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["ranks"]["even_center"], 2);
    assert_eq!(v["pass"], true);

    let out = bin()
        .args(["center", "--d", "2", "--l", "2", "--algebra", "graded", "--parity", "even"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["ranks"]["even_center"], 2);
    assert!(v["strictly_larger_than_z_family"].is_boolean());
}

#[test]
fn out_file_is_written() {
    let dir = std::env::temp_dir().join(format!("sergeev-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args([
            "verify", "--d", "2", "--l", "3", "--suite", "signs",
            "--out", path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["pass"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}
