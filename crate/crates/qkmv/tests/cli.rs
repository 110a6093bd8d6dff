//! End-to-end checks of the `qkmv` binary: exit codes, report determinism,
//! and the report schema.

use std::path::PathBuf;
use std::process::Command;

fn qkmv() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qkmv"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("qkmv-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn cybe_suite_exits_zero_and_is_byte_identical() {
    let a = tmp("a.json");
    let b = tmp("b.json");
    for path in [&a, &b] {
        let status = qkmv()
            .args(["cybe", "--out"])
            .arg(path)
            .status()
            .expect("binary runs");
        assert_eq!(status.code(), Some(0));
    }
    let ba = std::fs::read(&a).unwrap();
    let bb = std::fs::read(&b).unwrap();
    assert_eq!(ba, bb, "reports differ between runs");
    let v: serde_json::Value = serde_json::from_slice(&ba).unwrap();
    assert_eq!(v["suite"], "cybe");
    assert!(v["checks"].as_array().unwrap().len() >= 13);
    for c in v["checks"].as_array().unwrap() {
        assert!(c.get("id").is_some());
        assert!(c.get("anchor").is_some());
        assert!(c.get("status").is_some());
        assert!(c.get("defect").is_some());
    }
    assert_eq!(v["totals"]["fail"], 0);
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn usage_errors_exit_two_without_report() {
    let out = tmp("usage.json");
    // invalid rank for the series
    let status = qkmv()
        .args(["relations", "--series", "C", "--rank", "1", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    assert!(!out.exists(), "usage error must not write a report");
    // evaluation mode is restricted to the A series
    let status = qkmv()
        .args(["relations", "--series", "B", "--mode", "evaluation"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    // unknown suite
    let status = qkmv().args(["frobnicate"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn text_format_prints_per_check_lines() {
    let out = qkmv()
        .args(["cybe", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS cybe.")));
    assert!(text.contains("totals: pass="));
}

#[test]
fn worker_count_does_not_change_the_report() {
    let a = tmp("w1.json");
    let b = tmp("w3.json");
    for (path, workers) in [(&a, "1"), (&b, "3")] {
        let status = qkmv()
            .env("QKMV_WORKERS", workers)
            .args(["relations", "--series", "A", "--rank", "3", "--out"])
            .arg(path)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn relations_suite_c2_via_binary() {
    let out = qkmv()
        .args(["relations", "--series", "C", "--rank", "2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["totals"]["fail"], 0);
    assert_eq!(v["filters"]["series"], "C");
}
