//! End-to-end smoke tests for the `bilap` binary: exit codes, artifact
//! layout, and byte-level determinism of the outputs.

use std::path::Path;
use std::process::Command;

fn bilap() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bilap"))
}

fn read_json(path: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}

#[test]
fn scan_writes_record_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let status = bilap()
        .args(["scan", "--alpha", "0.5", "--grid-n", "300", "--out"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let rec = read_json(&dir.path().join("scan.json"));
    assert_eq!(rec["experiment"], "scan");
    let hash = rec["config_hash"].as_str().unwrap();
    assert_eq!(hash.len(), 16);
    assert!(hash.chars().all(|c| c.is_ascii_hexdigit()));
    assert!(rec["assertions"].as_array().unwrap().iter().all(|a| a["pass"] == true));
    assert!(dir.path().join("scan.csv").is_file());
    assert!(dir.path().join("scan_constants.json").is_file());
}

#[test]
fn out_of_range_alpha_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    for bad in ["0.0", "1.0", "-0.3"] {
        let status = bilap()
            .args(["minimizer", "--alpha", bad, "--x", "0.25", "--out"])
            .arg(dir.path())
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(2), "alpha = {bad}");
    }
    // clap-level parse failure uses the same code
    let status = bilap().args(["minimizer", "--alpha"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn identical_configs_produce_identical_bytes() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let status = bilap()
            .args(["minimizer", "--alpha", "0.5", "--x", "0.25", "--format", "svg", "--out"])
            .arg(dir.path())
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    let mut names: Vec<String> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        let left = std::fs::read(a.path().join(&name)).unwrap();
        let right = std::fs::read(b.path().join(&name)).unwrap();
        assert_eq!(left, right, "{name} differs between runs");
    }
}

#[test]
fn out_root_falls_back_to_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let status = bilap()
        .args(["minimizer", "--alpha", "0.5", "--x", "0.25"])
        .env("BILAP_OUT", dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.path().join("minimizer.json").is_file());
}

#[test]
fn report_all_empty_suite_writes_summary() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(&suite, "[]").unwrap();
    let status = bilap()
        .args(["report-all", "--suite"])
        .arg(&suite)
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.path().join("summary.json").is_file());
    assert!(dir.path().join("summary.txt").is_file());
}

#[test]
fn report_all_rejects_nested_suite() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(&suite, r#"[["report-all"]]"#).unwrap();
    let status = bilap()
        .args(["report-all", "--suite"])
        .arg(&suite)
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn suite_runs_items_into_numbered_dirs() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(
        &suite,
        r#"[["minimizer", "--alpha", "0.5", "--x", "0.25"],
            ["minimizer", "--alpha", "0.3", "--x", "0.5"]]"#,
    )
    .unwrap();
    let status = bilap()
        .args(["report-all", "--suite"])
        .arg(&suite)
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.path().join("item-00-minimizer/minimizer.json").is_file());
    assert!(dir.path().join("item-01-minimizer/minimizer.json").is_file());
    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["items"].as_array().unwrap().len(), 2);
}
