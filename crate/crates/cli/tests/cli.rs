use std::path::Path;
use std::process::{Command, Output};

use quartinv_core::fixtures::EMBEDDED_MATRICES;

fn quartinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartinv")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_fixture(dir: &Path, text: &str) -> String {
    let path = dir.join("matrices.txt");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

/// Flips the entry in `row`, `col` of the named matrix.
fn flip_bit(text: &str, name: &str, row: usize, col: usize) -> String {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.iter().position(|l| l.split_whitespace().nth(1) == Some(name)).expect("matrix present");
    let mut out: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
    let mut entries: Vec<&str> = lines[header + 1 + row].split_whitespace().collect();
    entries[col] = if entries[col] == "0" { "1" } else { "0" };
    out[header + 1 + row] = entries.join(" ");
    out.join("\n") + "\n"
}

#[test]
fn verification_passes_on_bundled_fixtures() {
    let out = quartinv(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failed"));
    assert!(text.contains("SKIP  feasibility.infeasible"));
}

#[test]
fn verification_json_is_byte_identical_across_runs() {
    let first = quartinv(&["verify-paper", "--json"]);
    let second = quartinv(&["verify-paper", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    for key in ["version", "fixture_sha256", "checks", "summary"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["ms"] == 0));
    let passed = checks.iter().filter(|c| c["status"] == "pass").count();
    assert_eq!(doc["summary"]["pass"], passed);
    assert_eq!(doc["summary"]["fail"], 0);
}

#[test]
fn out_file_matches_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = quartinv(&["verify-paper", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
}

#[test]
fn reproduce_reports_eighteen_secondaries() {
    let out = quartinv(&["reproduce", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let secondaries = doc["artifacts"]["secondaries"].as_array().expect("secondaries");
    let degrees: Vec<u64> = secondaries.iter().map(|g| g["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, [0, 4, 5, 5, 6, 7, 8, 9, 9, 10, 10, 11, 12, 13, 14, 14, 15, 19]);
}

#[test]
fn corrupted_fixture_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = EMBEDDED_MATRICES.replacen("MATRIX DW_A 7x7", "MATRIX DW_A 7x9", 1);
    let path = write_fixture(dir.path(), &bad);
    let out = quartinv(&["verify-paper", "--fixtures", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn missing_fixture_exits_with_two() {
    let out = quartinv(&["reproduce", "--fixtures", "/nonexistent/matrices.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flipped_bit_in_module_matrix_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["DW_A", "DW_B"] {
        let path = write_fixture(dir.path(), &flip_bit(EMBEDDED_MATRICES, name, 1, 0));
        let out = quartinv(&["verify-paper", "--json", "--fixtures", &path]);
        assert_eq!(out.status.code(), Some(1), "flipping {name}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let perm = doc["checks"].as_array().unwrap().iter().find(|c| c["id"] == "group.permutations").unwrap();
        assert_eq!(perm["status"], "fail", "flipping {name}");
    }
}

#[test]
fn fixture_digest_tracks_the_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), &format!("{EMBEDDED_MATRICES}\n"));
    let bundled: serde_json::Value = serde_json::from_slice(&quartinv(&["verify-paper", "--json"]).stdout).unwrap();
    let copy: serde_json::Value =
        serde_json::from_slice(&quartinv(&["verify-paper", "--json", "--fixtures", &path]).stdout).unwrap();
    assert_ne!(bundled["fixture_sha256"], copy["fixture_sha256"]);
    assert_eq!(bundled["summary"], copy["summary"]);
}

#[test]
fn hilbert_series_for_the_full_group() {
    let out = quartinv(&["hilbert", "--group", "G", "--module", "Wprime", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["hsop_degrees"], serde_json::json!([2, 3, 3, 4, 6, 7]));
    assert_eq!(
        doc["numerator"],
        "1 + t^4 + 2*t^5 + t^6 + t^7 + t^8 + 2*t^9 + 2*t^10 + t^11 + t^12 + t^13 + 2*t^14 + t^15 + t^19"
    );
    let coeffs: Vec<&str> = doc["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs.len(), 20);
    assert_eq!(&coeffs[..8], ["1", "0", "1", "2", "3", "4", "8", "10"]);
}

#[test]
fn hilbert_series_for_the_sylow_subgroup() {
    let out = quartinv(&["hilbert", "--group", "D", "--module", "Wprime"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("over hsop degrees {1,1,2,2,2,4}: (1 + 2*t^3 + t^6)/"));
}

#[test]
fn hilbert_series_for_the_trivial_group() {
    let out = quartinv(&["hilbert", "--group", "trivial", "--module", "W"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("series: (1)/((1-t)*(1-t)*(1-t)*(1-t)*(1-t)*(1-t)*(1-t))\n"));
}

#[test]
fn unknown_group_is_rejected() {
    let out = quartinv(&["hilbert", "--group", "Q", "--module", "W"]);
    assert_eq!(out.status.code(), Some(2));
}
