//! Command-line contract: output shape, exit codes and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nilreal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilreal")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write scratch file");
    path
}

#[test]
fn catalog_list_has_all_rows() {
    let out = nilreal(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 27);
    let json: serde_json::Value = serde_json::from_slice(&nilreal(&["--json", "catalog", "list"]).stdout).unwrap();
    assert_eq!(json.as_array().map(Vec::len), Some(27));
}

#[test]
fn catalog_show_prints_tensor_and_brackets() {
    let out = nilreal(&["catalog", "show", "2", "3-bis"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let tensor = text.lines().find(|l| l.starts_with("tensor")).expect("tensor line");
    assert_eq!(tensor.matches("e(").count(), 6);
    assert!(text.contains("[e1,e3]=e8"));
    assert!(text.contains("t+u"));
}

#[test]
fn unknown_row_is_a_usage_error() {
    let out = nilreal(&["catalog", "show", "1", "99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown catalog row"));
    assert_eq!(nilreal(&[]).status.code(), Some(2));
    assert_eq!(nilreal(&["verify", "--table", "9"]).status.code(), Some(2));
}

#[test]
fn single_row_verification() {
    let out = nilreal(&["--json", "verify", "--table", "2", "--row", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["report_version"], 1);
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["table"], 2);
    assert_eq!(rows[0]["row"], "1");
    assert!(rows[0]["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn full_verification_is_deterministic() {
    let first = nilreal(&["--json", "verify", "tables"]);
    assert_eq!(first.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(json["rows"].as_array().map(Vec::len), Some(27));
    let second = nilreal(&["--json", "verify", "tables"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn analyze_matches_catalog_row() {
    let out = nilreal(&["analyze", "--expr", "e148+e157+e238+e267+e347", "--signature", "6,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("matches") && l.ends_with("1:3")));
    assert!(text.contains("sl2R+t"));
}

#[test]
fn degenerate_tensor_names_abelian_factor() {
    let out = nilreal(&["analyze", "--expr", "e127+e348", "--signature", "6,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("abelian factor of dimension 2"));
}

#[test]
fn unsupported_signature_is_rejected() {
    let out = nilreal(&["classify-pencil", "--table", "1", "--row", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dualize_then_classify_pencil() {
    let dual = nilreal(&["--json", "dualize", "--table", "3", "--row", "1"]);
    assert_eq!(dual.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&dual.stdout).unwrap();
    assert_eq!((json["m"].as_u64(), json["n"].as_u64()), (Some(4), Some(2)));
    let path = scratch("dual_3_1.json", &stdout(&dual));
    let out = nilreal(&["--json", "classify-pencil", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let c: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(c["tag"], "DISC_POS");
    assert_eq!(c["label"], "beta_6_22(1)");
}

#[test]
fn triple_json_is_sparse_labels() {
    let out = nilreal(&["--json", "triple", "--table", "2", "--row", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["h", "e", "f"] {
        let entries = json["triple"][key].as_array().unwrap();
        assert!(!entries.is_empty());
        assert!(entries.iter().all(|s| s.as_str().is_some_and(|s| s.contains('='))));
    }
}

#[test]
fn lattice_automorphisms_of_reference_gram() {
    let gram = serde_json::json!({ "gram": nilreal::lataut::reference_gram() });
    let path = scratch("gram.json", &gram.to_string());
    let out = nilreal(&["--json", "lataut", path.to_str().unwrap(), "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["order"], 24);
    let bad = scratch("bad_gram.json", r#"{"gram": [[1, 2], [2, 1]]}"#);
    assert_eq!(nilreal(&["lataut", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn dump_graded_reports_degree_one_dimension() {
    let out = nilreal(&["dump-graded", "--signature", "4,4"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["cartan_type"], "D7");
    assert_eq!(json["piece_dims"]["1"], 24);
    assert_eq!(json["piece_dims"]["0"], 31);
}

#[test]
fn selftest_passes() {
    let out = nilreal(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
}
