use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use vertex_core::{Polynomial, SchurOperator};

fn vertex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vertex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn schur_terms_text() {
    let o = vertex(&["schur-terms", "--w", "1", "--order", "1", "--modes", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "f_1\n");
    let o = vertex(&["schur-terms", "--w", "0", "--order", "0"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn schur_terms_json_empty_and_round_trip() {
    let o = vertex(&["schur-terms", "--w", "9", "--order", "2", "--modes", "2", "--format", "json"]);
    assert_eq!(json(&o)["terms"], Value::Array(vec![]));

    let o = vertex(&["schur-terms", "--w", "-2", "--order", "4", "--format", "json"]);
    let op: SchurOperator = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(op.w, -2);
    let again = serde_json::to_string_pretty(&op).unwrap() + "\n";
    assert_eq!(again, stdout(&o));
}

#[test]
fn schur_terms_latex() {
    let o = vertex(&["schur-terms", "--w", "0", "--order", "2", "--modes", "1", "--format", "latex"]);
    assert_eq!(stdout(&o), "\\mathcal{S}_{0} = 1 + f_{1} \\left(g_{1}\\right)^{*}\n");
}

#[test]
fn enumerate_lists_pairs_in_order() {
    let o = vertex(&["enumerate", "--m", "2", "--w", "0", "--modes", "2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["count"], 2);
    assert_eq!(v["pairs"][0]["p"]["1"], 1);
    assert_eq!(v["pairs"][1]["q"]["2"], 1);
    let o = vertex(&["enumerate", "--m", "1", "--w", "-1"]);
    assert_eq!(stdout(&o), "# m=1 w=-1 K=2 count=1\n{\"p\":{},\"q\":{\"1\":1}}\n");
}

#[test]
fn matrix_element_examples() {
    let zero = r#"{"modes":2,"entries":[]}"#;
    let e1 = r#"{"modes":2,"entries":[[1,"1"]]}"#;
    let o = vertex(&["matrix-element", "--u", zero, "--v", zero, "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["coeffs"], serde_json::json!({"0": "1"}));
    assert_eq!(v["prefactor"]["kind"], "partial-sum");

    let o = vertex(&["matrix-element", "--u", e1, "--v", zero, "--order", "1", "--format", "json"]);
    assert_eq!(json(&o)["coeffs"], serde_json::json!({"0": "1", "1": "1"}));

    let o = vertex(&["matrix-element", "--u", e1, "--v", zero, "--order", "2"]);
    assert!(stdout(&o).starts_with("1 + z + 1/2 z^2\n# prefactor: partial sum E_2"));
}

#[test]
fn matrix_element_rejects_out_of_range_mode() {
    let o = vertex(&[
        "matrix-element",
        "--u",
        r#"{"modes":3,"entries":[[3,"1"]]}"#,
        "--v",
        r#"{"modes":2,"entries":[]}"#,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mode 3"));
}

#[test]
fn elementary_schur_outputs() {
    let o = vertex(&["elementary-schur", "--m", "2", "--modes", "2"]);
    assert_eq!(stdout(&o), "1/2 x_1^2 + x_2\n");
    let o = vertex(&["elementary-schur", "--m", "3", "--modes", "3", "--format", "json"]);
    let v = json(&o);
    let p: Polynomial = serde_json::from_value(v["terms"].clone()).unwrap();
    assert_eq!(p, vertex_core::elementary_schur(3, 3));
    assert_eq!(v["latex"], "x_{1} x_{2} + \\frac{1}{6} x_{1}^{3} + x_{3}");
}

#[test]
fn verify_passes_and_reports_each_identity() {
    let o = vertex(&["verify", "--seed", "1", "--trials", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_usage_errors() {
    let o = vertex(&["verify", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = vertex(&["verify", "--modes", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = vertex(&["verify", "--basis", r#"{"modes":2,"f":"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn basis_file_with_rotation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    fs::write(&path, r#"{"modes":2,"f":[["3/5","4/5"],["-4/5","3/5"]],"g":[[{"re":"0","im":"1"},"0"],["0","1"]]}"#)
        .unwrap();
    let o = vertex(&["verify", "--trials", "1", "--basis", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    fs::write(&path, r#"{"modes":2,"g":[["1","1"],["0","1"]]}"#).unwrap();
    let o = vertex(&["schur-terms", "--w", "1", "--basis", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not orthonormal at row 1"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let o = vertex(&["schur-terms", "--w", "1", "--order", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "f_1\n");
}
