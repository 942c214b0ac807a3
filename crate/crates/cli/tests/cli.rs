//! End-to-end runs of the `krc` binary.

use std::process::{Command, Output};

fn krc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krc")).args(args).env_remove("KR_CACHE_DIR").output().expect("krc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn type_a_one_dimensional_sum() {
    let o = krc(&["onedimsum", "--type", "A", "--rank", "4", "--tensors", "1x1,1x1", "--lambda", "1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q\n");
    let o = krc(&["onedimsum", "--type", "A", "--rank", "4", "--tensors", "1x1,1x1", "--lambda", "2"]);
    assert_eq!(stdout(&o), "1\n");
    let o = krc(&["onedimsum", "--type", "A", "--rank", "4", "--tensors", "1x1,1x1", "--lambda", "1,1", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({"1": 1}));
}

#[test]
fn kr_graph_json_has_components_zero_edges_and_sigma() {
    let o = krc(&["kr", "--type", "D", "--rank", "5", "--r", "2", "--s", "2", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"], serde_json::json!([[0, 0, 0, 0, 0], [1, 1, 0, 0, 0], [2, 2, 0, 0, 0]]));
    assert!(v["edges"].as_array().unwrap().iter().any(|e| e["color"] == 0));
    assert_eq!(v["sigma"].as_array().unwrap().len(), v["vertices"].as_array().unwrap().len());
}

#[test]
fn dot_output_and_classical_crystals() {
    let o = krc(&["crystal", "--type", "C", "--rank", "3", "--lambda", "1,1", "--emit", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"[")).count(), 14);
}

#[test]
fn lusztig_and_frak_k() {
    let o = krc(&["lusztig", "--type", "A", "--rank", "2", "--lambda", "2,1", "--mu", "1,1,1"]);
    assert_eq!(stdout(&o), "q + q^2\n");
    let o = krc(&["lusztig", "--type", "C", "--rank", "2", "--lambda", "2", "--mu", "0,0"]);
    // Zero weight of the adjoint representation: the exponents 1, 3 of sp4.
    assert_eq!(stdout(&o), "q + q^3\n");
    let o = krc(&["lusztig", "--type", "D", "--rank", "5", "--tensors", "1x1", "--lambda", "1"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn rmatrix_and_split() {
    let o = krc(&["rmatrix", "--type", "C", "--rank", "3", "--tensors", "1x1,1x2", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v["entries"].as_array().unwrap().is_empty());
    let o = krc(&["split", "--type", "D", "--rank", "5", "--tensors", "2x1,1x1", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for row in v.as_array().unwrap() {
        assert_eq!(row["energy"], row["image_energy"]);
        assert_eq!(row["shape"], "1x1,1x1,1x1");
    }
}

#[test]
fn verify_exit_codes() {
    let o = krc(&["verify", "--suite", "golden", "--emit", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(krc(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(krc(&["kr", "--type", "X", "--rank", "4", "--r", "1", "--s", "1"]).status.code(), Some(2));
    assert_eq!(krc(&["onedimsum", "--type", "D", "--rank", "5", "--tensors", "1y1"]).status.code(), Some(2));
    assert_eq!(krc(&["onedimsum", "--type", "D", "--rank", "5", "--tensors", "1x1", "--emit", "dot"]).status.code(), Some(2));
    assert_eq!(krc(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cache_directory_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = krc(&["kr", "--type", "C", "--rank", "3", "--r", "1", "--s", "2", "--emit", "json", "--cache-dir", d]);
    assert!(dir.path().join("C1_3/1x2.krz").exists());
    let second = Command::new(env!("CARGO_BIN_EXE_krc"))
        .args(["kr", "--type", "C", "--rank", "3", "--r", "1", "--s", "2", "--emit", "json"])
        .env("KR_CACHE_DIR", d)
        .output()
        .unwrap();
    assert_eq!(stdout(&first), stdout(&second));
}
