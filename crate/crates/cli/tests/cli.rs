use std::process::{Command, Output};

use selfdual::tables::lift_row;

fn selfdual(store: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual"))
        .args(args)
        .env("SELFDUAL_STORE", store)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn graph2code_cube_reports_extended_hamming() {
    let dir = tempfile::tempdir().unwrap();
    let out = selfdual(dir.path(), &["--json", "graph2code", "cube"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["report"]["n"], 8);
    assert_eq!(v["report"]["d"], 4);
    assert_eq!(v["report"]["distribution"]["4"], 14);
    assert!(dir.path().join("cube.json").exists());
}

#[test]
fn malformed_hex_is_reported_as_an_erratum() {
    let dir = tempfile::tempdir().unwrap();
    let out = selfdual(dir.path(), &["lift", "A2", lift_row("L8").unwrap().hex]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("37 digits"), "{err}");
    assert!(err.contains("--repair"), "{err}");
}

#[test]
fn random_lifts_depend_only_on_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--json", "lift", "A2", "--random", "--seed", "11"];
    let a = selfdual(dir.path(), &args);
    let b = selfdual(dir.path(), &args);
    assert!(a.status.success());
    assert_eq!(stdout_json(&a), stdout_json(&b));
    let stored = std::fs::read_to_string(dir.path().join("A2-seed11.json")).unwrap();
    assert!(stored.contains("\"seed\": 11"));
}

#[test]
fn even_weight_extension_vector_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = selfdual(dir.path(), &["extend", "K3", "1^{2} 0^{62}"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even weight"));
}

#[test]
fn reproduce_exit_code_tracks_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let out = selfdual(dir.path(), &["--json", "reproduce", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let rows = v["tables"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let k1 = rows.iter().find(|r| r["name"] == "K1").unwrap();
    assert_eq!(k1["status"], "mismatch");

    let out = selfdual(dir.path(), &["reproduce", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
