use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn outerspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_outerspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = outerspec(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_check_eig_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("bridged.g6");
    let o = outerspec(&["construct", "--family", "bridged-double-fan", "--q", "6", "--out", path(&g6)]);
    assert!(o.status.success());
    let check = json(&["check", "--in", path(&g6), "--witness"]);
    assert_eq!(check[0]["outerplanar"], true);
    assert_eq!(check[0]["certificate"]["order"].as_array().unwrap().len(), 12);
    let eig = json(&["eig", "--in", path(&g6), "--k", "2", "--vector"]);
    assert!((eig["lambda"].as_f64().unwrap() - 3.153017929456822).abs() < 1e-9);
    assert_eq!(eig["simple"], true);
    assert_eq!(eig["vector"].as_array().unwrap().len(), 12);
}

#[test]
fn check_reports_minor_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    let check = json(&["check", "--in", path(&g6), "--witness"]);
    assert_eq!(check[0]["outerplanar"], false);
    assert_eq!(check[0]["certificate"]["witness"]["kind"], "K4");
}

#[test]
fn series_prints_exact_fractions_and_enclosure() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("fan.g6");
    outerspec(&["construct", "--family", "bridged-double-fan", "--q", "20", "--out", path(&g6)]);
    let s = json(&["series", "--in", path(&g6), "--hubs", "0,1", "--mode", "symmetric", "--order", "6"]);
    let a: Vec<&str> = s["coefficients"]["a"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(a.len(), 7);
    assert_eq!(a[0], "19");
    let root = &s["root"];
    let (lo, hi) = (root["lo"].as_f64().unwrap(), root["hi"].as_f64().unwrap());
    let eig = json(&["eig", "--in", path(&g6), "--k", "2"]);
    let lambda = eig["lambda"].as_f64().unwrap();
    assert!(lo <= lambda && lambda <= hi, "{lo} {lambda} {hi}");
}

#[test]
fn enumerate_counts_connected_graphs() {
    let o = outerspec(&["enumerate", "--n", "6", "--connected"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 46);
    let twelve = outerspec(&["enumerate", "--n", "12"]);
    assert!(!twelve.status.success());
}

#[test]
fn extremal_stops_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.jsonl");
    let o = outerspec(&["extremal", "--n", "9", "--k", "2", "--max-parents", "5", "--checkpoint", path(&ck)]);
    assert_eq!(o.status.code(), Some(3));
    let resumed = json(&["extremal", "--n", "9", "--k", "2", "--checkpoint", path(&ck), "--resume"]);
    let direct = json(&["extremal", "--n", "9", "--k", "2"]);
    assert!((resumed["best"].as_f64().unwrap() - direct["best"].as_f64().unwrap()).abs() < 1e-12);
    assert_eq!(resumed["argmax"], direct["argmax"]);
}

#[test]
fn conjectures_table() {
    let r = json(&["conjectures", "--kind", "even", "--max-n", "14"]);
    assert_eq!(r["rows"][0]["n"], 14);
    assert_eq!(r["rows"][0]["status"]["status"], "CONSISTENT");
}

#[test]
fn verify_paper_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let ok = outerspec(&["verify-paper", "--group", "split-tables", "--out", path(dir.path())]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("## split-tables"));
    let rendered = json(&["report", "--in", path(&dir.path().join("matrix.json"))]);
    assert!(rendered["checks"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
    let md = outerspec(&["report", "--in", path(&dir.path().join("matrix.json")), "--format", "markdown"]);
    assert!(stdout(&md).starts_with("# Verification matrix"));

    let config = dir.path().join("run.toml");
    std::fs::write(&config, "[walk_moments]\nqs = [5]\n").unwrap();
    let failing = outerspec(&["verify-paper", "--config", path(&config), "--group", "walk-moments"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&failing.stderr).contains("FAIL walk-moments/q=5"));

    let bad = outerspec(&["verify-paper", "--group", "nope"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn print_config_round_trips() {
    let o = outerspec(&["--seed", "9", "--budget", "large", "verify-paper", "--print-config"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("budget = \"large\""));
    assert!(text.contains("seed = 9"));
}
