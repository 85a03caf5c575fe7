use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn depthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_chain_then_measure_and_extract() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("chain.json");
    let file = file.to_str().unwrap();
    let out = depthlab(&["gen", "--family", "chain", "--params", "l=4,k=2", "--out", file]);
    assert!(out.status.success());
    let art: Value = serde_json::from_str(&fs::read_to_string(file).unwrap()).unwrap();
    // C(4+2-1, 2) vertices
    assert_eq!(art["n"], 10);
    assert_eq!(art["ham_path"].as_array().unwrap().len(), 10);
    assert_eq!(art["intervals"].as_array().unwrap().len(), 10);

    let td2 = stdout_json(&depthlab(&["measure", "--input", file, "--measure", "td2"]));
    assert_eq!(td2["measure"], "td2");
    assert_eq!(td2["value"], 3);
    assert!(td2["certificate"].is_object());

    let pw = stdout_json(&depthlab(&["measure", "--input", file, "--measure", "pw"]));
    assert_eq!(pw["value"], 2);
    assert_eq!(pw["certificate"]["layout"].as_array().unwrap().len(), 10);

    let ex = stdout_json(&depthlab(&["extract", "--input", file, "--k", "2"]));
    assert_eq!(ex["input_order"], 10);
    assert_eq!(ex["guarantee_met"], true);
    let order = ex["order"].as_u64().unwrap();
    assert!((2 * order).pow(2) >= 10);
    assert_eq!(ex["path"].as_array().unwrap().len() as u64, order);
}

#[test]
fn measure_text_input() {
    let dir = TempDir::new().unwrap();
    // C5 plus a chord; deleting any vertex leaves td 3
    let file = write(&dir, "g.txt", "c five cycle\np 5 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\ne 0 2\n");
    let td = stdout_json(&depthlab(&["measure", "--input", &file, "--measure", "td"]));
    assert_eq!(td["value"], 4);
    let tds = stdout_json(&depthlab(&["measure", "--input", &file, "--measure", "tds", "--set", "0"]));
    assert_eq!(tds["value"], 1);
    let missing = depthlab(&["measure", "--input", &file, "--measure", "tds"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn forest_of_two_triangles() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", "p 5 6\ne 0 1\ne 1 2\ne 0 2\ne 0 3\ne 3 4\ne 0 4\n");
    let f = stdout_json(&depthlab(&["forest", "--input", &file]));
    assert_eq!(f["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(f["cuts"], serde_json::json!([0]));
    assert_eq!(f["diameter"], 2);
}

#[test]
fn verify_exit_codes() {
    let ok = depthlab(&["verify", "p4p5", "--params", "n_max=4", "--format", "json"]);
    let report = stdout_json(&ok);
    assert_eq!(report["suite"], "p4p5");
    assert_eq!(report["summary"]["failed"], 0);

    let unknown = depthlab(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad_param = depthlab(&["verify", "diam", "--params", "n_max=lots"]);
    assert_eq!(bad_param.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "s-core", "--params", "n_max=4,random=30,seed=9", "--format", "csv", "--all"];
    let a = depthlab(&args);
    let b = depthlab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bounds_csv() {
    let out = depthlab(&["bounds", "table", "--k-max", "3", "--t-max", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,t,f,g_lower,g_upper,closed_form,even_t"));
    assert_eq!(text.lines().count(), 1 + 3 * 5);
    // f(3,6) = f(3,4) + f(2,6) + 1 = 5 + 5 + 1
    assert!(text.lines().any(|l| l.starts_with("3,6,11,")));
}

#[test]
fn bad_input_is_an_error() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.txt", "p 3 1\ne 0 7\n");
    let out = depthlab(&["measure", "--input", &file, "--measure", "td"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = depthlab(&["gen", "--family", "ladder", "--params", "t=0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = depthlab(&["measure", "--input", "/nonexistent/g.txt", "--measure", "td"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extract_rejects_a_non_path() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", "p 4 2\ne 0 1\ne 2 3\n");
    let out = depthlab(&["extract", "--input", &file, "--path", "0,1,2,3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
