use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_waldschmidt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("waldschmidt-cli-{}-{tag}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.join(name);
        fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

const CHAIN_D5: &str = r#"{"r":5,"negative_curves":["E_12","E_23","E_34","E_45","L_123"]}"#;

#[test]
fn computes_and_verifies_a_chain_configuration() {
    let s = Scratch::new("chain");
    let cfg = s.file("cfg.json", CHAIN_D5);
    let o = bin(&["waldschmidt", &cfg]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("alpha_hat = 5/3"));
    assert!(text.contains("certificate verified"));
    assert!(text.contains("realizability"));

    let explicit = bin(&["waldschmidt", &cfg, "--m", "1,1,1,1,1"]);
    assert_eq!(stdout(&explicit), text);
}

#[test]
fn integer_vector_classes_are_accepted() {
    let s = Scratch::new("vectors");
    let cfg = s.file(
        "cfg.json",
        r#"{"r":5,"negative_curves":[[0,1,-1,0,0,0],"E_23","E_34","E_45",[1,-1,-1,-1,0,0]]}"#,
    );
    let o = bin(&["waldschmidt", &cfg]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("alpha_hat = 5/3"));
}

#[test]
fn certificates_roundtrip_through_verify() {
    let s = Scratch::new("verify");
    let cfg = s.file("cfg.json", CHAIN_D5);
    let o = bin(&["waldschmidt", &cfg, "--m", "2,1,1,1,1", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["note"].is_string());
    let cert = v["certificate"].clone();
    let good = s.file("cert.json", &cert.to_string());
    let ok = bin(&["verify", &cfg, &good]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));

    let mut tampered = cert;
    let d = tampered["d"].as_i64().unwrap();
    tampered["d"] = Value::from(d + 1);
    let bad = s.file("bad.json", &tampered.to_string());
    let rejected = bin(&["verify", &cfg, &bad]);
    assert_ne!(rejected.status.code(), Some(0));
}

#[test]
fn positive_square_class_is_a_validation_error() {
    let s = Scratch::new("square");
    let cfg = s.file("cfg.json", r#"{"r":5,"negative_curves":["L","E_12"]}"#);
    let o = bin(&["waldschmidt", &cfg]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("nonnegative square"));
}

#[test]
fn proximity_violation_reports_slack() {
    let s = Scratch::new("prox");
    let cfg = s.file(
        "cfg.json",
        r#"{"r":2,"proximity":[[2,1]],"negative_curves":["E_12","E_2","L_12"]}"#,
    );
    let o = bin(&["waldschmidt", &cfg, "--m", "1,2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("slack"));

    let fine = bin(&["waldschmidt", &cfg, "--m", "1,1"]);
    assert_eq!(fine.status.code(), Some(0));
    assert!(stdout(&fine).contains("alpha_hat = 1\n"));
}

#[test]
fn no_generators_is_infeasible() {
    let s = Scratch::new("empty");
    let cfg = s.file("cfg.json", r#"{"r":5,"negative_curves":[]}"#);
    assert_eq!(bin(&["waldschmidt", &cfg]).status.code(), Some(5));
}

#[test]
fn malformed_input_is_an_argument_error() {
    let s = Scratch::new("malformed");
    let cfg = s.file("cfg.json", r#"{"r":5,"negative_curves":["E_12"],"extra":1}"#);
    assert_eq!(bin(&["waldschmidt", &cfg]).status.code(), Some(2));
    let good = s.file("good.json", CHAIN_D5);
    assert_eq!(bin(&["waldschmidt", &good, "--m", "1,1"]).status.code(), Some(2));
    assert_eq!(bin(&["candidates", "--r", "9"]).status.code(), Some(2));
    assert_eq!(bin(&["dp4", "--type", "(9,E8,0)"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn single_catalog_type() {
    let o = bin(&["dp4", "--type", "(3,2A1A2,4)"]);
    assert_eq!(o.status.code(), Some(0));
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cols, ["(3,2A1A2,4)", "9/5", "9/5", "verified"]);
}

#[test]
fn catalog_table_and_json_agree() {
    let table = bin(&["dp4", "--all"]);
    assert_eq!(table.status.code(), Some(0));
    let json = bin(&["dp4", "--all", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 30);

    let text = stdout(&table);
    let lines: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(lines.len(), rows.len());
    for (line, row) in lines.iter().zip(rows) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols[0], row["label"].as_str().unwrap());
        assert_eq!(cols[1], row["alpha_hat"].as_str().unwrap());
    }
    assert!(stderr(&table).contains("(3,A1A3,3)"));
}

#[test]
fn degenerations_and_bounds() {
    let deg = stdout(&bin(&["dp4", "--degenerations"]));
    assert!(deg.contains("pass (flagged)"));
    assert!(!deg.contains("FAIL"));
    let bounds = stdout(&bin(&["dp4", "--bounds"]));
    assert!(bounds.contains("outside = none"));
}

#[test]
fn candidate_listing() {
    let o = bin(&["candidates", "--r", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().all(|l| l.split('\t').count() == 2));
    let q = stdout(&bin(&["candidates", "--r", "5", "--family", "Q"]));
    assert_eq!(q.trim(), "Q\tQ_12345");
}

#[test]
fn monomial_subcommands() {
    let sat = bin(&["monomial", "sat", "--ideal", "x^3, x^2*y, x^2*z, x*y, y^2, y*z"]);
    assert_eq!(stdout(&sat).trim(), "x^2, y");
    let sym = bin(&["monomial", "symbolic-power", "--ideal", "x*y,y*z,x*z", "--m", "2"]);
    assert_eq!(stdout(&sym).trim(), "x^2*y^2, x^2*z^2, x*y*z, y^2*z^2");
    let alpha = bin(&["monomial", "alpha", "--ideal", "x*y,y*z,x*z"]);
    assert_eq!(stdout(&alpha).trim(), "2");
    let est = bin(&["monomial", "estimate", "--ideal", "x*y,y*z,x*z", "--max-m", "4"]);
    assert!(stdout(&est).contains("3/2"));
    assert_eq!(bin(&["monomial", "alpha", "--ideal", "x^"]).status.code(), Some(2));
}
