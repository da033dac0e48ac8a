use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g1min")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str, contents: Option<&str>) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g1min-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    if let Some(c) = contents {
        std::fs::write(&p, c).unwrap();
    }
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn quartic_invariants() {
    let f = tmp("q.json", Some(r#"{"kind":"quartic","coeffs":["1","0","0","0","1"]}"#));
    let o = run(&["invariants", path(&f)]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("i: 12") && s.contains("j: 0") && s.contains("disc: 256"), "{}", s);
}

#[test]
fn zero_model_has_zero_invariants() {
    let f = tmp("z.json", Some(r#"{"kind":"form22","coeffs":["0","0","0","0","0","0","0","0","0"]}"#));
    let o = run(&["invariants", "--json", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["c4"], "0");
    assert_eq!(v["disc"], "0");
}

#[test]
fn construct_then_invariants() {
    let out = tmp("c22.json", None);
    assert!(run(&["construct", "--type", "22", "--curve", "0,0,0,1", "--out", path(&out)]).status.success());
    let o = run(&["invariants", "--json", path(&out)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["disc"], "-64");
    let o = run(&["level", path(&out), "--prime", "2"]);
    assert!(stdout(&o).contains("level: 0"));
}

#[test]
fn minimise_round_trip() {
    // construct_22(0,0,0,1) times 2
    let f = tmp("s.json", Some(r#"{"kind":"form22","coeffs":["2","0","0","0","0","-2","2","0","0"]}"#));
    assert!(stdout(&run(&["level", path(&f), "--prime", "2"])).contains("level: 1"));
    let out = tmp("s-min.json", None);
    let o = run(&["minimise", path(&f), "--prime", "2", "--out", path(&out)]);
    assert!(o.status.success());
    let written: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(written["meta"]["transform"].is_object());
    let o = run(&["minimise", path(&out), "--prime", "2"]);
    assert!(stdout(&o).contains("already minimal"));
    let o = run(&["invariants", "--json", path(&out)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["disc"], "-64");
    let o = run(&["minimise", path(&f), "--global", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["delta_final"], "-64");
}

#[test]
fn critical_form_is_already_minimal() {
    let out = tmp("crit.json", None);
    assert!(run(&["construct", "--type", "22", "--critical", "5", "--seed", "3", "--out", path(&out)]).status.success());
    let o = run(&["minimise", path(&out), "--prime", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
    let o = run(&["level", path(&out), "--prime", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["level"].as_i64().unwrap() >= 1);
}

#[test]
fn weights_count() {
    let o = run(&["oracle", "weights", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "81 minimal, 8 after symmetry");
}

#[test]
fn exit_codes() {
    let bad = tmp("bad.json", Some("not json"));
    assert_eq!(run(&["invariants", path(&bad)]).status.code(), Some(2));
    let q = tmp("q3.json", Some(r#"{"kind":"quartic","coeffs":["1","0","0","0","1"]}"#));
    assert_eq!(run(&["convert", "2to3", path(&q)]).status.code(), Some(3));
    let f = tmp("a11.json", Some(r#"{"kind":"form22","coeffs":["1","0","0","0","0","-1","1","0","0"]}"#));
    let o = run(&["convert", "2to3", path(&f)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    let z = tmp("sing.json", Some(r#"{"kind":"form22","coeffs":["1","0","0","0","0","0","0","0","0"]}"#));
    assert_eq!(run(&["minimise", path(&z), "--prime", "2"]).status.code(), Some(4));
    assert_eq!(run(&["level", path(&z), "--prime", "2"]).status.code(), Some(4));
    assert_eq!(run(&["minimise", path(&q)]).status.code(), Some(2));
}

#[test]
fn convert_between_forms_and_cubes() {
    // construct_22(0,0,0,1) with y1, y2 swapped has a11 = 0
    let f = tmp("sw.json", Some(r#"{"kind":"form22","coeffs":["0","0","1","-1","0","0","0","0","1"]}"#));
    let cube = tmp("sw-cube.json", None);
    let o = run(&["convert", "2to3", path(&f), "--out", path(&cube)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["invariants", "--json", path(&cube)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["disc"], "-64");
}
