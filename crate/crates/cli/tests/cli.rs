use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lefschetz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env_remove("LEFSCHETZ_CATALOG_DIR")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn lefschetz_on_heisenberg() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "h.json", r#"{ "algebra": "heisenberg3", "map": "scale_2_3_6" }"#);
    let out = lefschetz(&["lefschetz", &f, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lefschetz"], "-10");
    assert_eq!(v["det_i_minus_a"], "-10");
    assert_eq!(v["agree"], true);
    assert_eq!(v["betti"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn torus_cat_map() {
    let out = lefschetz(&["torus", "--matrix", "2,1;1,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["lefschetz"], "-1");
    assert_eq!(lefschetz(&["torus", "--matrix", "1,0;0,1"]).status.code(), Some(2));
    assert_eq!(lefschetz(&["torus", "--matrix", "-1,0;0,-1"]).status.code(), Some(0));
}

#[test]
fn check_reports_jacobi_violation() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad3.json",
        r#"{ "algebra": { "dim": 3, "brackets": [
              { "left": 0, "right": 1, "result": { "2": "1" } },
              { "left": 0, "right": 2, "result": { "0": "1" } } ] } }"#,
    );
    let out = lefschetz(&["check", &f]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("/algebra: JacobiViolation(0,1,2)"), "{err}");
}

#[test]
fn malformed_documents_exit_2_with_paths() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not json", ""),
        (r#"{ "algebra": "heisenberg3", "map": { "matrix": [["1","0"],["0","1"]] } }"#, "/map/matrix"),
        (r#"{ "algebra": { "dim": 2, "brackets": [ { "left": 0, "right": 1, "result": { "1": "x" } } ] } }"#, "/algebra/brackets/0/result/1"),
        (r#"{ "algebra": "heisenberg3", "map": "scale_2_3_6", "module": "coadjoint" }"#, "/module"),
    ];
    for (i, (doc, path)) in cases.iter().enumerate() {
        let f = write(dir.path(), &format!("c{i}.json"), doc);
        let out = lefschetz(&["check", &f]);
        assert_eq!(out.status.code(), Some(2), "{doc}");
        let err = String::from_utf8_lossy(&out.stderr);
        let shown = if path.is_empty() { "/" } else { path };
        assert!(err.starts_with(&format!("error: {shown}:")), "{err}");
    }
}

#[test]
fn verdict_false_exits_1() {
    // two-dimensional trivial module on abelian_1, f = 2, xi = I:
    // L = (1 - 2) tr(xi) = -2 while det(I - f) = -1
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "v.json",
        r#"{ "algebra": "abelian_1", "map": "double",
             "module": { "dim": 2, "actions": [[["0","0"],["0","0"]]] } }"#,
    );
    let out = lefschetz(&["lefschetz", &f, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["lefschetz"], "-2");
    assert_eq!(v["hopf"], "-2");
    assert_eq!(v["det_i_minus_a"], "-1");
    assert_eq!(v["agree"], false);
    assert_eq!(v["formula_guaranteed"], false);
}

#[test]
fn ambiguous_linearization_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "a.json",
        r#"{ "algebra": { "dim": 2, "brackets": [ { "left": 0, "right": 1, "result": { "1": "1" } } ] },
             "map": { "matrix": [["1","0"],["0","2"]] } }"#,
    );
    let out = lefschetz(&["lefschetz", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/linearization"));
}

#[test]
fn shadow_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.json", r#"{ "algebra": "sol4_twisted", "map": "scale_2" }"#);
    let out = lefschetz(&["shadow", &f, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["shadow_morphism"], true);
}

#[test]
fn catalog_commands() {
    let out = lefschetz(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("heisenberg3"));
    assert_eq!(lefschetz(&["catalog", "selftest"]).status.code(), Some(0));
    assert_eq!(lefschetz(&["catalog", "show", "nosuch"]).status.code(), Some(2));

    let out = lefschetz(&["catalog", "export", "filiform4"]);
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("filiform4.json"), &out.stdout).unwrap();
    let reloaded = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["catalog", "export", "filiform4"])
        .env("LEFSCHETZ_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(reloaded.status.code(), Some(0));
    assert_eq!(reloaded.stdout, out.stdout);
}

#[test]
fn cohomology_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.json", r#"{ "algebra": "heisenberg3", "map": "scale_2_3_6" }"#);
    let v = json(&lefschetz(&["cohomology", &f, "--json"]));
    assert_eq!(v["betti"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["maps"]["3"], serde_json::json!([["36"]]));
    let v = json(&lefschetz(&["cohomology", &f, "--json", "--module", "adjoint"]));
    assert_eq!(v["dims"], serde_json::json!([3, 9, 9, 3]));
    assert!(v.get("maps").is_none());
}
