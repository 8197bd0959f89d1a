use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

fn resint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resint"))
        .args(args)
        .env_remove("RESINT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write_scenario(dir: &Path, checks: &[&str]) -> String {
    let text = format!(
        r#"{{"format": 1, "ring": {{"vars": ["x", "y", "z"]}},
            "ideals": {{"X": ["x"], "Y": ["y"], "XY": ["x*y"], "M": ["x", "y"], "U": ["1"]}},
            "checks": [{}]}}"#,
        checks.join(",")
    );
    let path = dir.join("s.json");
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn bundled_e6_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = resint(&["verify", "bundled:e6", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let report: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["format"], 1);
    assert_eq!(report["summary"]["pass"], 14);
    assert_eq!(report["checks"][0]["name"], "a_1:J22 == J23");
    assert_eq!(report["checks"][0]["verdict"], "pass");
}

#[test]
fn e7_is_partial_by_default_and_exact_on_request() {
    let o = resint(&["verify", "bundled:e7"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("PARTIAL"));
    assert_eq!(code(&resint(&["verify", "bundled:e7", "--exact"])), 0);
    let o = resint(&["verify", "bundled:e7", "--exact", "--alias", "I2=I3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(code(&resint(&["verify", "/nonexistent/scenario.json"])), 2);
    assert_eq!(code(&resint(&["verify", "bundled:e6", "--frobnicate"])), 2);
    assert_eq!(code(&resint(&[])), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&resint(&["verify", bad.to_str().unwrap()])), 2);
    let undefined = write_scenario(dir.path(), &[r#"{"kind": "ideal_equals", "args": ["X", "Nope"]}"#]);
    let o = resint(&["verify", &undefined]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Nope"));
    assert_eq!(code(&resint(&["graph", "gk", "E", "6", "4"])), 2);
    assert_eq!(code(&resint(&["graph", "crystal", "D", "5", "2"])), 2);
    assert_eq!(code(&resint(&["family", "typeA-left", "--k", "2"])), 2);
}

// (check JSON, verdict) pairs covering every verdict
const MENU: [(&str, &str); 6] = [
    (r#"{"kind": "ideal_equals", "args": ["X", "X"]}"#, "pass"),
    (r#"{"kind": "colon_equals", "args": ["XY", "X", "Y"]}"#, "pass"),
    (r#"{"kind": "colon_equals", "args": ["X", "X", "X"]}"#, "fail"),
    (r#"{"kind": "codim_equals", "args": ["M"], "expect": 3}"#, "fail"),
    (r#"{"kind": "colon_equals", "args": ["XY", "X", "Y"], "mode": "containment_only"}"#, "partial"),
    (r#"{"kind": "codim_equals", "args": ["U"], "expect": 0}"#, "error"),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn exit_code_contract(picks in proptest::collection::vec(0..MENU.len(), 0..5)) {
        let dir = tempfile::tempdir().unwrap();
        let checks: Vec<&str> = picks.iter().map(|&i| MENU[i].0).collect();
        let path = write_scenario(dir.path(), &checks);
        let json = dir.path().join("r.json");
        let o = resint(&["verify", &path, "--json", json.to_str().unwrap()]);
        let verdicts: Vec<&str> = picks.iter().map(|&i| MENU[i].1).collect();
        let want = if verdicts.contains(&"error") {
            2
        } else if verdicts.iter().all(|v| *v == "pass") {
            0
        } else {
            1
        };
        prop_assert_eq!(code(&o), want);
        let report: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
        let got: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["verdict"].as_str().unwrap()).collect();
        prop_assert_eq!(got, verdicts);
    }
}

#[test]
fn family_counts() {
    let lines = |args: &[&str]| {
        let o = resint(args);
        assert_eq!(code(&o), 0, "{args:?}");
        stdout(&o).lines().count()
    };
    assert_eq!(lines(&["family", "pfaffian-submax", "--m", "5"]), 5);
    assert_eq!(lines(&["family", "e6", "--ideal", "J23"]), 6);
    assert_eq!(lines(&["family", "typeA-left", "--k", "2", "--n", "5", "--s", "1", "--reading", "last-rows"]), 3);
    assert_eq!(lines(&["family", "typeA-left", "--k", "2", "--n", "5", "--s", "1"]), 1);
    assert_eq!(lines(&["family", "pluecker", "--n", "5"]), 5);
    assert_eq!(lines(&["family", "pfaffian-containing", "--m", "5", "--j", "3"]), 4);
    assert_eq!(lines(&["family", "e7", "--ideal", "I2", "--i2", "I3"]), 6);
    let a = resint(&["family", "ku-bordered", "--m", "5", "--j", "3"]);
    let b = resint(&["family", "ku-bordered", "--m", "5", "--j", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn op_examples() {
    let out = |args: &[&str]| {
        let o = resint(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    assert_eq!(out(&["op", "quotient", "--ring", "x,y", "--gens", "x*y", "--by", "y"]), "x\n");
    assert_eq!(out(&["op", "codim", "--ring", "x,y,z,u,v", "--gens", "x,y,z"]), "3\n");
    assert_eq!(
        out(&["op", "member", "--pluecker", "4", "--poly", "p_12*p_34 - p_13*p_24 + p_14*p_23"]),
        "true\n"
    );
    assert_eq!(out(&["op", "intersect", "--ring", "x,y", "--gens", "x", "--by", "y"]), "x*y\n");
    assert_eq!(out(&["op", "mu", "--ring", "x,y", "--gens", "x,x*y,y^2"]), "2\n");
    assert_eq!(out(&["--order", "lex", "op", "gb", "--ring", "x,y", "--gens", "x+y,y"]), "y\nx\n");
    assert_eq!(code(&resint(&["op", "gb", "--ring", "x", "--gens", "w"])), 2);
}

#[test]
fn graph_exports() {
    let dir = tempfile::tempdir().unwrap();
    let count_nodes = |dot: &str| dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let cases = [(["gk", "E", "6", "6"], 7), (["crystal", "A", "5", "2"], 15), (["crystal", "D", "5", "5"], 16)];
    for (args, nodes) in cases {
        let o = resint(&["graph", args[0], args[1], args[2], args[3]]);
        assert_eq!(code(&o), 0);
        assert_eq!(count_nodes(&stdout(&o)), nodes, "{args:?}");
        let path = dir.path().join("g.dot");
        let o = resint(&["graph", args[0], args[1], args[2], args[3], "--dot", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&resint(&["graph", args[0], args[1], args[2], args[3]])));
    }
}

#[test]
fn cache_dir_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_resint"))
            .args(["verify", "bundled:e6"])
            .env("RESINT_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(code(&run()), 0);
    let files = fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0);
    assert_eq!(code(&run()), 0);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), files);
}
