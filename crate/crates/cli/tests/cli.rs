use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trace-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trace-ideals-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_json_carries_schema() {
    let out = run(&["--json", "--field", "F2", "enumerate", "sg:4,5,6", "--scan"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["trace_ideals"].as_array().unwrap().len(), 7);
    assert_eq!(v["overrings"].as_array().unwrap().len(), 7);
    assert_eq!(v["rho_bijective"], true);
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["--field", "F2", "enumerate", "sg:4,x"][..],
        &["--field", "F6", "analyze", "sg:2,3"],
        &["analyze", "ring:2,3"],
        &["enumerate"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}");
        let err = stderr_json(&out);
        assert_eq!(err["error"], "parse");
        assert_eq!(err["exit_code"], 2);
    }
}

#[test]
fn precision_errors_exit_3() {
    let out = run(&["--field", "F2", "--window", "6", "analyze", "gens:t3+t7,t5"]);
    assert_eq!(code(&out), 3);
    assert_eq!(stderr_json(&out)["error"], "precision");
    let out = run(&[
        "--field",
        "F2",
        "--window",
        "16",
        "analyze",
        "gens:t3+t7,t5",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn cap_exceeded_exits_4() {
    let out = run(&["--field", "F2", "--max-dim", "2", "enumerate", "sg:4,5,6"]);
    assert_eq!(code(&out), 4);
    assert_eq!(stderr_json(&out)["error"], "cap_exceeded");
}

#[test]
fn other_failures_exit_1() {
    let out = run(&["--field", "F2", "analyze", "gens:t2,t4"]);
    assert_eq!(code(&out), 1);
    assert!(stderr_json(&out)["message"]
        .as_str()
        .unwrap()
        .contains("infinite colength"));
}

#[test]
fn infinite_field_needs_monomial_mode() {
    let out = run(&["--json", "enumerate", "sg:4,5,6", "--monomial-only"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["field"], "Q");
    assert_eq!(v["overrings"].as_array().unwrap().len(), 6);
    assert_ne!(code(&run(&["enumerate", "sg:4,5,6"])), 0);
}

#[test]
fn fixture_corpus_passes() {
    let list = run(&["fixtures", "list"]);
    assert_eq!(code(&list), 0);
    let names = String::from_utf8(list.stdout).unwrap();
    assert!(names.lines().count() >= 6, "{names}");
    let out = run(&["fixtures", "run"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{text}");
    assert_eq!(
        text.lines().filter(|l| l.starts_with("PASS")).count(),
        names.lines().count()
    );
}

#[test]
fn expect_mismatch_exits_1_with_note() {
    let fixture = r#"{
        "name": "wrong",
        "ring": "sg:2,3",
        "field": "F2",
        "note": "deliberately wrong overring count",
        "expect": {"overrings": ["<1, t2V>"]}
    }"#;
    let path = scratch("wrong.json", fixture);
    let out = run(&[
        "--field",
        "F2",
        "enumerate",
        "sg:2,3",
        "--expect",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let err = stderr_json(&out);
    assert_eq!(err["error"], "fixture_mismatch");
    assert!(err["message"]
        .as_str()
        .unwrap()
        .contains("deliberately wrong"));

    let good = scratch(
        "good.json",
        &fixture.replace(r#"["<1, t2V>"]"#, r#"["<1, t2V>", "<V>"]"#),
    );
    let out = run(&[
        "--field",
        "F2",
        "enumerate",
        "sg:2,3",
        "--expect",
        good.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn semigroup_info() {
    let out = run(&["--json", "sg", "info", "4,5,6"]);
    let v = stdout_json(&out);
    assert_eq!(v["info"]["frobenius"], 7);
    assert_eq!(v["info"]["gaps"], serde_json::json!([1, 2, 3, 7]));
    assert_eq!(v["info"]["symmetric"], true);
    let out = run(&["--json", "sg", "over", "3,4,5"]);
    assert_eq!(
        stdout_json(&out)["oversemigroups"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn analyze_residue_extension() {
    let out = run(&["--json", "--field", "F8/F2", "analyze", "resext:F8/F2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["invariants"]["multiplicity"], 3);
    assert_eq!(v["invariants"]["cm_type"], 2);
    assert_eq!(v["invariants"]["almost_gorenstein"], "true");
    assert_eq!(v["blowup_is_normalization"], true);
    assert_eq!(v["maximal_is_t_blowup"], true);
    assert_eq!(v["special_residue_degree"], serde_json::json!([3, true]));
}

#[test]
fn analyze_classifies_ideals() {
    let out = run(&[
        "--json",
        "--field",
        "F2",
        "analyze",
        "sg:4,5,6",
        "--ideal",
        "t5,t6,t8",
        "--antistable",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    let i = &v["ideals"][0];
    assert_eq!(i["is_trace"], true);
    assert_eq!(i["is_stable"], false);
    assert_eq!(i["colength"], 2);
    assert_eq!(v["antistable"]["antistable"], false);
}

#[test]
fn config_supplies_moduli() {
    let good = scratch("good.toml", "[moduli]\nF8 = [1, 0, 1, 1]\n");
    let out = run(&[
        "--json",
        "--config",
        good.to_str().unwrap(),
        "--field",
        "F8/F2",
        "analyze",
        "resext:F8/F2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["invariants"]["multiplicity"], 3);
    let bad = scratch("bad.toml", "[moduli]\nF8 = [1, 0, 0, 1]\n");
    let out = run(&["--config", bad.to_str().unwrap(), "analyze", "resext:F8/F2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_json(&out)["message"]
        .as_str()
        .unwrap()
        .contains("reducible"));
}

#[test]
fn help_succeeds() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("enumerate"));
}
