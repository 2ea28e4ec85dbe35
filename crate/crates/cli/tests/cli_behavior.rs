use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const SL2: &str = include_str!("../../../specs/sl2.alg.json");

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isotype"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("ISOTYPE_THREADS").output().expect("binary runs")
}

fn write_spec(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn reports(out: &Output) -> Vec<Value> {
    serde_json::from_slice::<Value>(&out.stdout).expect("json output").as_array().expect("array").clone()
}

#[test]
fn passing_spec_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_spec(dir.path(), "sl2.json", SL2);
    let out = run(&["verify", "--spec", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rs = reports(&out);
    assert_eq!(rs.len(), 2);
    for r in rs {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["violations"], 0);
        assert!(r.get("millis").is_none());
    }
}

#[test]
fn broken_bracket_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = SL2.replacen(r#"{ "i": 0, "j": 2, "k": 1, "c": "1" }"#, r#"{ "i": 0, "j": 2, "k": 1, "c": "2" }"#, 1);
    let p = write_spec(dir.path(), "bad.json", &text);
    let out = run(&["verify", "--spec", p.to_str().unwrap(), "--target", "jacobi"]);
    assert_eq!(out.status.code(), Some(1));
    let rs = reports(&out);
    assert_eq!(rs[0]["status"], "fail");
    assert!(rs[0]["violations"].as_u64().unwrap() > 0);
    assert!(rs[0]["witness"].as_str().is_some_and(|w| !w.is_empty()));
    let text_out = run(&["verify", "--spec", p.to_str().unwrap(), "--target", "jacobi", "--format", "text"]);
    assert!(String::from_utf8_lossy(&text_out.stdout).contains("FAIL"));
}

#[test]
fn malformed_spec_exits_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let text = SL2.replacen(r#""c": "-2" }"#, r#""c": "1/0" }"#, 1);
    let p = write_spec(dir.path(), "zero.json", &text);
    let out = run(&["verify", "--spec", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("zero.json:"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--spec", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "--family", "gl", "--param", "w=x"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "--family", "gl", "--param", "q=1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--spec", "x", "--sample", "5"]).status.code(), Some(2));
}

#[test]
fn unsatisfiable_construction_is_an_error_report() {
    let out = run(&["catalog", "--family", "so", "--param", "w=3", "--param", "z=1"]);
    assert_eq!(out.status.code(), Some(1));
    let rs = reports(&out);
    assert_eq!(rs[0]["status"], "error");
    assert!(rs[0]["notes"][0].as_str().unwrap().contains("even dim W"));
}

#[test]
fn no_matching_tasks_prints_empty_output() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_spec(dir.path(), "sl2.json", SL2);
    let out = run(&["build", "--spec", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "[]\n");
    let out = run(&["build", "--spec", p.to_str().unwrap(), "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "no tasks\n");
}

#[test]
fn catalog_summary_for_gl() {
    let out = run(&["catalog", "--family", "gl", "--param", "w=2", "--param", "z=1"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = reports(&out);
    assert_eq!(rs.len(), 1);
    let dims = &rs[0]["dims"];
    assert_eq!(dims["J"], 4);
    assert_eq!(dims["T"], 4);
    assert_eq!(dims["assemble.L"], 24);
    assert_eq!(dims["assemble.L_full"], 25);
}

#[test]
fn decompose_gl_with_catalog_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{
      "field": "Q",
      "objects": {
        "gl": { "kind": "catalog", "family": "gl", "params": { "w": 2, "z": 1 } },
        "l": { "kind": "assemble", "from": "gl" }
      },
      "elements": { "e": { "of": "gl", "catalog": "idempotent" } }
    }"#;
    let p = write_spec(dir.path(), "gl.json", text);
    let spec = p.to_str().unwrap();
    let out = run(&["decompose", "--spec", spec, "--on", "l", "--sl2xsl2", "--idempotent", "e"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let d = &reports(&out)[0]["dims"];
    assert_eq!((d["J1"].as_u64(), d["J_half"].as_u64(), d["T1"].as_u64()), (Some(1), Some(2), Some(2)));
    let out = run(&["decompose", "--spec", spec, "--on", "l", "--sl2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sampled_e8_jacobi_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{
      "field": "Q",
      "objects": {
        "e8": { "kind": "catalog", "family": "exceptional", "params": { "c2_dim": 8 } },
        "k": { "kind": "kantor", "from": "e8" }
      },
      "tasks": [ { "id": "jacobi", "command": "verify", "target": "jacobi", "on": "k" } ]
    }"#;
    let p = write_spec(dir.path(), "e8.json", text);
    let spec = p.to_str().unwrap();
    let a = run(&["verify", "--spec", spec, "--sample", "2000", "--seed", "11", "--threads", "1"]);
    let b = run(&["verify", "--spec", spec, "--sample", "2000", "--seed", "11", "--threads", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = &reports(&a)[0];
    let jacobi = r["details"].as_array().unwrap().iter().find(|c| c["name"] == "jacobi").unwrap();
    assert_eq!(jacobi["checked"], 2000);
    assert_eq!(r["checked"], 2000 + 248 * 249 / 2);
    assert_eq!(r["dims"]["L"], 248);
}

#[test]
fn timing_flag_adds_milliseconds() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_spec(dir.path(), "sl2.json", SL2);
    let out = run(&["verify", "--spec", p.to_str().unwrap(), "--timing"]);
    assert!(reports(&out).iter().all(|r| r["millis"].is_u64()));
}
