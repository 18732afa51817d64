use std::path::Path;
use std::process::Command;

use hassett_cubics::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hassett-cubics"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_of(args: &[&str]) -> Value {
    let (code, stdout, stderr) = bin(args);
    assert!(code == 0 || code == 1, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?} did not emit JSON: {e}"))
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn documented_examples() {
    let (code, stdout, _) = bin(&["hassett", "verify", "--max", "120", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verified"], Value::Bool(true));
    assert_eq!(v["checked"][0], "8");
    assert_eq!(v["checked"][1], "12");

    let (code, stdout, stderr) = bin(&["hassett", "represent", "10"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(stderr.contains("not in the Hassett set"), "{stderr}");

    let (code, stdout, _) = bin(&["lattice", "gram", "--alpha", "0", "--beta", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("M_{0,1}"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["nonsense"][..],
        &["hassett", "verify"][..],
        &["hassett", "verify", "--max", "ten"][..],
        &["adc", "descend", "--form", "q3", "--num", "1,2", "--den"][..],
        &["lattice", "isometry", "--from", "0,2", "--to", "1,1"][..],
        &["geometry", "dims", "--a", "1/0", "--b", "1"][..],
        &["--verify-file", "x.json", "hassett", "represent", "8"][..],
    ] {
        let (code, _, stderr) = bin(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
    }
}

#[test]
fn domain_errors_exit_1() {
    assert_eq!(run(["prog", "adc", "descend", "--form", "g", "--num", "1,0,0", "--den", "3"]).exit_code, EXIT_FAILURE);
    assert_eq!(run(["prog", "local", "certify", "--k", "7", "--precision", "0"]).exit_code, EXIT_FAILURE);
    assert_eq!(run(["prog", "lattice", "gram", "--alpha", "2", "--beta", "0"]).exit_code, EXIT_FAILURE);
    assert_eq!(run(["prog", "--verify-file", "/nonexistent/file.json"]).exit_code, EXIT_FAILURE);
    assert_eq!(run(["prog"]).exit_code, EXIT_USAGE);
    assert_eq!(run(["prog", "--version"]).exit_code, EXIT_OK);
}

#[test]
fn output_is_deterministic() {
    let a = bin(&["geometry", "dims", "--a", "2/3", "--b", "-5", "--json"]);
    let b = bin(&["geometry", "dims", "--a", "2/3", "--b", "-5", "--json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["a"], "2/3");
    assert_eq!((v["alpha"].as_u64(), v["beta"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn tampered_certificates_are_rejected() {
    let dir = tempfile::tempdir().unwrap();

    let mut cert = json_of(&["hassett", "represent", "8", "--json"]);
    let good = write(dir.path(), "good.json", &cert);
    assert_eq!(bin(&["--verify-file", &good]).0, 0);
    cert["v"] = serde_json::json!(["0", "0", "0", "2"]);
    let bad = write(dir.path(), "bad.json", &cert);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    let mut report = json_of(&["local", "certify", "--k", "55", "--json"]);
    report["certificates"][3]["witness"][1] = "12345".into();
    let bad = write(dir.path(), "local.json", &report);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    let mut trace = json_of(&["adc", "descend", "--form", "q3", "--num", "3,4,5", "--den", "5", "--json"]);
    trace["terminal"]["v"][0] = "7".into();
    let bad = write(dir.path(), "trace.json", &trace);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    let mut check = json_of(&["adc", "check", "--form", "g", "--max", "50", "--json"]);
    check["violations"] = serde_json::json!(["6"]);
    let bad = write(dir.path(), "check.json", &check);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    let mut iso = json_of(&["lattice", "isometry", "--from", "0,0", "--to", "0,1", "--json"]);
    iso["matrix"][0][0] = "2".into();
    let bad = write(dir.path(), "iso.json", &iso);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    let out = dir.path().join("cubic.json");
    assert_eq!(bin(&["geometry", "cubic", "--a", "0", "--b", "1", "--seed", "9", "--out", out.to_str().unwrap()]).0, 0);
    let mut cubic: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(cubic["monomials"].as_array().unwrap().len(), 56);
    cubic["coeffs"][55] = "1".into();
    let bad = write(dir.path(), "cubic_bad.json", &cubic);
    assert_eq!(bin(&["--verify-file", &bad]).0, 1);

    std::fs::write(dir.path().join("junk.json"), "{\"hello\": 1}").unwrap();
    assert_eq!(bin(&["--verify-file", dir.path().join("junk.json").to_str().unwrap()]).0, 1);
}

#[test]
fn negative_verdicts_replay_to_the_same_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = bin(&["local", "certify", "--k", "-4", "--json"]);
    assert_eq!(code, 1);
    let path = dir.path().join("neg.json");
    std::fs::write(&path, stdout).unwrap();
    assert_eq!(bin(&["--verify-file", path.to_str().unwrap()]).0, 1);
}

#[test]
fn text_mode_has_no_json() {
    let (code, stdout, _) = bin(&["hassett", "represent", "78"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<Value>(&stdout).is_err());
    assert!(stdout.contains("u = -3"));
    let (_, stdout, _) = bin(&["adc", "check", "--form", "Q3", "--max", "100"]);
    assert!(stdout.contains("every n ≤ 100"));
}
