use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn golden(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/golden")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2z2u"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn factor_tables() {
    let v = json(&["factor", "--n", "7"]);
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    assert_eq!(v["cyclotomic_classes"], 3);
    let v = json(&["factor", "--n", "1"]);
    assert_eq!(v["factors"][0]["factor"], "1+x");
    assert_eq!(v["cyclotomic_classes"], 1);
    let v = json(&["factor", "--n", "6"]);
    assert_eq!(v["factorization"], "(1+x)^2 * (1+x+x^2)^2");
    assert!(v["cyclotomic_classes"].is_null());
    assert!(!run(&["factor", "--n", "0"]).status.success());
}

#[test]
fn construct_lists_words() {
    let spec = golden("worked-2-3-case1.spec");
    let v = json(&["construct", "--spec", &spec, "--emit-words"]);
    assert_eq!(v["size"], 32);
    assert_eq!(v["words"].as_array().unwrap().len(), 32);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn inline_spec_matches_file() {
    let spec = golden("worked-2-3-case1.spec");
    let from_file = stdout(&["params", "--spec", &spec]);
    let inline = stdout(&[
        "params", "--alpha", "2", "--beta", "3", "--case", "1", "--a", "1+x^2", "--l", "1+x", "--g", "1+x",
    ]);
    assert_eq!(from_file, inline);
}

#[test]
fn verify_reports_findings_without_failing() {
    let spec = golden("worked-2-3-case1.spec");
    let v = json(&["verify", "--spec", &spec]);
    assert_eq!(v["gray_parameters"], "[8,5,2]");
    assert!(v["findings"].as_u64().unwrap() > 0);
    let v = json(&[
        "verify", "--alpha", "2", "--beta", "3", "--case", "1", "--a", "1+x^2", "--l", "1", "--g", "1+x",
    ]);
    assert_eq!(v["valid"], false);
    assert_eq!(v["stages"].as_array().unwrap().len(), 1);
}

#[test]
fn parse_errors_carry_position() {
    let dir = std::env::temp_dir().join(format!("z2z2u-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.spec");
    std::fs::write(&path, "alpha = 2\nbeta = 3\ncase = 1\na = 1+y\ng = 1+x\n").unwrap();
    let out = run(&["verify", "--spec", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
    assert!(!run(&["verify"]).status.success());
}

#[test]
fn verify_is_byte_identical_for_a_seed() {
    let spec = golden("worked-7-7.spec");
    let a = stdout(&["verify", "--spec", &spec, "--seed", "99"]);
    let b = stdout(&["verify", "--spec", &spec, "--seed", "99"]);
    assert_eq!(a, b);
    assert!(a.contains("seed: 99"));
    assert!(stdout(&["verify", "--spec", &spec]).contains("seed: 20170601"));
}

#[test]
fn text_and_json_carry_the_same_values() {
    let spec = golden("worked-2-3.spec");
    for cmd in ["verify", "dual", "params", "gray"] {
        let text = stdout(&[cmd, "--spec", &spec]);
        let v = json(&[cmd, "--spec", &spec]);
        let mut leaves = Vec::new();
        collect(&v, &mut leaves);
        for leaf in leaves {
            assert!(text.contains(&leaf), "{cmd}: {leaf} missing from text output");
        }
    }
}

fn collect(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m.values().for_each(|x| collect(x, out)),
        Value::Array(a) => a.iter().for_each(|x| collect(x, out)),
        Value::Null => {}
        Value::String(s) => out.push(s.clone()),
        other => out.push(other.to_string()),
    }
}

#[test]
fn gray_layouts_agree_on_parameters() {
    let spec = golden("worked-7-7.spec");
    let block = json(&["gray", "--spec", &spec, "--layout", "block"]);
    let inter = json(&["gray", "--spec", &spec, "--layout", "interleaved", "--emit-words"]);
    for key in ["n", "k", "d"] {
        assert_eq!(block[key], inter[key]);
    }
    assert_eq!(
        (block["n"].as_u64(), block["k"].as_u64(), block["d"].as_u64()),
        (Some(21), Some(6), Some(8))
    );
    assert_eq!(inter["words"].as_array().unwrap().len(), 64);
}

#[test]
fn census_reports_both_counts() {
    let v = json(&["census", "--alpha", "1", "--beta", "1"]);
    let row = &v["rows"][0];
    assert_eq!(row["formula"], 6);
    assert_eq!(row["separable"], 6);
    assert!(row["census"].as_u64().unwrap() >= 6);
}

#[test]
fn search_tables() {
    let v = json(&["search", "--alpha-max", "2", "--beta-max", "3"]);
    assert!(v["rows"].as_array().unwrap().iter().any(|r| r["n"] == 8));
    let v = json(&["search", "--alpha-max", "0", "--beta-max", "3"]);
    assert!(v["rows"].as_array().unwrap().is_empty());
    let v = json(&["search", "--alpha-max", "7", "--beta-max", "7", "--d-min", "8"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["n"] == 21 && r["k"].as_u64().unwrap() >= 6));
}
