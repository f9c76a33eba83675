use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE: &str = r#"{"n": 3, "generators": [
    {"a": ["2"], "b": ["7"], "c": "20"},
    {"a": ["3"], "b": ["-2"], "c": "20"},
    {"a": ["-4"], "b": ["-6"], "c": "20"},
    {"a": ["-1"], "b": ["1"], "c": "20"}]}"#;

fn heisid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heisid")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn decide_example_is_yes_with_witness() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "ex.json", EXAMPLE);
    let out = heisid(&["decide", s(&inst)]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["answer"], "yes");
    assert!(v["witness"].is_array());
}

#[test]
fn decide_single_non_identity_is_no() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "one.json", r#"{"n":3,"generators":[{"a":["1"],"b":["0"],"c":"0"}]}"#);
    let out = heisid(&["decide", s(&inst)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out), serde_json::json!({"answer": "no"}));
}

#[test]
fn decide_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    for (name, body) in [
        ("ex.json", EXAMPLE),
        (
            "central.json",
            r#"{"n":4,"generators":[{"a":["0","0"],"b":["0","0"],"c":"5/2"},{"a":["0","0"],"b":["0","0"],"c":"-3"}]}"#,
        ),
        ("pair.json", r#"{"n":3,"generators":[{"a":["1"],"b":["1"],"c":"1"},{"a":["-1"],"b":["-1"],"c":"0"}]}"#),
    ] {
        let inst = write(&dir, name, body);
        let out = heisid(&["--jobs", "2", "decide", s(&inst)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let verdict = write(&dir, &format!("{name}.verdict"), std::str::from_utf8(&out.stdout).unwrap());
        let check = heisid(&["witness-verify", s(&inst), s(&verdict)]);
        assert_eq!(check.status.code(), Some(0), "{name}");
        assert_eq!(stdout_json(&check)["identity"], true);
    }
}

#[test]
fn tampered_witness_is_rejected() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "ex.json", EXAMPLE);
    let out = heisid(&["decide", s(&inst)]);
    let mut v = stdout_json(&out);
    // Bump the first exponent found in the witness tree by one.
    fn bump(v: &mut Value) -> bool {
        match v {
            Value::Array(items) if items.len() == 2 && items[0].is_u64() && items[1].is_string() => {
                let e: u64 = items[1].as_str().unwrap().parse().unwrap();
                items[1] = Value::String((e + 1).to_string());
                true
            }
            Value::Array(items) => items.iter_mut().any(bump),
            Value::Object(obj) => obj.get_mut("body").is_some_and(bump),
            _ => false,
        }
    }
    assert!(bump(&mut v["witness"]));
    let w = write(&dir, "tampered.json", &v.to_string());
    assert_eq!(heisid(&["witness-verify", s(&inst), s(&w)]).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two_and_names_the_field() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"n":3,"generators":[{"a":["1"],"b":["zz"],"c":"0"}]}"#);
    let out = heisid(&["decide", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("generators[0].b[0]"), "{err}");

    let broken = write(&dir, "broken.json", "{\"n\": 3,");
    assert_eq!(heisid(&["decide", s(&broken)]).status.code(), Some(2));
    assert_eq!(heisid(&["decide", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(heisid(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_output() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "ex.json", EXAMPLE);
    let one = heisid(&["--jobs", "1", "decide", s(&inst)]);
    let four = heisid(&["--jobs", "4", "decide", s(&inst)]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn oracle_reports_not_found_and_found() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "ex.json", EXAMPLE);
    let out = heisid(&["--format", "text", "oracle", "--input", s(&inst), "--max-len", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "not found <= 4");

    let pair = write(
        &dir,
        "pair.json",
        r#"{"n":3,"generators":[{"a":["1"],"b":["0"],"c":"0"},{"a":["-1"],"b":["0"],"c":"0"}]}"#,
    );
    let out = heisid(&["oracle", "--input", s(&pair), "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["sequence"], serde_json::json!([0, 1]));
}

#[test]
fn dioph_subcommand() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "sys.json", r#"{"A":[["2","3","-4","-1"]],"forced":[0,2]}"#);
    let out = heisid(&["dioph", s(&sys)]);
    assert_eq!(out.status.code(), Some(0));
    let y: Vec<i64> = stdout_json(&out)["solution"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(2 * y[0] + 3 * y[1] - 4 * y[2] - y[3], 0);
    assert!(y[0] > 0 && y[2] > 0);

    let none = write(&dir, "none.json", r#"{"A":[["1","1"]]}"#);
    assert_eq!(heisid(&["dioph", s(&none)]).status.code(), Some(1));
}

#[test]
fn pcp_subcommands() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "toy.json", r#"{"letters":["a1","a2"],"g":["ab","b"],"h":["a","bb"]}"#);
    let out = heisid(&["encode-pcp", s(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let ms = stdout_json(&out)["matrices"].as_array().unwrap().clone();
    assert_eq!(ms.len(), 5);
    assert_eq!(ms[4]["label"], "B");

    let out = heisid(&["pcp-witness", s(&p), "--solution", "a1 a2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["identity"], true);

    let out = heisid(&["pcp-witness", s(&p), "--solution", "a1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = heisid(&["pcp-witness", s(&p), "--solution", "a9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_embedding_passes() {
    let out = heisid(&["verify-embedding"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
}
