use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidfloer"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn schema() -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

fn assert_valid(schema: &jsonschema::JSONSchema, line: &str) -> Value {
    let value: Value = serde_json::from_str(line).expect("report is JSON");
    if let Err(errors) = schema.validate(&value) {
        let messages: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("schema violations for {line}:\n{}", messages.join("\n"));
    }
    value
}

const SUITE: &str = "\
# calibration
d=2; s1
d=3; s1 s2
d=3; s1^-1 s2^-1   # inverse cycle
d=4; s1 s2 s3 t2
d=5; s1 s2 s3 s4 s1 s1^-1 s2 s2
d=6; s5 s4 s3 s2 s1

d=3;
d=4; s1 s3
";

#[test]
fn half_twist_json() {
    let out = run(&["--braid", "d=2; s1", "--format", "json"]);
    assert!(out.status.success());
    let v = assert_valid(
        &schema(),
        std::str::from_utf8(&out.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["hf_beta"]["hf_lower_bound"], 2);
    assert_eq!(v["characteristic_numbers"]["c2"], 48);
    assert_eq!(v["characteristic_numbers"]["c1_squared"], 0);
    assert_eq!(
        v["pi1"]["abelianization"]["structure"]["display"],
        "Z ⊕ Z/2"
    );
}

#[test]
fn non_transitive_is_partial_with_warning() {
    let out = run(&["--braid", "d=3;", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("warning:      braid not transitive"));
    assert!(!text.contains("pi1"));

    let out = run(&["--braid", "d=3;", "--format", "json"]);
    let v = assert_valid(
        &schema(),
        std::str::from_utf8(&out.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["lefschetz"], -1);
    assert!(v.get("nielsen").is_none() && v.get("characteristic_numbers").is_none());
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--braid", "d=2; x1"]).status.code(), Some(2));
    assert_eq!(run(&["--braid", "d=1;"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(3));
    assert_eq!(
        run(&["--braid", "d=2; s1", "--batch", "f"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["--braid", "d=2; s1", "--format", "xml"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["--batch", "/nonexistent/braids.txt"]).status.code(),
        Some(3)
    );
    let version = run(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
    assert!(String::from_utf8(version.stdout)
        .unwrap()
        .starts_with("braidfloer "));
}

#[test]
fn batch_matches_single_runs_and_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("braids.txt");
    fs::write(&path, SUITE).unwrap();
    let schema = schema();
    for format in ["json", "text"] {
        let batch = run(&["--batch", path.to_str().unwrap(), "--format", format]);
        assert!(batch.status.success());
        let mut expected = Vec::new();
        for line in SUITE.lines() {
            let content = line.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let single = run(&["--braid", content, "--format", format]);
            assert!(single.status.success());
            expected.extend(single.stdout);
        }
        assert_eq!(
            String::from_utf8(batch.stdout.clone()).unwrap(),
            String::from_utf8(expected).unwrap()
        );
        if format == "json" {
            let text = String::from_utf8(batch.stdout).unwrap();
            assert_eq!(text.lines().count(), 8);
            for line in text.lines() {
                assert_valid(&schema, line);
            }
        }
    }
}

#[test]
fn batch_parse_error_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("braids.txt");
    fs::write(&path, "d=2; s1\n\nd=3; s7\n").unwrap();
    let out = run(&["--batch", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
}

#[test]
fn refine_and_relaxed_flags() {
    let schema = schema();
    let out = run(&[
        "--braid",
        "d=4; s1 s2 s3",
        "--refine-depth",
        "2",
        "--format",
        "json",
    ]);
    let v = assert_valid(
        &schema,
        std::str::from_utf8(&out.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["nielsen"]["refinement"]["depth"], 2);
    assert_eq!(v["nielsen"]["refinement"]["certified"], false);

    let strict = run(&["--braid", "d=3; s2 s1", "--format", "json"]);
    let v = assert_valid(
        &schema,
        std::str::from_utf8(&strict.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["transitive"], false);
    let relaxed = run(&["--braid", "d=3; s2 s1", "--relaxed", "--format", "json"]);
    let v = assert_valid(
        &schema,
        std::str::from_utf8(&relaxed.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["transitive"], true);
    assert!(v["relabeling"].is_array());
    assert_eq!(v["pi1"]["abelianization"]["matches_target"], true);
}

#[test]
fn custom_config() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pieces.json");
    let config = r#"{
        "pieces": [
            {"name": "M1", "euler_characteristic": 0, "signature": 0,
             "tori": [{"name": "H1", "volume": "d"}]},
            {"name": "E", "euler_characteristic": 12, "signature": -8,
             "tori": [{"name": "F", "volume": "d"}]}
        ],
        "pairings": [["H1", "F"]]
    }"#;
    fs::write(&path, config).unwrap();
    let out = run(&[
        "--braid",
        "d=2; s1",
        "--config",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = assert_valid(
        &schema(),
        std::str::from_utf8(&out.stdout).unwrap().trim_end(),
    );
    assert_eq!(v["characteristic_numbers"]["c2"], 12);
    assert_eq!(v["characteristic_numbers"]["c1_squared"], 0);

    fs::write(&path, "{ not json").unwrap();
    let out = run(&["--braid", "d=2; s1", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
