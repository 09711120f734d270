use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gtsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtsep")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn write_space(dir: &Path, name: &str, doc: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, doc).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn props_on_the_clopen_partition() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 4, "open_sets": [[], [0,1], [2,3], [0,1,2,3]]}"#);
    let out = gtsep(&["props", &f]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["separation"]["normal"], true);
    assert_eq!(doc["statements"]["GUL"]["holds"], true);
    assert_eq!(doc["statements"]["UL"]["holds"], true);
    assert_eq!(doc["clopen_separation"], true);
    assert_eq!(doc["u_normality"]["holds_up_to_n_max"], true);
}

#[test]
fn props_on_a_non_normal_space() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 3, "open_sets": [[], [0,1], [1,2], [0,1,2]]}"#);
    let doc = json(&gtsep(&["props", &f, "--u-normal-max", "1"]));
    assert_eq!(doc["separation"]["normal"], false);
    assert_eq!(doc["statements"]["UL"]["certificate"]["pair"], serde_json::json!([[0], [2]]));
    assert_eq!(doc["effective_normality"]["outcome"], "not_normal");
    assert_eq!(doc["u_normality"]["verdicts"].as_array().unwrap().len(), 2);
}

#[test]
fn validate_reports_the_missing_union() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 3, "open_sets": [[], [0,1], [1,2]]}"#);
    let out = gtsep(&["validate", &f]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["validation"]["is_gt"], false);
    assert_eq!(doc["validation"]["violation"]["kind"], "missing_union");
}

#[test]
fn witness_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 3, "open_sets": [[], [0,1], [1,2], [0,1,2]]}"#);
    let out = gtsep(&["witness", &f, "--a", "0", "--b", "2", "--mode", "ul"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["found"], false);
    let g = write_space(dir.path(), "y.json", r#"{"points": 4, "open_sets": [[], [0,1], [2,3], [0,1,2,3]]}"#);
    let out = gtsep(&["witness", &g, "--a", "[0,1]", "--b", "[2,3]"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["function"], serde_json::json!({"0": "0", "1": "0", "2": "1", "3": "1"}));
    assert_eq!(doc["ladder"]["mode"], "single");
    // {1} is not closed
    assert_eq!(gtsep(&["witness", &g, "--a", "1", "--b", "2,3"]).status.code(), Some(2));
}

#[test]
fn tau_and_product() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 3, "open_sets": [[], [0,1], [1,2], [0,1,2]]}"#);
    let doc = json(&gtsep(&["tau", &f]));
    assert_eq!(doc["topology"]["open_sets"], serde_json::json!([[], [1], [0, 1], [1, 2], [0, 1, 2]]));
    assert_eq!(doc["added"], serde_json::json!([[1]]));
    let a = write_space(dir.path(), "a.json", r#"{"points": 2, "open_sets": [[], [0], [0,1]]}"#);
    let b = write_space(dir.path(), "b.json", r#"{"points": 2, "open_sets": [[], [0,1]]}"#);
    let doc = json(&gtsep(&["product", &a, &b]));
    assert_eq!(doc["product"]["open_sets"], serde_json::json!([[], [0, 1], [0, 1, 2, 3]]));
    assert_eq!(doc["validation"]["is_strong"], true);
}

#[test]
fn census_counts_and_export_round_trip() {
    assert_eq!(json(&gtsep(&["census", "--points", "2"]))["count"], 4);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c3.jsonl");
    let doc = json(&gtsep(&["census", "--points", "3", "--out", out.to_str().unwrap()]));
    assert_eq!(doc["count"], 45);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 45);
    for (i, line) in text.lines().enumerate().step_by(4) {
        let f = write_space(dir.path(), &format!("s{i}.json"), line);
        let r = gtsep(&["validate", &f]);
        assert_eq!(r.status.code(), Some(0));
        assert_eq!(json(&r)["validation"]["is_gt"], true);
    }
    let normal = json(&gtsep(&["census", "--points", "3", "--where", "normal"]));
    let gul = json(&gtsep(&["census", "--points", "3", "--where", "gul"]));
    assert_eq!(normal["matching"], gul["matching"]);
    assert_eq!(gtsep(&["census", "--points", "9"]).status.code(), Some(2));
}

#[test]
fn real_urysohn_report() {
    let doc = json(&gtsep(&["real", "urysohn", "--a", "[0,1]", "--b", "[2,3]", "--space", "gtn"]));
    assert_eq!(doc["map"], "on (-inf,1): 0*x+0; at 1: 0; on (1,2): 1*x-1; at 2: 1; on (2,inf): 0*x+1");
    assert_eq!(doc["continuity"]["gtaun"], true);
    assert_eq!(doc["continuity"]["taun"], false);
    assert_eq!(doc["image"], "[0,1]");
}

#[test]
fn real_subverbs() {
    let doc = json(&gtsep(&["real", "closure", "--set", "(0,1)"]));
    assert_eq!(doc["closure"], "[0,1]");
    let doc = json(&gtsep(&["real", "classify", "--set", "[1,inf)", "--space", "gts"]));
    assert_eq!(doc["class"], "clopen");
    let doc = json(&gtsep(&["real", "effective-f", "--a", "[0,1]", "--b", "[2,3]"]));
    assert_eq!(doc["witness"]["u"], "(-inf,3/2)");
    assert_eq!(doc["witness"]["q"], "3/2");
    let doc = json(&gtsep(&["real", "ladder", "--a", "[0,1]", "--b", "[2,3]", "--level", "2"]));
    assert_eq!(doc["ladder"]["1/4"], "(-inf,4/3)");
    assert_eq!(doc["violation"], Value::Null);
    let doc = json(&gtsep(&["real", "extend", "--p", "[0,2]", "--f", "1/2*x", "--target", "gtaun"]));
    assert_eq!(doc["continuous"], true);
    let doc = json(&gtsep(&["real", "check-fn", "--f", "on (-inf,0]: 0; on (0,inf): 1", "--target", "taun"]));
    assert_eq!(doc["continuous"], false);
    assert_eq!(doc["connected"], false);
    let doc = json(&gtsep(&["real", "triple", "--f", "0"]));
    assert_eq!(doc["triple"]["u"], "all");
    assert_eq!(doc["triple"]["v"], "empty");
}

#[test]
fn errors_exit_two_with_positions() {
    let out = gtsep(&["real", "closure", "--set", "[0,1) | (2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 10"), "{err}");
    let out = gtsep(&["real", "urysohn", "--a", "[0,2]", "--b", "[1,3]"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(gtsep(&["props", "/nonexistent/space.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "bad.json", r#"{"points": 2, "open_sets": [[], [5]]}"#);
    assert_eq!(gtsep(&["validate", &f]).status.code(), Some(2));
    assert_eq!(gtsep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_renderings_agree() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_space(dir.path(), "x.json", r#"{"points": 3, "open_sets": [[], [0], [0,1], [0,1,2]]}"#);
    let first = gtsep(&["props", &f]);
    let second = gtsep(&["props", &f]);
    assert_eq!(first.stdout, second.stdout);
    let doc = json(&first);
    let text = String::from_utf8(gtsep(&["props", &f, "--format", "text"]).stdout).unwrap();
    assert!(text.contains(&format!("separation.normal: {}", doc["separation"]["normal"])));
    assert!(text.contains(&format!("statements.UL.holds: {}", doc["statements"]["UL"]["holds"])));
}
