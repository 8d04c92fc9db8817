//! End-to-end tests of the `perdoub` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn perdoub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perdoub"))
        .args(args)
        .env_remove("PERDOUB_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = perdoub(&full);
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

/// Parses `key=value` lines, skipping anything else.
fn fields(text: &str) -> Vec<(String, String)> {
    text.split_whitespace()
        .filter_map(|tok| tok.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

#[test]
fn d_prefix() {
    let o = perdoub(&["d", "--length", "32"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "01000101010001000100010101000101\n");
    assert_eq!(json(&["d", "--length", "32"])["word"], "01000101010001000100010101000101");
}

#[test]
fn good_verdicts_and_exit_codes() {
    let o = perdoub(&["good", "00101000"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "good\n"));
    let o = perdoub(&["good", "00010100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not good: p00010100 at 0"));
}

#[test]
fn good_json_schema() {
    let o = perdoub(&["good", "00101000", "--json"]);
    assert_eq!(stdout(&o), "{\"word\":\"00101000\",\"good\":true,\"violation\":null}\n");
    let v = json(&["good", "0011"]);
    assert_eq!(v["good"], false);
    assert_eq!(v["violation"]["kind"], "factor11");
    assert_eq!(v["violation"]["start"], 2);
    assert_eq!(v["violation"]["X"], "11");
    assert_eq!(v["violation"]["Y"], Value::Null);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["good", "0120"][..],
        &["good", ""],
        &["d"],
        &["fife", "walk", "--letters", "abc"],
        &["extremal", "--length", "4"],
        &["classify", "0101", "--max-image", "0"],
        &["nonsense"],
        &["verify", "--suite", "nonsense"],
    ] {
        assert_eq!(perdoub(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn module_errors_exit_3() {
    let o = perdoub(&["factorize", "0110"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("11"));
    assert_eq!(
        perdoub(&["fife", "walk", "--seed", "001", "--letters", "b", "--seed", "01"]).status.code(),
        Some(2)
    );
    assert_eq!(perdoub(&["fife", "enumerate", "--depth", "9"]).status.code(), Some(3));
}

#[test]
fn count_good_respects_env_bound() {
    let o = perdoub(&["count-good", "--max-length", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("4 6"));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());

    let o = Command::new(env!("CARGO_BIN_EXE_perdoub"))
        .args(["count-good", "--max-length", "6"])
        .env("PERDOUB_MAX_ENUM", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn factorize_round_trip() {
    let o = perdoub(&["factorize", "00101000"]);
    assert_eq!(stdout(&o), "a=0 core=001 b=0\n");
    let o = perdoub(&["--json", "factorize", "00101000"]);
    assert_eq!(stdout(&o), "{\"a\":\"0\",\"core\":\"001\",\"b\":\"0\"}\n");

    let word = "0100010101000100";
    let text = stdout(&perdoub(&["factorize", word, "--full"]));
    let v = json(&["factorize", word, "--full"]);
    let first = text.lines().next().unwrap();
    for (k, val) in fields(first) {
        assert_eq!(v[k.as_str()], val.as_str());
    }
    let layers = v["layers"].as_array().unwrap();
    let text_layers: Vec<_> = text.lines().filter(|l| l.starts_with("layer")).collect();
    assert_eq!(layers.len(), text_layers.len());
    for (layer, line) in layers.iter().zip(text_layers) {
        for (k, val) in fields(line) {
            assert_eq!(layer[k.as_str()], val.as_str());
        }
    }
    let terminal = text.lines().last().unwrap().strip_prefix("terminal_core=").unwrap();
    assert_eq!(v["terminal_core"], terminal);
}

#[test]
fn fife_walk_round_trip() {
    for (seed, letters, state, ideal) in [
        ("01", "gb", "sink", false),
        ("01", "bag", "sink", true),
        ("01", "aaa", "a", false),
        ("001", "bga", "bga", false),
        ("001", "babb", "b", true),
    ] {
        let args = ["fife", "walk", "--seed", seed, "--letters", letters];
        let text = stdout(&perdoub(&args));
        let v = json(&args);
        let f = fields(&text);
        assert_eq!(f[1], ("state".to_string(), state.to_string()));
        assert_eq!(f[2], ("ideal".to_string(), ideal.to_string()));
        assert_eq!(v["word"], f[0].1.as_str());
        assert_eq!(v["state"], state);
        assert_eq!(v["ideal"], ideal);
    }
}

#[test]
fn fife_enumerate_round_trip() {
    let args = ["fife", "enumerate", "--seed", "01", "--depth", "3"];
    let text = stdout(&perdoub(&args));
    let v = json(&args);
    let rows = v["accepted"].as_array().unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(rows.len(), lines.len());
    for (row, line) in rows.iter().zip(lines) {
        let (letters, word) = line.split_once(' ').unwrap();
        assert_eq!(row["letters"], letters);
        assert_eq!(row["word"], word);
    }
    assert!(!text.contains("gb "));
}

#[test]
fn extremal_modes() {
    let greedy = stdout(&perdoub(&["extremal", "--greatest", "--length", "16", "--mode", "greedy"]));
    let fixed = stdout(&perdoub(&["extremal", "--greatest", "--length", "16"]));
    assert_eq!(greedy, "1010100010101000\n");
    assert_eq!(greedy, fixed);
    let o = perdoub(&["extremal", "--least", "--length", "24", "--verify", "--horizon", "96"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree=true"));
    assert_eq!(json(&["extremal", "--least", "--length", "4"])["word"], "0001");
}

#[test]
fn classify_round_trip() {
    for p in ["0010100", "0000", "11011", "000111000"] {
        let text = stdout(&perdoub(&["classify", p]));
        let v = json(&["classify", p]);
        let f: std::collections::HashMap<_, _> = fields(&text).into_iter().collect();
        assert_eq!(v["pattern"], f["pattern"].as_str());
        assert_eq!(v["encountered"].to_string(), f["encountered"]);
        assert_eq!(v["reason"], f["reason"].as_str());
        assert_eq!(v["complemented"].to_string(), f["complemented"]);
        match v["witness"].as_object() {
            Some(wit) => {
                assert_eq!(wit["start"].to_string(), f["start"]);
                assert_eq!(wit["X"].as_str().unwrap_or("-"), f["X"]);
                assert_eq!(wit["Y"].as_str().unwrap_or("-"), f["Y"]);
            }
            None => assert_eq!(f["witness"], "none"),
        }
    }
    let v = json(&["classify", "0010100"]);
    assert_eq!(v["reason"], "sporadic");
    assert_eq!(v["witness"]["X"], "0");
    assert_eq!(v["witness"]["Y"], "010");
    assert_eq!(json(&["classify", "0000"])["encountered"], false);
}

#[test]
fn verify_suites() {
    let o = perdoub(&["verify", "--show-config"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("horizon") && text.contains("64"));
    let v = json(&["verify", "--show-config"]);
    assert_eq!(v["window"], 4096);
    assert_eq!(v["max_image_negative"], 6);

    for suite in ["word", "goodness", "factorization", "extremal", "patterns"] {
        let o = perdoub(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let v = json(&["verify", "--suite", "fife"]);
    let a01: Vec<_> =
        v.as_array().unwrap().iter().filter(|o| o["name"].as_str().unwrap().starts_with("a01")).collect();
    assert_eq!(a01.len(), 3);
    assert!(a01.iter().all(|o| o["passed"] == true));
}
