//! End-to-end tests of the `parmod` binary.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

/// Run `parmod <args> --json` with `input` on standard input.
fn run_stdin(args: &[&str], input: &Value) -> (i32, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parmod"))
        .args(args)
        .arg("--json")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn parmod");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.to_string().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn run_args(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_parmod"))
        .args(args)
        .output()
        .expect("run parmod");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn parse(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("stdout is JSON")
}

fn point(label: &str, weights: &[&str]) -> Value {
    json!({ "label": label, "weights": weights })
}

#[test]
fn invariant_of_a_single_point() {
    let doc = json!({ "r": 2, "d": 0, "points": [point("x", &["0", "1/3"])] });
    let (code, out) = run_stdin(&["invariant"], &doc);
    assert_eq!(code, 0);
    let v = parse(&out);
    let values: Vec<&str> = v["invariant"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["M"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["0", "-1"]);
}

#[test]
fn input_from_a_file_matches_standard_input() {
    let doc = json!({ "r": 2, "d": 0, "points": [point("x", &["0", "1/3"])] });
    let path = std::env::temp_dir().join(format!("parmod-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, doc.to_string()).unwrap();
    let from_file = run_args(&["invariant", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file, run_stdin(&["invariant"], &doc));
}

#[test]
fn same_chamber_reports_the_crossed_wall() {
    let doc = json!({
        "r": 2, "d": 1,
        "points": [point("x", &["0", "2/5"]), point("y", &["0", "1/4"])],
        "target": { "points": [point("x", &["0", "4/5"]), point("y", &["0", "3/4"])] },
    });
    let (code, out) = run_stdin(&["same-chamber"], &doc);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["same"], false);
    assert!(v["walls"]
        .as_array()
        .unwrap()
        .contains(&json!({ "subrank": 1, "subsets": [[1], [1]], "level": "1", "relevant": true })));
}

#[test]
fn normalize_round_trips() {
    let doc = json!({ "r": 3, "points": [point("x", &["1/6", "1/2", "5/6"]), point("y", &["1/4", "1/2", "3/4"])] });
    let (code, out) = run_stdin(&["normalize"], &doc);
    assert_eq!(code, 0);
    let first = parse(&out);
    assert_eq!(first["points"][0]["weights"], json!(["0", "1/3", "2/3"]));
    assert_eq!(first["points"][1]["weights"], json!(["0", "1/4", "1/2"]));
    let (code, out) = run_stdin(
        &["normalize"],
        &json!({ "r": 3, "points": [point("x", &["-1/2", "0", "1/3"])] }),
    );
    assert_eq!(code, 1);
    assert!(parse(&out)["error"]["message"]
        .as_str()
        .unwrap()
        .contains("[0, 1)"));
    let again = json!({ "r": 3, "points": first["points"] });
    let (_, out2) = run_stdin(&["normalize"], &again);
    assert_eq!(parse(&out2), first);
}

#[test]
fn transforms_compose_and_invert() {
    let t = json!({ "perm": [0], "sign": -1, "tdeg": 1, "hecke": [1] });
    let doc = json!({ "r": 3, "d": -1, "points": [point("x", &["1/8", "3/8", "7/8"])], "transforms": [t, t] });
    let (code, out) = run_stdin(&["compose"], &doc);
    assert_eq!(code, 0);
    assert_eq!(
        parse(&out)["transform"],
        json!({ "perm": [0], "sign": 1, "tdeg": 0, "hecke": [0] })
    );

    let doc =
        json!({ "r": 3, "d": -1, "points": [point("x", &["1/8", "3/8", "7/8"])], "transform": t });
    let (code, out) = run_stdin(&["transform"], &doc);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["d"], -1);
    assert_eq!(v["points"][0]["weights"], json!(["0", "1/4", "3/4"]));
}

#[test]
fn automorphisms_of_the_swap_family() {
    let doc = json!({
        "r": 2, "d": 0, "genus": 3,
        "points": [point("x", &["1/10", "7/10"]), point("y", &["1/5", "3/5"])],
        "symmetries": [{ "perm": ["x", "y"], "multiplicity": 1 }, { "perm": ["y", "x"], "multiplicity": 1 }],
    });
    let (code, out) = run_stdin(&["aut"], &doc);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(
        v["classes"],
        json!([
            { "perm": [0, 1], "sign": 1, "tdeg": 0, "hecke": [0, 0] },
            { "perm": [1, 0], "sign": 1, "tdeg": 1, "hecke": [1, 1] },
        ])
    );
    assert_eq!(v["order"], "128");
}

#[test]
fn matrix_commands() {
    let (code, out) = run_args(&["matrix-xi", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse(&out)["xi"],
        json!([[0, 0, 1, 0], [0, 0, 1, 0], [-1, -1, 0, -1], [0, 0, 1, 0]])
    );

    let doc = json!({ "matrix": [["1", "2"], ["2", "4"]] });
    let (code, out) = run_stdin(&["matrix-rank1"], &doc);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["rank_at_most_one"], true);
    assert_eq!(v["column"], json!([["1"], ["2"]]));
}

#[test]
fn domain_errors_exit_one_with_an_error_object() {
    let doc = json!({ "r": 3, "points": [point("x", &["0", "1/3", "1/3"])] });
    let (code, out) = run_stdin(&["generic"], &doc);
    assert_eq!(code, 1);
    let v = parse(&out);
    assert_eq!(v["error"]["kind"], "invalid_weights");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("strictly increasing"));
}

#[test]
fn malformed_input_exits_two() {
    for doc in [
        json!({ "r": 2, "points": [point("x", &["0.5", "1/3"])] }),
        json!({ "r": 2, "bogus": 1 }),
        json!([1, 2, 3]),
    ] {
        let (code, out) = run_stdin(&["normalize"], &doc);
        assert_eq!(code, 2, "{doc}");
        assert_eq!(parse(&out)["error"]["kind"], "malformed_input");
    }
}

#[test]
fn fixtures_pass_and_output_is_deterministic() {
    let (code, first) = run_args(&["fixtures"]);
    assert_eq!(code, 0);
    let v = parse(&first);
    assert_eq!(v["failed"], 0);
    assert!(v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
    assert_eq!(run_args(&["fixtures"]), (0, first));

    let doc = json!({ "r": 3, "d": 1, "points": [point("x", &["0", "1/5", "1/2"]), point("y", &["0", "1/7", "2/3"])] });
    assert_eq!(
        run_stdin(&["invariant"], &doc),
        run_stdin(&["invariant"], &doc)
    );
}
