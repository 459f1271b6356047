use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kgraph"))
        .args(args)
        .output()
        .expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap_or(-1),
        json,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("kgraph-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn validate_omega() {
    let (code, out, err) = run(&["validate", "--builder", "omega:2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out["vertices"], 4);
    assert_eq!(out["flags"]["locally_convex"], true);
    assert!(err.contains("4 vertices"));
}

#[test]
fn validate_skeleton_file() {
    let torus = r#"{"k": 2, "vertices": ["v"],
        "edges": [{"id": "a", "color": 1, "range": "v", "source": "v"},
                  {"id": "b", "color": 2, "range": "v", "source": "v"}],
        "squares": [{"outer": ["a", "b"], "inner": ["b", "a"]}]}"#;
    let path = temp_file("torus.json", torus);
    let (code, out, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["vertices"], 1);
    assert_eq!(out["edges"], 2);

    let (code, out, _) = run(&["ktheory", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["K0_rank"], 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn bad_input_exits_with_one() {
    let path = temp_file("broken.json", "{\"k\": 2, \"vertices\": [");
    let (code, out, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out["error"].is_string());
    std::fs::remove_file(path).ok();

    let (code, out, _) = run(&["trace", "--builder", "nonsense:3"]);
    assert_eq!(code, 1);
    assert_eq!(out["error"], "usage");

    let (code, _, _) = run(&["validate"]);
    assert_eq!(code, 1);
}

#[test]
fn figure2_has_no_faithful_trace() {
    let (code, out, _) = run(&["trace", "--builder", "figure2:A"]);
    assert_eq!(code, 0);
    assert!(out["faithful_trace"].is_null());
    let forced = out["obstructions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|o| o["kind"] == "ForcedZeroVertex")
        .expect("forced-zero obstruction");
    assert!(forced["vertices"].as_array().unwrap().iter().any(|v| v == "w"));
}

#[test]
fn lambda_n_trace_with_full_check() {
    let (code, out, _) = run(&["trace", "--builder", "lambda_n:2,2", "--full-check", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["faithful_trace"]["v1"], out["faithful_trace"]["v2"]);
    assert_eq!(out["full_check"]["passed"], true);
}

#[test]
fn ends_and_ktheory_of_lambda_n() {
    let (code, out, _) = run(&["ends", "--builder", "lambda_n:3,1"]);
    assert_eq!(code, 0);
    assert_eq!(out["classes"].as_array().unwrap().len(), 1);
    assert_eq!(out["sufficient_condition"]["holds"], true);

    let (code, out, _) = run(&["ktheory", "--builder", "lambda_n:3,1"]);
    assert_eq!(code, 0);
    assert_eq!(out["K0_rank"], 2);
    assert_eq!(out["K1_rank"], 2);
}

#[test]
fn ktheory_without_ends_is_an_error() {
    let (code, out, _) = run(&["ktheory", "--builder", "figure2:A"]);
    assert_eq!(code, 1);
    assert_eq!(out["error"], "ktheory");
}

#[test]
fn algebra_check_passes() {
    let (code, out, err) = run(&[
        "algebra-check",
        "--builder",
        "omega:2,1,1",
        "--degree-cap",
        "1",
        "--samples",
        "20",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out["checks"]["CK4"]["failed"], 0);
    assert_eq!(out["checks"]["TraceProperty"]["passed"], 20);
}

#[test]
fn dixmier_reports_fit() {
    let (code, out, _) = run(&["dixmier", "--k", "1", "--nmax", "500"]);
    assert_eq!(code, 0);
    assert_eq!(out["C_k"], 2.0);
    assert!(out["rel_err"].as_f64().unwrap() < 0.02);
}

#[test]
fn pair_without_index() {
    let (code, out, _) = run(&["pair", "--example", "lambda_n", "--n", "4", "--no-index"]);
    assert_eq!(code, 0);
    assert_eq!(out["pairing"], -4);
    assert!(out["index"].is_null());

    let (code, _, _) = run(&["pair", "--example", "torus", "--n", "1"]);
    assert_eq!(code, 1);
}
