use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_matfin")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("not JSON ({e}): {stdout}"));
    (out.status.code().unwrap(), stdout, json)
}

#[test]
fn unipotent_pair_is_finite_of_order_four() {
    let (code, _, v) = run(&["is-finite", &data("unipotent_pair.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], true);
    let (code, _, v) = run(&["order", &data("unipotent_pair.json"), "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], "4");
}

#[test]
fn orders_of_sample_groups() {
    for (file, order) in [("gl23_conjugate.json", "48"), ("monomial_gl35.json", "384"), ("diag_t_f4.json", "3")] {
        let (code, _, v) = run(&["order", &data(file)]);
        assert_eq!(code, 0, "{file}");
        assert_eq!(v["order"], order, "{file}");
        assert!(v["nu"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn cr_shortcut_on_diagonal_group() {
    let (code, _, v) = run(&["order", &data("diag_t_f4.json"), "--cr-shortcut"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], "3");
}

#[test]
fn diagonal_x_is_infinite() {
    let (code, _, v) = run(&["is-finite", &data("diagX.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], false);
    assert_eq!(v["evidence"], "ZeroInvariantModule");
    let (code, _, v) = run(&["is-finite", &data("diagX.json"), "--nilpotent"]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], false);
    let (code, _, v) = run(&["element-order-finite", &data("diagX.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], false);
}

#[test]
fn order_of_infinite_group_runs_out_of_budget() {
    let (code, _, v) = run(&["order", &data("diagX.json"), "--budget", "4"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
}

#[test]
fn oracle_results() {
    let (code, _, v) = run(&["oracle", &data("gl23_conjugate.json"), "--cap", "1000"]);
    assert_eq!(code, 0);
    assert_eq!((v["finite"].clone(), v["order"].clone()), (Value::Bool(true), Value::from("48")));
    let (code, _, v) = run(&["oracle", &data("diagX.json"), "--cap", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], false);
    let (code, _, v) = run(&["oracle", &data("monomial_gl35.json"), "--cap", "10"]);
    assert_eq!(code, 2);
    assert!(v["finite"].is_null());
}

#[test]
fn trace_records_steps() {
    let (_, _, v) = run(&["is-finite", &data("diagX.json"), "--trace"]);
    let steps: Vec<&str> = v["trace"].as_array().unwrap().iter().map(|e| e["step"].as_str().unwrap()).collect();
    assert!(steps.contains(&"admissible"));
    assert_eq!(steps.last(), Some(&"module"));
}

#[test]
fn same_seed_same_bytes() {
    for file in ["unipotent_pair.json", "gl23_conjugate.json", "monomial_gl35.json"] {
        for args in [["is-finite", "--trace"], ["order", "--budget=64"]] {
            let full = [args[0], &data(file), "--seed", "11", args[1]];
            let (_, a, _) = run(&full);
            let (_, b, _) = run(&full);
            assert_eq!(a, b, "{args:?} {file}");
        }
    }
}

#[test]
fn input_errors_exit_one_with_json() {
    let cases = [
        vec!["is-finite".to_string(), "/nonexistent/group.json".to_string()],
        vec!["is-finite".to_string(), scratch("bad_json.json", "{\"p\": 2,")],
        vec!["is-finite".to_string(), scratch("bad_prime.json", r#"{"p":4,"vars":["X"],"generators":[[["1"]]]}"#)],
        vec![
            "is-finite".to_string(),
            scratch("bad_expr.json", r#"{"p":2,"vars":["X"],"generators":[[["X+","0"],["0","1"]]]}"#),
        ],
        vec![
            "is-finite".to_string(),
            scratch("singular.json", r#"{"p":2,"vars":["X"],"generators":[[["X","X"],["X","X"]]]}"#),
        ],
        vec!["element-order-finite".to_string(), data("gl23_conjugate.json")],
        vec!["no-such-command".to_string()],
    ];
    for args in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, v) = run(&refs);
        assert_eq!(code, 1, "{args:?}");
        assert!(v["error"].is_string(), "{args:?}");
    }
}
