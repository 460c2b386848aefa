use std::process::{Command, Output};

use serde_json::Value;

fn akcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akcheck"))
        .args(args)
        .env_remove("AKCHECK_WORKERS")
        .output()
        .expect("spawn akcheck")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = akcheck(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("json report"))
}

fn strip_timing(mut v: Value) -> Value {
    for r in v["results"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("duration_ms");
    }
    v
}

#[test]
fn coeffs_examples() {
    let o = akcheck(&["coeffs", "--k", "5", "--n", "19", "--modulus", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).split_whitespace().collect::<Vec<_>>(), ["19", "0"]);

    let o = akcheck(&["coeffs", "--k", "2", "--n", "3", "--modulus", "11", "--exact"]);
    assert_eq!(stdout(&o).split_whitespace().last(), Some("8"));

    let o = akcheck(&["coeffs", "--k", "1", "--n", "4", "--exact"]);
    assert_eq!(stdout(&o).split_whitespace().last(), Some("5"));
}

#[test]
fn coeffs_exact_column_stops_at_oracle_limit() {
    let o = akcheck(&["coeffs", "--k", "1", "--n", "60-61", "--exact"]);
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    assert_eq!(rows[0].len(), 3);
    assert_eq!(rows[1].len(), 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["coeffs", "--k", "0", "--n", "3"][..],
        &["coeffs", "--k", "1", "--n", "5-2"],
        &["verify", "family", "--alpha", "x"],
        &["verify", "nonsense"],
        &["verify", "ramanujan", "--modulus", "13"],
        &["verify", "eta-check", "--level", "12", "--r", "5:2"],
        &["verify", "sturm"],
    ] {
        assert_eq!(akcheck(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn precision_below_sturm_is_refused_with_minimum() {
    let o = akcheck(&["verify", "internal", "--alpha", "1", "--precision", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("1701"), "{err}");
}

#[test]
fn internal_alpha_1_cites_sturm_bound() {
    let (code, v) = json(&["verify", "internal", "--alpha", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify internal");
    assert_eq!(v["results"][0]["bound"], 1700);
    assert_eq!(v["results"][0]["status"], "pass");
}

#[test]
fn internal_failure_exits_1() {
    let (code, v) = json(&["verify", "internal", "--alpha", "2", "--direct", "--n-max", "20"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["first_failure"], 0);
}

#[test]
fn family_theorem_list_passes() {
    let (code, v) = json(&["verify", "family", "--alpha", "all", "--k", "0,1", "--n-max", "50"]);
    assert_eq!(code, 0);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 50);
    let keys: Vec<(u64, u64)> = results
        .iter()
        .map(|r| (r["alpha"].as_u64().unwrap(), r["k"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in results {
        for field in ["claim", "bound", "precision", "status", "first_failure", "duration_ms"] {
            assert!(r.get(field).is_some(), "missing {field}");
        }
    }
}

#[test]
fn ramanujan_passes() {
    let (code, v) = json(&["verify", "ramanujan", "--n-max", "5000"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 5);
}

#[test]
fn reports_are_deterministic_across_worker_counts() {
    let args = ["verify", "scan", "--alpha", "0-15", "--n-max", "20", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_akcheck"))
        .args(args)
        .env("AKCHECK_WORKERS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_akcheck"))
        .args(args)
        .env("AKCHECK_WORKERS", "4")
        .output()
        .unwrap();
    let mut a = strip_timing(serde_json::from_slice(&one.stdout).unwrap());
    let mut b = strip_timing(serde_json::from_slice(&many.stdout).unwrap());
    assert_eq!(a["config"]["workers"], 1);
    a["config"]["workers"] = Value::Null;
    b["config"]["workers"] = Value::Null;
    assert_eq!(a, b);
    assert_eq!(one.status.code(), Some(1));
}

#[test]
fn eta_check_examples() {
    let (code, v) = json(&["verify", "eta-check", "--level", "12", "--r", "1:184,2:4", "--e4", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["status"], "pass");
    // eta(z)^-2 has a pole at infinity.
    let (code, _) = json(&["verify", "eta-check", "--level", "2", "--r", "1:-2"]);
    assert_eq!(code, 1);
}

#[test]
fn sturm_examples() {
    let (code, v) = json(&["verify", "sturm", "--weight", "850", "--level", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["bound"], 1700);
    let (_, v) = json(&["verify", "sturm", "--weight", "12", "--level", "1"]);
    assert_eq!(v["results"][0]["bound"], 1);
}

#[test]
fn output_file_holds_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("base.json");
    let o = akcheck(&[
        "verify", "base", "--alpha", "0-2", "--n-max", "10", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
    assert!(stdout(&o).contains("3/3 passed"));
}
