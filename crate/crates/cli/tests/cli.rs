use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn invfac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invfac"))
        .args(args)
        .env_remove("INVFAC_TOL")
        .env_remove("INVFAC_MAX_TERMS")
        .env_remove("INVFAC_FORMAT")
        .env_remove("INVFAC_TOL_SCALE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_value(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid json")
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("invfac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn eval_nielsen_beta_at_one() {
    let o = invfac(&["eval", "nielsen_beta_fac", "z=1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_value(&o);
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-10);
    assert_eq!(v["name"], "nielsen_beta_fac");
    assert_eq!(v["params"]["z"], "1");
}

#[test]
fn eval_rational_p_hansen_entry() {
    let o = invfac(&["eval", "rational_p", "p=1", "z=3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!((json_value(&o)["value"].as_f64().unwrap() - 0.5).abs() < 1e-10);
}

#[test]
fn eval_flags_match_positional() {
    let a = invfac(&["eval", "rational_p", "p=1", "z=3", "--format", "json"]);
    let b = invfac(&[
        "eval",
        "rational_p",
        "--p",
        "1",
        "--z",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn eval_domain_violation_exits_two() {
    let o = invfac(&["eval", "reciprocal", "z=0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("z > 1"));
}

#[test]
fn eval_unknown_key_lists_valid_keys() {
    let o = invfac(&["eval", "digamma", "z=2"]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    for key in [
        "zeta",
        "hurwitz",
        "trigamma_fac",
        "beta_asym",
        "incgamma_asym",
        "polylog",
    ] {
        assert!(err.contains(key), "{key} missing from {err}");
    }
}

#[test]
fn eval_bad_params_exit_two() {
    for args in [
        &["eval", "zeta", "k=1/2"][..],
        &["eval", "zeta", "q=3"],
        &["eval", "zeta", "k"],
        &["eval", "trigamma_fac"],
        &["eval", "polylog", "x=1"],
        &["eval", "zeta", "--tol", "0"],
    ] {
        assert_eq!(invfac(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_json_round_trips_byte_identically() {
    for args in [
        &["eval", "zeta", "k=2", "--format", "json"][..],
        &["eval", "hurwitz", "k=1", "a=1/2", "--format", "json"],
        &["eval", "trigamma_asym", "z=10", "--format", "json"],
        &["eval", "log_gamma", "z=5", "--format", "json"],
    ] {
        let out = stdout(&invfac(args));
        let parsed: Value = serde_json::from_str(&out).unwrap();
        let keys: Vec<&str> = parsed
            .as_object()
            .unwrap()
            .keys()
            .map(|k| k.as_str())
            .collect();
        assert_eq!(keys.len(), 6);
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again, out, "{args:?}");
    }
}

#[test]
fn eval_text_and_csv() {
    let text = stdout(&invfac(&["eval", "log_shift_plus", "z=1"]));
    assert!(text.starts_with("name: log_shift_plus\nparams: z=1\nvalue: 0.69314718"));
    assert!(text.contains("converged: true"));
    let csv = stdout(&invfac(&[
        "eval", "incgamma", "x=1", "z=2", "--format", "csv",
    ]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "name,params,value,terms_used,error_estimate,converged"
    );
    assert!(lines[1].starts_with("incgamma,x=1;z=2,0.71828182845"));
}

#[test]
fn eval_asymptotic_and_extras() {
    let v = json_value(&invfac(&[
        "eval",
        "incgamma_asym",
        "z=15",
        "x=1",
        "--format",
        "json",
    ]));
    let mut term = 1.0 / 15.0;
    let mut sum = 0.0;
    for k in 1..40 {
        sum += term;
        term /= 15.0 + f64::from(k);
    }
    let exact = (-1.0f64).exp() * sum;
    assert!((v["value"].as_f64().unwrap() - exact).abs() < v["error_estimate"].as_f64().unwrap());

    let v = json_value(&invfac(&[
        "eval",
        "log_gamma",
        "--z",
        "10",
        "--format",
        "json",
    ]));
    assert!((v["value"].as_f64().unwrap() - 362880f64.ln()).abs() < 1e-10);

    let v = json_value(&invfac(&[
        "eval", "polylog", "k=1", "x=1/2", "--format", "json",
    ]));
    assert!((v["value"].as_f64().unwrap() - 0.5822405264650125).abs() < 1e-10);
}

#[test]
fn env_defaults_apply() {
    let o = Command::new(env!("CARGO_BIN_EXE_invfac"))
        .args(["eval", "zeta", "k=1"])
        .env("INVFAC_FORMAT", "json")
        .env("INVFAC_MAX_TERMS", "50")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms_used"], 50);
    assert_eq!(v["converged"], false);
}

#[test]
fn verify_filter_runs_only_matching_checks() {
    let o = invfac(&["verify", "filter=log_shift_minus", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_value(&o);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries
        .iter()
        .all(|e| e["name"].as_str().unwrap().starts_with("log_shift_minus")));
    let names: Vec<&str> = entries
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(v["overall_pass"], true);
}

#[test]
fn verify_tightened_tolerance_fails() {
    let o = invfac(&["verify", "filter=zeta_partial_sums_k2", "tol_scale=0.001"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_tol_scale_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_invfac"))
        .args(["verify", "--filter", "zeta_partial_sums_k2"])
        .env("INVFAC_TOL_SCALE", "0.001")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_unmatched_filter_exits_two() {
    assert_eq!(
        invfac(&["verify", "filter=no_such_check"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_json_round_trips() {
    let out = stdout(&invfac(&[
        "verify",
        "filter=stirling_tables",
        "--format",
        "json",
    ]));
    let parsed: Value = serde_json::from_str(&out).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(again, out);
}

#[test]
fn table_stirling1_row_four() {
    let o = invfac(&["table", "stirling1", "rows=5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(4), Some("4: 0, 6, 11, 6, 1"));
}

#[test]
fn table_bernoulli_and_binet() {
    let v = json_value(&invfac(&[
        "table",
        "bernoulli",
        "--rows",
        "4",
        "--format",
        "json",
    ]));
    assert_eq!(
        v["rows"],
        serde_json::json!([["1"], ["-1/2"], ["1/6"], ["0"]])
    );
    let v = json_value(&invfac(&["table", "binet", "rows=3", "--format", "json"]));
    assert_eq!(v["rows"], serde_json::json!([["0"], ["1/12"], ["1/12"]]));
}

#[test]
fn table_stirling2_csv_order() {
    let csv = stdout(&invfac(&[
        "table",
        "stirling2",
        "rows=3",
        "--format",
        "csv",
    ]));
    assert_eq!(csv, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
}

#[test]
fn table_rows_out_of_range() {
    assert_eq!(
        invfac(&["table", "cauchy1", "rows=0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        invfac(&["table", "cauchy1", "rows=201"]).status.code(),
        Some(2)
    );
    assert_eq!(
        invfac(&["table", "euler0", "rows=200"]).status.code(),
        Some(0)
    );
}

#[test]
fn transform_forward_row_sums() {
    let p = temp_file("ones.txt", "# ones\n1\n1\n1\n1\n");
    let o = invfac(&["transform", p.to_str().unwrap(), "--direction", "forward"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1\n2\n6\n");
}

#[test]
fn transform_round_trip() {
    let p = temp_file("mixed.txt", "3/7\n-2\n0\n5/11\n1/2\n");
    let fwd = stdout(&invfac(&["transform", "--in", p.to_str().unwrap()]));
    let q = temp_file("mixed_fwd.txt", &fwd);
    let back = stdout(&invfac(&[
        "transform",
        "--in",
        q.to_str().unwrap(),
        "--direction",
        "inverse",
    ]));
    assert_eq!(back, "3/7\n-2\n0\n5/11\n1/2\n");
}

#[test]
fn transform_json_input_beta_coefficients() {
    let p = temp_file("beta.json", r#"["1/2", "1/4", "1/4", "3/8"]"#);
    let o = invfac(&[
        "transform",
        p.to_str().unwrap(),
        "--direction",
        "inverse",
        "--format",
        "json",
    ]);
    let v = json_value(&o);
    assert_eq!(v, serde_json::json!(["1/2", "1/4", "0", "-1/8"]));
}

#[test]
fn transform_parse_error_reports_line() {
    let p = temp_file("bad.txt", "1\n2\nnot-a-number\n");
    let o = invfac(&["transform", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn transform_missing_input_exits_two() {
    assert_eq!(invfac(&["transform"]).status.code(), Some(2));
    assert_eq!(
        invfac(&["transform", "/nonexistent/seq.txt"]).status.code(),
        Some(2)
    );
}
