use gelfond_cli::{run_args, REPORT_FIELDS};
use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gelfond").chain(args.iter().copied());
    let code = run_args(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, value)
}

#[test]
fn gelfond_identity_as_json() {
    let (code, out, _) = run(&["verify", "--id", "eq1.1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 1);
    let obj = &items[0];
    assert_eq!(obj["id"], "eq1.1");
    assert_eq!(obj["verdict"], "Pass");
    assert_eq!(obj["series_status"], "Converged");
    assert!(obj["n"].is_null() && obj["lambda"].is_null());
    assert!(obj["rel_residual"].as_f64().unwrap() <= 1e-12);
    // field order is part of the format
    let positions: Vec<usize> = REPORT_FIELDS
        .iter()
        .map(|k| out.find(&format!("\"{k}\":")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn every_report_has_exactly_the_schema_fields() {
    let (code, v) = json(&["verify", "--format", "json"]);
    assert_eq!(code, 0);
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 40);
    for item in items {
        let keys: Vec<&str> = item.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = REPORT_FIELDS.to_vec();
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let (_, first, _) = run(&["verify", "--format", "json"]);
    let (_, second, _) = run(&["verify", "--format", "json"]);
    assert_eq!(first, second);
    let (_, csv1, _) = run(&["verify", "--format", "csv"]);
    let (_, csv2, _) = run(&["verify", "--format", "csv"]);
    assert_eq!(csv1, csv2);
}

#[test]
fn csv_mirrors_json_columns() {
    let (code, out, err) = run(&["verify", "--id", "cor3-*", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(err.contains("passed/failed/skipped: 6/0/0"), "{err}");
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, REPORT_FIELDS);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(&rows[0][0], "cor3-n1-printed");
    assert_eq!(&rows[0][1], "1");
    assert_eq!(&rows[0][2], "");
}

#[test]
fn text_report_flags_unreproduced_claim() {
    let (code, out, _) = run(&["verify", "--id", "cor3-n1-*"]);
    assert_eq!(code, 0);
    assert!(out.contains("not reproduced"));
    assert!(out.trim_end().ends_with("passed/failed/skipped: 2/0/0"));
}

#[test]
fn filters() {
    let (_, v) = json(&["verify", "--n", "2", "--format", "json"]);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|o| o["id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        ["cor1-n2", "cor2-n2", "cor2-n2-printed", "cor3-n2-printed", "cor3-n2-corrected", "cor4-n2"]
    );
    let (_, v) = json(&["verify", "--lambda", "1/2", "--format", "json"]);
    assert_eq!(v[0]["id"], "eq4.6-lambda1/2");
    let (_, v) = json(&["verify", "--lambda", "-0.5", "--format", "json"]);
    assert_eq!(v[0]["id"], "eq4.7");
    assert_eq!(v[0]["lambda"].as_f64(), Some(-0.5));
}

#[test]
fn divergent_companions_are_skipped() {
    let (code, v) = json(&["verify", "--id", "cor2-*-printed", "--format", "json"]);
    assert_eq!(code, 0);
    for item in v.as_array().unwrap() {
        assert_eq!(item["series_status"], "Divergent");
        assert_eq!(item["verdict"], "SkippedDivergent");
        assert!(item["series_value"].is_null());
    }
}

#[test]
fn starved_term_budget_fails() {
    let (code, out, err) = run(&["verify", "--max-terms", "10", "--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.as_array().unwrap().iter().any(|o| o["verdict"] == "Fail"));
    assert!(err.contains("passed/failed/skipped"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--tol", "1e-20"][..],
        &["verify", "--max-terms", "3"],
        &["verify", "--bogus"],
        &["verify", "--id", "no-such-case"],
        &["verify", "--format", "yaml"],
        &["verify", "--lambda", "1+i"],
        &["eval", "--upper", "1/0", "--z", "0.5"],
        &["eval", "--upper", "1,2", "--z", "0.5 "],
        &["heegner", "--n", "17"],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn eval_gauss_at_unit_argument() {
    let (code, out, _) = run(&["eval", "--upper", "i,-i", "--lower", "1/2", "--z", "1", "--tol", "1e-6"]);
    assert_eq!(code, 0);
    assert!(out.contains("status        Converged"), "{out}");
    let (code, v) = json(&[
        "eval", "--upper", "i,-i", "--lower", "1/2", "--z", "1", "--tol", "1e-6", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert!((v["value_re"].as_f64().unwrap() - 11.591_953).abs() < 1e-5);
    assert_eq!(v["status"], "Converged");
}

#[test]
fn eval_reports_divergence() {
    let (code, _, err) = run(&["eval", "--upper", "1,1", "--lower", "1", "--z", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("diverg"), "{err}");
    let (code, out, _) = run(&["eval", "--upper", "1,1", "--lower", "1/2", "--z", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("Divergent"));
}

#[test]
fn heegner_nineteen() {
    let (code, v) = json(&["heegner", "--n", "19", "--format", "json"]);
    assert_eq!(code, 0);
    let row = &v[0];
    assert_eq!(row["reference"], "885480");
    assert!((row["deviation"].as_f64().unwrap() - 0.2223).abs() < 1e-3);
    assert!(row["value"].as_str().unwrap().starts_with("8.85479777680154319497537893"));
    let (_, v) = json(&["heegner", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn constants_table() {
    let (code, v) = json(&["constants", "--lambda", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!(row["rel_residual"].as_f64().unwrap() <= 1e-12, "{row}");
    }
    let (code, _, _) = run(&["constants", "--lambda", "20"]);
    assert_eq!(code, 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&["verify", "--id", "thm2-*", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written.as_array().unwrap().len(), 5);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gelfond");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", "--id", "eq1.1"]), Some(0));
    assert_eq!(status(&["verify", "--max-terms", "10"]), Some(1));
    assert_eq!(status(&["verify", "--tol", "0"]), Some(2));
    let out = Command::new(bin).args(["heegner", "--n", "163"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("262537412640768744"), "{text}");
}
