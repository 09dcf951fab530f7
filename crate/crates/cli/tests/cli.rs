use std::process::{Command, Output};

use serde_json::Value;

fn torilab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torilab")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = torilab(&full);
    let value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), value)
}

#[test]
fn tori_count_symbolic_b1() {
    let out = torilab(&["tori", "count", "--family", "bc", "--n", "1", "--symbolic"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(q + q^2)/2"), "{text}");
    assert!(text.contains("(-q + q^2)/2"), "{text}");
    assert!(text.trim_end().ends_with("total  q^2"), "{text}");
}

#[test]
fn tori_count_at_q() {
    let (code, v) = json(&["tori", "count", "--family", "a", "--n", "3", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["total"], "64");
    let rows = v["output"]["rows"].as_array().unwrap();
    let counts: Vec<&str> = rows.iter().map(|r| r["count"].as_str().unwrap()).collect();
    assert_eq!(counts, ["8", "28", "28"]);
}

#[test]
fn sym2_betti_triple() {
    let (code, v) = json(&["betti", "--poly", "Sym2Cn", "--recurrence", "--quasipoly", "--terms", "8"]);
    assert_eq!(code, 0);
    let out = &v["output"];
    assert_eq!(out["gf"]["num"], "1 + z^2 - z^4");
    assert_eq!(out["gf"]["den"], "1 - z^2 - z^4 + z^6");
    let coeffs: Vec<&str> = out["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "0", "2", "0", "2", "0", "3", "0", "3"]);
    assert_eq!(out["recurrence"]["lags"], serde_json::json!([2, 4, 6]));
    assert_eq!(out["recurrence"]["coeffs"], serde_json::json!(["1", "1", "-1"]));
    assert_eq!(out["quasipolynomial"]["period"], 4);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "betti", "--poly", "Wedge2Cn", "--recurrence", "--quasipoly", "--direct", "--terms", "4"];
    let a = torilab(&args);
    let b = torilab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = torilab(&["--json", "tori", "stat", "--family", "bc", "--poly", "X1 + Y1", "--n", "3"]);
    let d = torilab(&["--json", "tori", "stat", "--family", "bc", "--poly", "X1 + Y1", "--n", "3"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn parse_errors_carry_offsets() {
    let (code, v) = json(&["tori", "stat", "--family", "bc", "--poly", "X1 + *", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["field"], "--poly");
    assert_eq!(v["error"]["offset"], 5);
}

#[test]
fn usage_errors_exit_one() {
    let out = torilab(&["tori", "count", "--family", "a"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--n"));
    let (code, v) = json(&["tori", "count", "--family", "z", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["field"], "--family");
}

#[test]
fn type_a_rejects_y_variables() {
    let (code, v) = json(&["tori", "stat", "--family", "a", "--poly", "Y1", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "invalid");
}

#[test]
fn help_exits_zero() {
    assert!(torilab(&["--help"]).status.success());
    assert!(torilab(&["betti", "--help"]).status.success());
}

#[test]
fn lehrer_holds() {
    let (code, v) = json(&["lehrer", "--family", "a", "--n", "4", "--chi", "irr:2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["holds"], true);
    let (code, _) = json(&["lehrer", "--family", "bc", "--n", "2", "--chi", "irr:2"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_quick_passes() {
    let (code, v) = json(&["verify", "all", "--level", "quick"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["output"]["passed"], 13);
    assert!(v["output"]["checks"][0].get("elapsed_ms").is_none());
}

#[test]
fn verify_only_and_timing() {
    let (code, v) = json(&["--timing", "verify", "all", "--only", "1,9"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["total"], 2);
    assert!(v["output"]["checks"][1]["elapsed_ms"].is_u64());
    assert!(v["timing_ms"].is_u64());
    let (code, _) = json(&["verify", "all", "--only", "14"]);
    assert_eq!(code, 1);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("torilab-out-{}.json", std::process::id()));
    let out = torilab(&["--json", "--out", path.to_str().unwrap(), "symfunc", "fmaj", "--lambda", "3,1"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["output"]["tableaux"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn murnaghan_nakayama_column() {
    let (code, v) = json(&["symfunc", "mn", "--lambda", "3,1", "--mu", "2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"][0]["value"], -1);
}
