use std::process::{Command, Output};

use serde_json::Value;

fn unitring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitring")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = unitring(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn check_report_schema(v: &Value) {
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["expr", "order", "characteristic", "unit_order", "structure", "timing_ms"] {
        assert!(keys.contains(&k), "missing {k} in {v}");
    }
    for k in &keys {
        assert!(
            [
                "expr",
                "order",
                "characteristic",
                "unit_order",
                "structure",
                "radical",
                "idempotent_count",
                "unit_elements",
                "timing_ms"
            ]
            .contains(k),
            "unexpected key {k}"
        );
    }
    assert!(["dihedral", "abelian", "unclassified"].contains(&v["structure"]["kind"].as_str().unwrap()));
    if let Some(r) = v.get("radical") {
        assert_eq!(r["counting_identity_ok"], true);
        assert!(r["j_order"].is_u64() && r["quotient_unit_order"].is_u64());
    }
}

#[test]
fn units_json() {
    let v = json(&["units", "UT(2,GF(3))"]);
    check_report_schema(&v);
    assert_eq!(v["unit_order"], 12);
    assert_eq!(v["structure"]["kind"], "dihedral");
    assert_eq!(v["structure"]["n"], 6);
    assert_eq!(v["characteristic"], 3);

    let v = json(&["units", "Gamma(5)"]);
    check_report_schema(&v);
    assert_eq!((v["unit_order"].as_u64(), v["structure"]["n"].as_u64()), (Some(20), Some(10)));
    assert!(v["order"].is_null());

    let v = json(&["units", "Z(1)"]);
    assert_eq!(v["unit_order"], 1);
}

#[test]
fn elements_flag() {
    let v = json(&["units", "--elements", "Z(8)"]);
    assert_eq!(v["unit_elements"], serde_json::json!(["1", "3", "5", "7"]));
    assert_eq!(v["structure"]["invariants"], serde_json::json!([2, 2]));
}

#[test]
fn radical_json() {
    for (expr, j, q) in [("GA(GF(2), D(4))", 8, 1), ("M(2,GF(2))", 1, 6), ("Z(12)", 2, 2)] {
        let v = json(&["radical", expr]);
        check_report_schema(&v);
        assert_eq!(v["radical"]["j_order"], j, "{expr}");
        assert_eq!(v["radical"]["quotient_unit_order"], q, "{expr}");
    }
}

#[test]
fn idempotents() {
    let v = json(&["idempotents", "GF(2) x GF(3) x GF(3)"]);
    assert_eq!(v["idempotent_count"], 8);
}

#[test]
fn wrappers() {
    let v = json(&["obstruction", "1"]);
    assert_eq!(v["norm_value"], "-1152");
    assert_eq!(v["re_value"], "577");
    assert_eq!(v["nonzero"], true);

    let v = json(&["un-formula", "2", "3"]);
    assert_eq!(v["invariants"], serde_json::json!([4]));
    assert_eq!(v["oracle_agrees"], true);

    let v = json(&["gamma", "7"]);
    assert_eq!(v["unit_order"], 28);
    assert_eq!(v["structure"]["n"], 14);
    assert_eq!(v["relations_hold"], true);
}

#[test]
fn verify_table_exit_zero() {
    let out = unitring(&["verify-theorem1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 19);
}

#[test]
fn errors_exit_two() {
    for args in [
        vec!["units", "GF(6)"],
        vec!["units", "Z(4"],
        vec!["units", "GA(GF(2),D(5))"],
        vec!["units", "Quot(Z(4),[r])"],
        vec!["radical", "Gamma(3)"],
        vec!["units", "M(5,GF(2))"],
        vec!["un-formula", "4", "3"],
        vec!["obstruction", "0"],
    ] {
        let out = unitring(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = unitring(&["units", "GF(6)"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("6 is not a prime power"));
}

#[test]
fn budget_flag() {
    let out = unitring(&["--budget", "100", "units", "GA(GF(2),D(12))"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
