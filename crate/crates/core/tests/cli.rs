use std::process::Command;

use gl11_vacuum::gl11::Gl11;
use gl11_vacuum::qseries::QSeries;
use gl11_vacuum::superpoly::SuperPoly;
use serde_json::Value;

fn gl11(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gl11"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, out) = gl11(&all);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn ssvec_reports_invariant_symbol() {
    let v = json(&["ssvec", "--family", "h", "--k", "2", "--deg", "4"]);
    assert_eq!(v[0]["symbol"], "a0*c0 + phi0*psi0");
    assert_eq!(v[0]["invariant"], true);
    let g = Gl11::standard();
    for row in v[0]["series"].as_array().unwrap() {
        let p = g.parse(row["coefficient"].as_str().unwrap()).unwrap();
        assert!(g.is_invariant(&p).invariant);
    }
    let (_, text) = gl11(&["ssvec", "--family", "s", "--k", "1"]);
    assert!(text.starts_with("s_1 = c0"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(gl11(&["ssvec", "--family", "h", "--k", "0"]).0, 2);
    assert_eq!(gl11(&["accept", "nosuch"]).0, 2);
    assert_eq!(gl11(&["nosuch"]).0, 2);
    assert_eq!(gl11(&["probe", "nosuch"]).0, 2);
    assert_eq!(gl11(&["invariance", "a0 +"]).0, 2);
}

#[test]
fn failed_checks_exit_with_one() {
    assert_eq!(gl11(&["invariance", "a0"]).0, 1);
    assert_eq!(gl11(&["invariance", "a0*c0 + phi0*psi0"]).0, 0);
    assert_eq!(gl11(&["cancel", "a0"]).0, 1);
    assert_eq!(gl11(&["cancel", "a0*c0"]).0, 0);
}

#[test]
fn hp_series_round_trip() {
    let v = json(&["hp", "--deg", "7"]);
    assert_eq!(v["equal"], true);
    let s = QSeries::from_json(&serde_json::json!({"order": 7, "coefficients": v["product"]})).unwrap();
    assert_eq!(s.to_i64_vec().unwrap(), vec![1, 1, 3, 6, 12, 21, 38, 63]);
    let v = json(&["hp", "--deg", "0"]);
    assert_eq!(v["basis"], serde_json::json!([1]));
}

#[test]
fn json_polynomials_parse_back() {
    let g = Gl11::standard();
    let v = json(&["chevalley", "a0*c0 + phi0*psi0"]);
    assert_eq!(v["image"], "u1_0^2 + u1_0*v1_0");
    let v = json(&["basis", "--n", "1", "--deg", "4"]);
    for row in v.as_array().unwrap() {
        let p: SuperPoly = g.parse(row["element"].as_str().unwrap()).unwrap();
        assert_eq!(p.internal_degrees(), vec![row["degree"].as_u64().unwrap() as u32]);
        assert_eq!(row["verified"], true);
    }
}

#[test]
fn output_is_deterministic() {
    let a = gl11(&["accept", "properties", "--seed", "5", "--json"]).1;
    let b = gl11(&["accept", "properties", "--seed", "5", "--json"]).1;
    let strip = |s: &str| -> Value {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["criteria"][0]["elapsed"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(gl11(&["aseries", "--n", "2", "--deg", "6"]), gl11(&["aseries", "--n", "2", "--deg", "6"]));
}

#[test]
fn probe_reports_are_json() {
    let (code, out) = gl11(&["probe", "chev_4_4", "--deg", "4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["conjecture"], "chev_4_4");
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
}
