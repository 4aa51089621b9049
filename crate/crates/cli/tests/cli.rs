use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-bdiv")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    let text = if code == 2 { out.stderr } else { out.stdout };
    (code, serde_json::from_slice(&text).expect("json report"))
}

fn gens(v: &Value) -> Vec<Vec<u64>> {
    serde_json::from_value(v["generators"].clone()).unwrap()
}

#[test]
fn saturate_admits_xy() {
    let (code, v) = report(&["saturate", "--input", &fixture("x2y2.json"), "--lambda", "1"]);
    assert_eq!(code, 0);
    assert_eq!(gens(&v), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
}

#[test]
fn roundtrip_on_a_region() {
    let (code, v) = report(&["check-theorem", "roundtrip", "--input", &fixture("region.json"), "--lambdas", "1/2,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn extract_wstar_at_two() {
    let (code, v) = report(&["extract", "--input", &fixture("wstar.json"), "--lambda", "2"]);
    assert_eq!(code, 0);
    assert_eq!(gens(&v), vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
}

#[test]
fn is_saturated_fails_with_witness() {
    let (code, v) = report(&["is-saturated", "--input", &fixture("x2y2.json"), "--lambdas", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"], serde_json::json!([1, 1]));
}

#[test]
fn extraction_check_names_the_strict_ray() {
    let (code, v) = report(&["check-theorem", "extraction", "--input", &fixture("wstar.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["values"]["comparison"], "less");
    assert_eq!(v["witnesses"][0]["ray"], serde_json::json!(["2", "1"]));
}

#[test]
fn order_and_eval() {
    let (_, v) = report(&["order", "--input", &fixture("wstar.json"), "--poly", "x*y"]);
    assert_eq!(v["order"], "5/3");
    let (_, v) = report(&["eval", "--input", &fixture("valuation.json"), "--weights", "1,1"]);
    assert_eq!(v["value"], "1/2");
}

#[test]
fn input_errors_exit_two() {
    let (code, v) = report(&["eval", "--input", &fixture("missing.json"), "--weights", "1,1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "io_error");
    let (code, v) = report(&["norm", "--input", &fixture("poly.json"), "--poly", "x"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "unsupported_representation");
    let (code, v) = report(&["eval", "--input", &fixture("valuation.json"), "--weights", "1,1,1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "dimension_mismatch");
}

#[test]
fn injectivity_refuses_unsaturated_input() {
    let (code, v) = report(&[
        "check-theorem", "injectivity", "--input", &fixture("x2y2.json"), "--input", &fixture("region.json"),
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "not_saturated");
}

#[test]
fn plot_writes_svg_and_csv() {
    let dir = std::env::temp_dir().join(format!("toric-bdiv-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("fan.svg");
    let out = run(&["plot", "--input", &fixture("wstar.json"), "--out", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg") && text.contains("-6/5"));
    let csv = std::fs::read_to_string(dir.join("fan.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn seeded_suites_repeat() {
    let a = run(&["check-theorem", "extraction", "--cases", "8", "--seed", "7"]);
    let b = run(&["check-theorem", "extraction", "--cases", "8", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
