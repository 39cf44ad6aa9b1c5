// Named to sort before `acceptance`: cargo stops at the first failing test
// target, and these should still run when an acceptance criterion fails.

mod support;

use serde_json::Value;
use support::fixture;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = lya_cli::run(std::iter::once("lya").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn f(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_ne!(code, 2, "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "algebra", &f("example4.json")]).0, 0);
    assert_eq!(run(&["check", "algebra", &f("derivation_violation.json")]).0, 1);
    assert_eq!(run(&["check", "algebra", &f("no_such_file.json")]).0, 2);
    assert_eq!(run(&["check", "rrb", "--op", &f("projection_e1e3.json")]).0, 0);
    assert_eq!(run(&["check", "rrb", "--op", &f("projection_e1e2.json")]).0, 1);
    assert_eq!(run(&["check", "rep", &f("example4_adjoint_perturbed.json")]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn center_of_example4() {
    let (code, v) = json(&["check", "algebra", &f("example4.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["dim"], 4);
    let center: Vec<Vec<String>> = serde_json::from_value(v["data"]["center"].clone()).unwrap();
    assert_eq!(center, vec![vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]]);
}

#[test]
fn failing_operator_reports_witness() {
    let (code, v) = json(&["check", "rrb", "--op", &f("projection_e1e2.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    let first = &v["violations"][0];
    assert_eq!(first["equation"], "rrb.binary");
    assert_eq!(first["witness"], serde_json::json!([0, 1]));
}

#[test]
fn format_errors_name_file_and_field() {
    let dir = std::env::temp_dir().join(format!("lya-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"dim": 2, "binary": [[0, 1, 1, "one"]]}"#).unwrap();
    let (code, _, err) = run(&["check", "algebra", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.json"), "{err}");
    assert!(err.contains("binary[0]"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cohomology_dims_and_witnesses() {
    let (code, v) = json(&["cohomology", "--op", &f("projection_e1e3.json"), "--degree", "1", "--witness"]);
    assert_eq!(code, 0);
    let s = v.to_string();
    assert!(s.contains("11") && s.contains("10"), "{s}");
    // the projection onto span{e1,e2} fails verification unless explicitly unchecked
    assert_eq!(run(&["cohomology", "--op", &f("projection_e1e2.json"), "--degree", "1"]).0, 1);
    assert_eq!(run(&["cohomology", "--op", &f("projection_e1e2.json"), "--degree", "1", "--unchecked"]).0, 0);
}

#[test]
fn sampled_characterizations_agree() {
    let (code, v) = json(&["--seed", "3", "check", "rrb", "--op", &f("projection_e1e3.json"), "--sample", "30"]);
    assert_eq!(code, 0);
    let s = v.to_string();
    assert!(s.contains("\"disagreements\":0"), "{s}");
}

#[test]
fn deformation_commands() {
    let (code, _) = json(&["deform", "linear", "--op", &f("projection_e1e3.json"), "--t1", &f("projection_e1e3_infinitesimal.json")]);
    assert_eq!(code, 0);
    let (code, v) = json(&["deform", "obstruct", "--op", &f("zero_operator_sl2.json"), "--terms", &f("zero_operator_sl2_obstructed.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["ob_is_zero"], false);
    let (code, v) = json(&["deform", "obstruct", "--op", &f("zero_operator_sl2.json"), "--terms", &f("zero_operator_sl2_obstructed.json"), "--extend"]);
    assert_eq!(code, 1);
    assert!(v.to_string().contains("\"certificate_verified\":true"));
    let (code, _) = json(&["deform", "equiv", "--op", &f("projection_e1e3.json"), "--t1", &f("projection_e1e3_infinitesimal.json"), "--t2", &f("projection_e1e3_infinitesimal.json")]);
    assert_ne!(code, 2);
}

#[test]
fn pretty_output_is_readable() {
    let (code, out, _) = run(&["check", "algebra", &f("example4.json")]);
    assert_eq!(code, 0);
    assert!(out.to_lowercase().contains("pass"), "{out}");
}
