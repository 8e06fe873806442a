use std::process::{Command, Output};

use hyperchern::report::ReportDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperchern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.lines().last().unwrap().ends_with("0 failed"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let o = run(&["verify", "lemma", "w5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with('\n'));
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    assert_eq!(doc.entries.len(), 6);
}

#[test]
fn reports_are_deterministic() {
    let a = ReportDocument::from_json(&stdout(&run(&["verify", "all", "--format", "json"]))).unwrap();
    let b = ReportDocument::from_json(&stdout(&run(&["verify", "all", "--format", "json"]))).unwrap();
    assert_eq!(a.entries, b.entries);
    assert_eq!(a.tool_version, b.tool_version);
}

#[test]
fn case_report_names_the_quadratic_factor() {
    let o = run(&["verify", "case", "--n", "6", "--r", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("61*d^2 - 13"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "case", "--n", "6", "--r", "6"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemma", "zz9"]).status.code(), Some(2));
    assert_eq!(run(&["chern", "lambda", "--rank", "9", "--power", "2"]).status.code(), Some(2));
    assert_eq!(run(&["chern", "ulrich", "--n", "9", "--r", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unknown_id_lists_registry() {
    let o = run(&["verify", "lemma", "zz9"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("suz7.1-4"));
}

#[test]
fn lambda_formula_output() {
    let o = run(&["chern", "lambda", "--rank", "4", "--power", "2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "rank(Λ^2 F) = 6\nc0 = 1\nc1 = 3*c1\nc2 = 3*c1^2 + 2*c2\n");
}

#[test]
fn ulrich_classes_output() {
    let o = run(&["chern", "ulrich", "--n", "8", "--r", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["e"].as_array().unwrap().len(), 8);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("warning: e8 is not an integer"));
}
