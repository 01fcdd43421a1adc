// Every JSON report validates against schema/report.schema.json, fail
// reports carry counterexamples and passing witness checks carry witnesses.

use centrosym::cli::{execute, Cli, Output, Report};
use centrosym::report::Verdict;
use clap::Parser;
use serde_json::Value;

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&v).unwrap()
}

fn reports(args: &[&str]) -> Vec<Report> {
    let cli = Cli::try_parse_from(std::iter::once("censym").chain(args.iter().copied())).unwrap();
    match execute(cli.command).unwrap().0 {
        Output::Reports(rs) => rs,
        Output::Document(_) => panic!("expected reports"),
    }
}

const WITNESS_CHECKS: [&str; 6] = ["frobenius", "separability", "cellchain", "heredity", "centre", "demo-bisymmetric"];

#[test]
fn all_reports_validate() {
    let v = schema();
    let runs: &[&[&str]] = &[
        &["verify", "--ring", "int", "--json"],
        &["verify", "--ring", "gf:2", "--json"],
        &["verify", "--ring", "rat", "--n", "5", "--json"],
        &["verify", "--ring", "c2:zmod:4", "--n", "4", "--json"],
        &["iso", "--kind", "s3", "--json"],
        &["iso", "--kind", "morita", "--n", "6", "--ring", "gf:3", "--json"],
        &["demo-bisymmetric", "--json"],
    ];
    let mut seen = 0;
    for args in runs {
        for r in reports(args) {
            let line: Value = serde_json::from_str(&r.to_json_line()).unwrap();
            let errors: Vec<String> = v.iter_errors(&line).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{} {:?}: {errors:?}", r.check, r.params);
            if r.verdict == Verdict::Fail {
                assert!(r.counterexample.is_some());
            }
            let witness_check = WITNESS_CHECKS.contains(&r.check.as_str()) || r.check.starts_with("iso/");
            if r.verdict == Verdict::Pass && witness_check {
                assert!(r.witness.is_some(), "{} lacks a witness", r.check);
            }
            seen += 1;
        }
    }
    assert!(seen > 150);
}

#[test]
fn schema_rejects_a_fail_without_counterexample() {
    let v = schema();
    let bad: Value = serde_json::json!({
        "check": "x", "params": {"n": 1, "ring": "int", "seed": null},
        "verdict": "fail", "clauses": [], "witness": null, "counterexample": null
    });
    assert!(!v.is_valid(&bad));
    let missing: Value = serde_json::json!({"check": "x", "verdict": "pass"});
    assert!(!v.is_valid(&missing));
}

#[test]
fn seeded_reports_are_identical() {
    let a: Vec<String> = reports(&["verify", "--n", "4", "--ring", "gf:5", "--seed", "77", "--json"])
        .iter()
        .map(Report::to_json_line)
        .collect();
    let b: Vec<String> = reports(&["verify", "--n", "4", "--ring", "gf:5", "--seed", "77", "--json"])
        .iter()
        .map(Report::to_json_line)
        .collect();
    assert_eq!(a, b);
}
