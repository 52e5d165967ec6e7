use std::process::{Command, Output};

use proptest::prelude::*;
use ratlimit::{bilimit, parse_poly, Rational};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratlimit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/outcome.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

// [PAPER]
#[test]
fn limit_of_second_example() {
    let o = run(&["limit", "--f", "x^4+3*x^2*y-x^2-y^2", "--g", "x^2+y^2"]);
    assert_eq!(stdout(&o).trim(), "limit = -1");
    assert_eq!(o.status.code(), Some(0));
}

// [PAPER]
#[test]
fn range_when_limit_fails() {
    let o = run(&["limit", "--f", "x^2", "--g", "x^4+y^4", "--range"]);
    assert_eq!(stdout(&o).trim(), "no limit; range = [0, +inf]");
    assert_eq!(o.status.code(), Some(2));
}

// [TRIVIAL]
#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["limit", "--f", "x", "--g", "0"]).status.code(), Some(1));
    assert_eq!(run(&["limit", "--f", "xy", "--g", "x"]).status.code(), Some(1));
    assert_eq!(run(&["limit", "--f", "x^y", "--g", "x"]).status.code(), Some(1));
    assert_eq!(run(&["limit", "--f", "x", "--g", "y", "--at", "1"]).status.code(), Some(1));
    assert_eq!(run(&["limit", "--f", "x", "--g", "y", "--at", "sqrt2,0"]).status.code(), Some(1));
    assert_eq!(run(&["limit", "--f", "x"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

// [DERIVED] (x + y - 3) / (x - 1) at (1, 2): the denominator vanishes on a line.
#[test]
fn limit_at_a_translated_point() {
    let o = run(&["limit", "--f", "x - 1", "--g", "(x - 1)*(y + 1)", "--at", "1,2"]);
    assert_eq!(stdout(&o).trim(), "limit = 1/3");
    let o = run(&["limit", "--f", "x^2 - 1", "--g", "x - 1", "--at", "1,2"]);
    assert_eq!(stdout(&o).trim(), "limit = 2");
}

// [DERIVED]
#[test]
fn cusp_branches() {
    let o = run(&["branches", "--f", "y^2 - x^3", "--side", "plus"]);
    let text = stdout(&o);
    assert!(text.contains("y = -x^(3/2) + O(x^3)"), "{text}");
    assert!(text.contains("y = x^(3/2) + O(x^3)"), "{text}");
    assert!(!text.contains("x -> 0-"));
}

// [TRIVIAL]
#[test]
fn no_real_branches() {
    assert_eq!(stdout(&run(&["branches", "--f", "x^2 + y^2"])).trim(), "no real branches");
}

// [TRIVIAL]
#[test]
fn crossing_lines() {
    let text = stdout(&run(&["branches", "--f", "y^2 - x^2", "-N", "4", "--side", "plus"]));
    assert!(text.contains("y = x + O(x^4)") && text.contains("y = -x + O(x^4)"), "{text}");
}

// [TRIVIAL]
#[test]
fn non_regular_input_is_sheared() {
    let text = stdout(&run(&["branches", "--f", "x*y"]));
    assert!(text.starts_with("note: f is not y-regular"), "{text}");
}

// [PAPER] cases 3, 5 and 21 of the corpus.
#[test]
fn bench_cases() {
    let text = stdout(&run(&["bench", "--case", "3"]));
    assert!(text.contains("PASS") && text.contains("range = [-19/3, 0]"), "{text}");
    let text = stdout(&run(&["bench", "--case", "5"]));
    assert!(text.contains("PASS") && text.contains("non-isolated"), "{text}");
    let text = stdout(&run(&["bench", "--case", "21"]));
    assert!(text.contains("PASS") && text.contains("range = [1, +inf]"), "{text}");
}

// [DERIVED] every bench case emits JSON that validates against the schema.
#[test]
fn bench_json_matches_schema() {
    let o = run(&["bench", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 21);
    let v = schema();
    for row in rows {
        assert_eq!(row["passed"], Value::Bool(true));
        let errors: Vec<String> = v.iter_errors(&row["result"]).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "case {}: {errors:?}", row["id"]);
    }
}

#[test]
fn limit_json_matches_schema() {
    let o = run(&["limit", "--f", "x^2*y", "--g", "x^2 + y^2", "--json"]);
    let out: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(schema().is_valid(&out));
    assert_eq!(out["exists"], Value::Bool(true));
    assert_eq!(out["limit"]["exact"], Value::String("0".into()));
}

const DENOMINATORS: [&str; 4] = ["x^2 + y^2", "x^4 + y^2", "x*y", "x^2 - y^3"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // [DERIVED] the exit status follows the library verdict.
    #[test]
    fn exit_code_follows_verdict(
        terms in proptest::collection::vec((-3i64..=3, 0u32..4, 0u32..4), 1..4),
        g in prop::sample::select(DENOMINATORS.to_vec()),
    ) {
        let f: Vec<String> = terms.iter().map(|(c, i, j)| format!("({c})*x^{i}*y^{j}")).collect();
        let f = f.join(" + ");
        let zero = Rational::from_integer(0.into());
        let expected = bilimit(&parse_poly(&f).unwrap(), &parse_poly(g).unwrap(), (&zero, &zero)).unwrap();
        let o = run(&["limit", "--f", &f, "--g", g]);
        prop_assert_eq!(o.status.code(), Some(if expected.exists() { 0 } else { 2 }));
    }
}
