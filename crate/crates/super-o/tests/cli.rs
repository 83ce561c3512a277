//! End-to-end checks of the command-line driver's contract:
//!
//! * every JSON answer — success or refusal — validates against the shipped
//!   schema (`schema/answer.schema.json`), hitting every branch once;
//! * answers are bit-identical across repeated runs;
//! * the documented reference invocations produce the documented output and
//!   exit codes.

use serde_json::Value;
use super_o::cli::run;

fn run_cli(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = std::iter::once("super-o".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut buf = Vec::new();
    let code = run(&argv, &mut buf);
    (code, String::from_utf8(buf).expect("CLI output is UTF-8"))
}

fn schema_validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/answer.schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(path).expect("schema file readable"))
            .expect("schema file is valid JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// One representative invocation per JSON answer shape, with its expected
/// exit code.  Weight syntax: `a,b` for one-block bases, `a | b` split for
/// gl(m|n) and osp(2|2n).
fn shape_cases() -> Vec<(&'static str, Vec<&'static str>, i32)> {
    vec![
        (
            "typical",
            vec!["typical", "--algebra", "pe(2)", "--weight", "0,0"],
            0,
        ),
        (
            "value (findim)",
            vec!["findim", "--algebra", "pe(3)", "--levi", "s1"],
            0,
        ),
        (
            "value with oracle recheck (hom)",
            vec![
                "hom",
                "--algebra",
                "gl(2)",
                "--mu",
                "-1,1",
                "--lambda",
                "0,0",
                "--check-oracle",
            ],
            0,
        ),
        (
            "value (ext1)",
            vec![
                "ext1",
                "--algebra",
                "pe(2)",
                "--mu",
                "2,2",
                "--lambda",
                "2,2",
            ],
            0,
        ),
        (
            "socle",
            vec![
                "socle",
                "--algebra",
                "pe(2)",
                "--top",
                "1,0",
                "--sub",
                "-1,2",
            ],
            0,
        ),
        (
            "status finite (definitional)",
            vec![
                "pd",
                "--algebra",
                "pe(2)",
                "--kind",
                "projective-cover",
                "--weight",
                "0,0",
            ],
            0,
        ),
        (
            "status infinite",
            vec![
                "pd",
                "--algebra",
                "pe(2)",
                "--kind",
                "verma",
                "--weight",
                "0,0",
            ],
            0,
        ),
        (
            "status even-part",
            vec![
                "pd",
                "--algebra",
                "osp(2|2)",
                "--kind",
                "verma",
                "--weight",
                "1|1",
                "--measure",
                "id",
            ],
            0,
        ),
        (
            "status out-of-scope",
            vec![
                "pd",
                "--algebra",
                "pe(2)",
                "--kind",
                "tilting",
                "--weight",
                "0,0",
            ],
            1,
        ),
        (
            "equivalent",
            vec![
                "block-eq",
                "--algebra",
                "pe(2)",
                "--weight",
                "0,0",
                "--other",
                "2,0",
            ],
            0,
        ),
        (
            "weight (lambda-plus)",
            vec!["lambda-plus", "--algebra", "pe(2)", "--weight", "1,0"],
            0,
        ),
        (
            "bigrassmannian",
            vec!["bigrassmannian", "--family", "A3", "--window", "213"],
            0,
        ),
        (
            "graph",
            vec![
                "graph",
                "--kind",
                "linkage",
                "--algebra",
                "gl(2)",
                "--weight",
                "0,0",
            ],
            0,
        ),
        (
            "verify report",
            vec!["oracle", "verify", "kac"],
            0,
        ),
        (
            "error (refusal)",
            vec![
                "ext1",
                "--algebra",
                "pe(2)",
                "--mu",
                "-9,9",
                "--lambda",
                "0,0",
            ],
            1,
        ),
    ]
}

#[test]
fn every_answer_shape_validates_against_the_schema() {
    let validator = schema_validator();
    for (shape, args, want_code) in shape_cases() {
        let (code, out) = run_cli(&args);
        assert_eq!(code, want_code, "{shape}: unexpected exit code; output: {out}");
        let instance: Value = serde_json::from_str(&out)
            .unwrap_or_else(|e| panic!("{shape}: output is not JSON ({e}): {out}"));
        let errors: Vec<String> = validator
            .iter_errors(&instance)
            .map(|e| e.to_string())
            .collect();
        assert!(
            errors.is_empty(),
            "{shape}: schema violations {errors:?} for {out}"
        );
    }
}

#[test]
fn answers_are_bit_identical_across_repeated_runs() {
    for (shape, args, _) in shape_cases() {
        let first = run_cli(&args);
        let second = run_cli(&args);
        assert_eq!(first, second, "{shape}: output differs between runs");
    }
}

#[test]
fn reference_verify_suite_passes_with_exit_zero() {
    let (code, out) = run_cli(&["oracle", "verify", "pe2-example"]);
    assert_eq!(code, 0, "reference suite must pass: {out}");
    let report: Value = serde_json::from_str(&out).unwrap();
    let cases = report["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c["passed"] == Value::Bool(true)));
    let validator = schema_validator();
    assert!(validator.is_valid(&report), "verify report must match schema");
}

#[test]
fn failing_verify_exit_code_is_nonzero_for_unknown_suite() {
    let (code, out) = run_cli(&["oracle", "verify", "no-such-suite"]);
    assert_eq!(code, 2, "unknown suite is a usage error: {out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].as_str().unwrap().contains("valid suites"));
}
