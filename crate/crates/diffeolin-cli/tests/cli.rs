//! Command-line contract tests: exit codes, JSON round-trips, determinism,
//! and input rejection.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffeolin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn negative_verdicts_exit_one_never_two() {
    let smooth = run(&[
        "check-form",
        &fixture("e3.json"),
        &fixture("identity3.json"),
    ]);
    assert_eq!(smooth.status.code(), Some(1));
    assert!(stdout_of(&smooth).contains("smooth: false"));

    let pm = run(&["check-pm", &fixture("e3.json"), &fixture("identity3.json")]);
    assert_eq!(pm.status.code(), Some(1));
    assert!(stdout_of(&pm).contains("form not smooth"));

    let split = run(&[
        "check-split",
        &fixture("e3.json"),
        &fixture("w_e1e2.json"),
        &fixture("w_e3.json"),
    ]);
    assert_eq!(split.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two_never_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let mut file = std::fs::File::create(&path).unwrap();
    writeln!(file, "{{\"dimension\": 3,").unwrap();
    let out = run(&["dual", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // Parse errors carry a position.
    assert!(stderr_of(&out).contains("line"));

    let missing = run(&["dual", "/nonexistent/space.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let unknown_symbol = run(&["dual", &fixture("bad_symbol.json")]);
    assert_eq!(unknown_symbol.status.code(), Some(2));
    assert!(stderr_of(&unknown_symbol).contains("unknown symbol"));
}

#[test]
fn float_rationals_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("floats.json");
    std::fs::write(&path, "[[\"0.5\", \"1\"], [\"1\", \"2\"]]").unwrap();
    let out = run(&["check-form", &fixture("e0.json"), path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("invalid rational"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["dual"]).status.code(), Some(2));
    assert_eq!(run(&["dual", "a.json", "b.json"]).status.code(), Some(2));
    assert_eq!(run(&["probe", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["probe", "--seed"]).status.code(), Some(2));
    assert_eq!(run(&["report", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["dual", "--bogus"]).status.code(), Some(2));
}

#[test]
fn wrong_shape_matrices_exit_two() {
    let two_by_two = run(&["check-pm", &fixture("e3.json"), &fixture("identity2.json")]);
    assert_eq!(two_by_two.status.code(), Some(2));

    let non_pm = run(&["decompose", &fixture("e3.json"), &fixture("identity3.json")]);
    assert_eq!(non_pm.status.code(), Some(2));
    assert!(stderr_of(&non_pm).contains("not a pseudo-metric"));

    let bad_dual_metric = run(&[
        "from-dual-metric",
        &fixture("e3.json"),
        &fixture("identity3.json"),
    ]);
    assert_eq!(bad_dual_metric.status.code(), Some(2));
}

fn canonical_json(text: &str) -> String {
    let value: serde_json::Value = serde_json::from_str(text).expect("valid JSON output");
    serde_json::to_string_pretty(&value).unwrap()
}

#[test]
fn json_output_round_trips_idempotently() {
    let cases: Vec<Vec<String>> = vec![
        vec!["dual".into(), fixture("e3.json")],
        vec![
            "decompose".into(),
            fixture("e3.json"),
            fixture("pm_e3.json"),
        ],
        vec!["report".into()],
    ];
    for args in cases {
        let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
        full.push("--json");
        let out = run(&full);
        assert!(out.status.success());
        let text = stdout_of(&out);
        let once = canonical_json(&text);
        let twice = canonical_json(&once);
        assert_eq!(once, twice, "re-serialization is not idempotent");
        // The emitted form is already canonical.
        assert_eq!(text.trim_end(), once);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let e3 = fixture("e3.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["dual", &e3],
        vec!["report"],
        vec!["probe", "--seed", "7", "--trials", "20"],
        vec!["probe", "--seed", "7", "--trials", "20", &e3],
    ];
    for args in cases {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), second.status.code());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn probe_accepts_a_space_argument() {
    let out = run(&[
        "probe",
        "--seed",
        "42",
        "--trials",
        "25",
        &fixture("e3.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("space: given (n=3)"));
    assert!(text.contains("failures: 0"));
    // The survey is descriptive output, not a verdict.
    assert!(text.contains("summand-uniqueness-survey"));
    assert!(text.contains("distinct standard smooth summands"));
}

#[test]
fn multi_symbol_space_through_the_full_stack() {
    let dual = run(&["dual", &fixture("mixed.json"), "--json"]);
    assert!(dual.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&dual)).unwrap();
    assert_eq!(value["dual_dimension"], 1);
    assert_eq!(value["rows"], serde_json::json!([["0", "0", "1"]]));

    let part = run(&["invariant-part", &fixture("mixed.json")]);
    assert!(part.status.success());
    assert!(stdout_of(&part).contains("span{[0, 0, 1]}"));

    let probe = run(&[
        "probe",
        "--seed",
        "3",
        "--trials",
        "15",
        &fixture("mixed.json"),
    ]);
    assert_eq!(probe.status.code(), Some(0));
}

#[test]
fn probe_with_one_trial_passes() {
    let out = run(&[
        "probe",
        "--seed",
        "42",
        "--trials",
        "1",
        &fixture("e0.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_split_accepts_empty_subspace_files() {
    let out = run(&[
        "check-split",
        &fixture("e0.json"),
        &fixture("full2.json"),
        &fixture("zero.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("smooth split: true"));
}

#[test]
fn subspace_files_are_canonicalized_on_load() {
    // Any spanning set works: these rows span the same plane as the
    // canonical V0 basis.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v0_alt.json");
    std::fs::write(
        &path,
        "[[\"2\", \"1\", \"-1\"], [\"1\", \"2\", \"-2\"], [\"3\", \"3\", \"-3\"]]",
    )
    .unwrap();
    let out = run(&[
        "check-split",
        &fixture("e3.json"),
        path.to_str().unwrap(),
        &fixture("v1_e3.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn report_json_contains_sections_and_discrepancies() {
    let out = run(&["report", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let sections = value["sections"].as_array().unwrap();
    let titles: Vec<&str> = sections
        .iter()
        .map(|s| s["title"].as_str().unwrap())
        .collect();
    for expected in [
        "space",
        "dual basis",
        "smooth symmetric forms",
        "pseudo-metric check",
        "eigenvalues",
        "decomposition",
        "restriction to V0",
        "pairing preimages",
        "induced dual metric",
    ] {
        assert!(titles.contains(&expected), "missing section {expected}");
    }
    let notes = value["discrepancies"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("5/9")));

    // Exact values in the report parse back bit-identically.
    let restriction = sections
        .iter()
        .find(|s| s["title"] == "restriction to V0")
        .unwrap();
    let entries = restriction["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .any(|e| e[0] == "matrix" && e[1] == "[[2, 2], [2, 8]]"));
}

#[test]
fn tolerance_flag_reaches_the_eigensolver() {
    let loose = run(&["report", "--tol", "1e-3"]);
    assert!(loose.status.success());
    let text = stdout_of(&loose);
    // A loose tolerance still converges and triggers the documentation note.
    assert!(text.contains("looser than the zero-eigenvalue"));
}
