use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const WORKED: &str = "x^2+y^2+z^2+u^2w^2+u^4+w^5";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whideal"))
        .args(args)
        .env("WHIDEAL_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn code(args: &[&str]) -> (i32, String) {
    let o = run(args);
    (o.status.code().unwrap(), stderr(&o))
}

/// Runs with `--json` and validates against the named schema.
fn json(schema: &str, args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let value: Value = serde_json::from_str(&ok(&full)).unwrap();
    let path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("schemas/{schema}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{args:?} does not match {schema}: {msgs:?}");
    };
    value
}

fn field<'a>(text: &'a str, label: &str) -> &'a str {
    let prefix = format!("{label}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {label} in\n{text}"))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn worked_example_report() {
    let v = json("report", &["analyze", WORKED, "--witness", "w^5"]);
    assert_eq!(v["minimal_exponent"], "2/1");
    assert_eq!(v["r"], 2);
    assert_eq!(v["nilpotency_upper"], 3);
    assert_eq!(v["hodge_triviality"][1]["trivial"], true);
    assert_eq!(v["w1_triviality"][1]["trivial"], false);
    assert_eq!(v["witness"]["outside_jacobian"], true);
    assert!(v["type_range"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([1, 1])));

    let text = ok(&["analyze", WORKED, "--witness", "w^5"]);
    assert_eq!(field(&text, "minimal_exponent"), "2/1");
    assert_eq!(field(&text, "rho_tilde_one"), v["rho_tilde_one"]);
    assert_eq!(field(&text, "r"), "2");
    assert_eq!(field(&text, "s"), v["s"].to_string());
    assert_eq!(field(&text, "nilpotency_upper"), "3");
    assert_eq!(field(&text, "type_range"), "(1,1), (1,2)");
    assert!(text.contains("supports type (1,1)"));
}

#[test]
fn cusp_is_not_log_canonical() {
    let v = json("report", &["analyze", "x^2+y^3"]);
    assert_eq!(v["minimal_exponent"], "5/6");
    assert_eq!(v["hodge_triviality"][0]["trivial"], false);
    assert_eq!(
        field(&ok(&["analyze", "x^2+y^3"]), "minimal_exponent"),
        "5/6"
    );
}

#[test]
fn polynomial_from_file_and_variable_order() {
    let path = temp_file("cusp.txt", "y^3 + x^2\n");
    let v = json(
        "report",
        &["analyze", "--file", path.to_str().unwrap(), "--vars", "y,x"],
    );
    assert_eq!(v["variables"], serde_json::json!(["y", "x"]));
    assert_eq!(
        v["facets"][0]["covector"],
        serde_json::json!(["1/3", "1/2"])
    );
}

#[test]
fn nonconvenient_input() {
    let (c, err) = code(&["analyze", "x*y"]);
    assert_eq!(c, 2);
    assert!(err.contains("not convenient"), "{err}");
    let (c, err) = code(&["analyze", "x*y", "--allow-nonconvenient"]);
    assert_eq!(c, 2);
    assert!(err.contains("no compact facets"), "{err}");
    let v = json("report", &["analyze", "x^2+x*y^3", "--allow-nonconvenient"]);
    assert_eq!(v["convenient"], false);
    assert_eq!(v["minimal_exponent"], Value::Null);
}

#[test]
fn parse_errors_exit_one() {
    let (c, err) = code(&["analyze", "x^+"]);
    assert_eq!(c, 1);
    assert!(err.contains("position 2"), "{err}");
    assert_eq!(code(&["analyze", WORKED, "--witness", "w^"]).0, 1);
}

#[test]
fn precondition_failures_exit_two() {
    assert_eq!(code(&["analyze", "x^2+1"]).0, 2);
    assert_eq!(code(&["analyze", "0"]).0, 2);
    assert_eq!(code(&["analyze", WORKED, "--witness", "2*w"]).0, 2);
    assert_eq!(code(&["analyze", "--file", "/nonexistent/whideal"]).0, 2);
    // usage errors come from the argument parser
    assert_eq!(code(&["snc", "--n", "2"]).0, 2);
    assert_eq!(code(&["bounds", "--n", "-1", "--d", "2", "--p", "0"]).0, 2);
}

#[test]
fn groebner_guard_exits_three() {
    let (c, err) = code(&[
        "analyze",
        WORKED,
        "--witness",
        "w^5",
        "--groebner-limit",
        "3",
    ]);
    assert_eq!(c, 3);
    assert!(err.contains("size guard"), "{err}");
}

#[test]
fn snc_examples() {
    assert_eq!(
        field(
            &ok(&["snc", "--n", "2", "--r", "2", "--p", "1", "--l", "1"]),
            "ideal"
        ),
        "(x1^2, x2^2)"
    );
    assert_eq!(
        field(
            &ok(&["snc", "--n", "2", "--r", "2", "--p", "1", "--l", "2"]),
            "ideal"
        ),
        "(x1, x2)"
    );
    let v = json(
        "snc",
        &["snc", "--n", "3", "--r", "3", "--p", "0", "--l", "1"],
    );
    assert_eq!(v["ideal"], "(x1x2, x1x3, x2x3)");
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert_eq!(
        code(&["snc", "--n", "2", "--r", "3", "--p", "0", "--l", "1"]).0,
        2
    );
    assert_eq!(
        code(&["snc", "--n", "2", "--r", "0", "--p", "0", "--l", "1"]).0,
        2
    );
}

#[test]
fn snc_verification() {
    let v = json(
        "snc",
        &[
            "snc", "--n", "4", "--r", "3", "--p", "2", "--l", "1", "--verify",
        ],
    );
    let checks = v["verification"]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
    let text = ok(&[
        "snc", "--n", "4", "--r", "3", "--p", "2", "--l", "1", "--verify",
    ]);
    let n = checks.len();
    assert_eq!(
        field(&text, "verification"),
        format!("pass ({n}/{n} checks)")
    );
}

#[test]
fn bounds_examples() {
    let text = ok(&["bounds", "--n", "2", "--d", "3", "--p", "0"]);
    assert_eq!(field(&text, "bound_z2"), "1");
    assert_eq!(field(&text, "bound_z"), "3");
    let v = json(
        "bounds",
        &["bounds", "--n", "3", "--d", "4", "--p", "1", "--l", "2"],
    );
    assert_eq!(v["bound_z2"], "35");
    assert_eq!(v["bound_z"], "56");
    assert_eq!(v["surjectivity_threshold"], 4);
    let text = ok(&["bounds", "--n", "3", "--d", "4", "--p", "1", "--l", "2"]);
    assert_eq!(field(&text, "surjectivity_threshold"), "4 (l = 2)");
    let (c, err) = code(&["bounds", "--n", "2", "--d", "0", "--p", "0"]);
    assert_eq!(c, 2);
    assert!(err.contains("d = 0"), "{err}");
    assert_eq!(
        code(&["bounds", "--n", "2", "--d", "3", "--p", "0", "--l", "0"]).0,
        2
    );
}

#[test]
fn dims_examples() {
    let table = temp_file("one.json", r#"{"n": 5, "middle": [[1, 1, 1]]}"#);
    let t = table.to_str().unwrap();
    assert_eq!(
        field(&ok(&["dims", "--table", t, "--l", "3", "--p", "1"]), "grf"),
        "1"
    );
    let v = json(
        "dims",
        &[
            "dims",
            "--table",
            t,
            "--l",
            "3",
            "--p",
            "1",
            "--pushforward",
        ],
    );
    assert_eq!(v["grf"], 1);
    assert_eq!(v["pushforward_fp"], "1");

    let empty = temp_file("empty.json", r#"{"n": 5}"#);
    assert_eq!(
        field(
            &ok(&[
                "dims",
                "--table",
                empty.to_str().unwrap(),
                "--l",
                "4",
                "--p",
                "0"
            ]),
            "grf"
        ),
        "0"
    );

    let bad = temp_file("bad.json", r#"{"n": 5, "middle": [[4, 0, 1]]}"#);
    let (c, err) = code(&[
        "dims",
        "--table",
        bad.to_str().unwrap(),
        "--l",
        "3",
        "--p",
        "0",
    ]);
    assert_eq!(c, 2);
    assert!(err.contains("dimension invariant violated"), "{err}");

    let negative = temp_file("neg.json", r#"{"n": 5, "middle": [[1, 1, -1]]}"#);
    assert_eq!(
        code(&[
            "dims",
            "--table",
            negative.to_str().unwrap(),
            "--l",
            "3",
            "--p",
            "0"
        ])
        .0,
        2
    );
    let inconsistent = temp_file(
        "inc.json",
        r#"{"n": 4, "middle": [[1, 1, 1]], "top": [[2, 2, 2]]}"#,
    );
    let (c, err) = code(&[
        "dims",
        "--table",
        inconsistent.to_str().unwrap(),
        "--l",
        "2",
        "--p",
        "1",
    ]);
    assert_eq!(c, 2);
    assert!(err.contains("inconsistent"), "{err}");
    assert_eq!(
        code(&[
            "dims",
            "--table",
            "/nonexistent/t.json",
            "--l",
            "3",
            "--p",
            "0"
        ])
        .0,
        2
    );
}

#[test]
fn verify_suite() {
    let v = json("verify", &["verify", "--n-max", "3", "--p-max", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["snc"].as_array().unwrap().len(), 6);
    assert_eq!(
        field(&ok(&["verify", "--n-max", "3", "--p-max", "2"]), "passed"),
        "true"
    );
}

#[test]
fn output_is_deterministic_and_uncolored() {
    for args in [
        vec!["analyze", WORKED, "--witness", "w^5"],
        vec!["--json", "analyze", WORKED],
        vec![
            "--json", "snc", "--n", "5", "--r", "4", "--p", "3", "--l", "2", "--verify",
        ],
        vec!["verify", "--n-max", "2", "--p-max", "1"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.contains(&0x1b), "{args:?}");
    }
}
