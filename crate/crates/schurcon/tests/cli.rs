//! End-to-end tests of the `schurcon` binary: exit codes, determinism,
//! golden values, and schema conformance of every JSON output.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurcon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

// ---------------------------------------------------------------------------
// Minimal validator for the subset of JSON Schema used by docs/schema_v1.json
// (type / properties / required / items, with type arrays for nullables).
// ---------------------------------------------------------------------------

fn schema_doc() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema_v1.json");
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema doc exists"))
        .expect("schema doc parses")
}

fn type_matches(ty: &str, value: &Value) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
        "number" => value.is_number(),
        other => panic!("unknown schema type {other}"),
    }
}

fn validate(schema: &Value, value: &Value, path: &str) {
    if let Some(ty) = schema.get("type") {
        let ok = match ty {
            Value::String(t) => type_matches(t, value),
            Value::Array(ts) => ts
                .iter()
                .any(|t| type_matches(t.as_str().expect("type name"), value)),
            _ => panic!("bad type spec at {path}"),
        };
        assert!(ok, "{path}: {value} does not match type {ty}");
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().expect("required key");
            assert!(
                value.get(key).is_some(),
                "{path}: missing required field {key}"
            );
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v, &format!("{path}.{key}"));
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (i, v) in array.iter().enumerate() {
                validate(items, v, &format!("{path}[{i}]"));
            }
        }
    }
}

fn validate_against_shipped_schema(value: &Value) {
    let doc = schema_doc();
    let id = value
        .get("schema")
        .and_then(Value::as_str)
        .expect("output carries a schema id");
    let schema = doc
        .get("schemas")
        .and_then(|s| s.get(id))
        .unwrap_or_else(|| panic!("schema {id} not in docs/schema_v1.json"));
    validate(schema, value, id);
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

#[test]
fn dist_three_copies_golden() {
    let v = stdout_json(&["dist", "--spectrum", "0.75,0.25", "--n", "3"]);
    validate_against_shipped_schema(&v);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 2);
    assert_eq!(outcomes[0]["partition"], serde_json::json!([3, 0]));
    assert!((outcomes[0]["probability"].as_f64().unwrap() - 0.625).abs() < 1e-12);
    assert!((outcomes[1]["probability"].as_f64().unwrap() - 0.375).abs() < 1e-12);
    assert_eq!(outcomes[1]["dim_v"], "2");
}

#[test]
fn dist_uniform_two_copies() {
    let v = stdout_json(&["dist", "--spectrum", "0.5,0.5", "--n", "2"]);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert!((outcomes[0]["probability"].as_f64().unwrap() - 0.75).abs() < 1e-12);
    assert!((outcomes[1]["probability"].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn dist_rejects_non_distribution() {
    assert_eq!(exit_code(&["dist", "--spectrum", "0.6,0.5", "--n", "2"]), 2);
}

#[test]
fn dist_normalize_flag_rescales() {
    assert_eq!(exit_code(&["dist", "--spectrum", "1.5,0.5", "--n", "2"]), 2);
    let v = stdout_json(&["dist", "--spectrum", "1.5,0.5", "--n", "2", "--normalize"]);
    assert!((v["spectrum"][0].as_f64().unwrap() - 0.75).abs() < 1e-12);
}

#[test]
fn dist_csv_has_fixed_header() {
    let out = run(&["dist", "--spectrum", "0.75,0.25", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("partition,dim_v,dim_u,probability,ebits\r\n"));
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[test]
fn simulate_certifies_the_one_ebit_branch() {
    let v = stdout_json(&[
        "simulate",
        "--spectrum",
        "0.75,0.25",
        "--n",
        "3",
        "--certify-bell",
    ]);
    validate_against_shipped_schema(&v);
    assert_eq!(v["certified"], Value::Bool(true));
    let outcomes = v["outcomes"].as_array().unwrap();
    let mixed = outcomes
        .iter()
        .find(|o| o["partition"] == serde_json::json!([2, 1]))
        .unwrap();
    assert!((mixed["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(mixed["bell_size"], 2);
    assert!(v["mismatch_probability"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn simulate_single_level_spectrum() {
    let v = stdout_json(&["simulate", "--spectrum", "1.0", "--n", "2"]);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 1);
    assert_eq!(outcomes[0]["ebits"].as_f64().unwrap(), 0.0);
}

#[test]
fn simulate_guard_exits_three() {
    assert_eq!(
        exit_code(&["simulate", "--spectrum", "0.75,0.25", "--n", "9"]),
        3
    );
}

#[test]
fn simulate_certify_rejects_non_qubits() {
    assert_eq!(
        exit_code(&[
            "simulate",
            "--spectrum",
            "0.5,0.3,0.2",
            "--n",
            "2",
            "--certify-bell"
        ]),
        2
    );
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

#[test]
fn sample_is_byte_deterministic_and_matches_binomial() {
    let args = [
        "sample",
        "--spectrum",
        "0.75,0.25",
        "--n",
        "2",
        "--shots",
        "1000000",
        "--seed",
        "42",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");

    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    validate_against_shipped_schema(&v);
    let shapes = v["shapes"].as_array().unwrap();
    let anti = shapes
        .iter()
        .find(|s| s["partition"] == serde_json::json!([1, 1]))
        .unwrap();
    let freq = anti["frequency"].as_f64().unwrap();
    assert!((freq - 0.1875).abs() < 0.0012, "{freq}");
    assert!(v["chi_square"]["p_value"].as_f64().unwrap() > 0.001);
}

#[test]
fn sample_single_shot_lists_one_shape() {
    let v = stdout_json(&[
        "sample", "--spectrum", "0.75,0.25", "--n", "4", "--shots", "1", "--seed", "9",
    ]);
    assert_eq!(v["shapes"].as_array().unwrap().len(), 1);
    assert_eq!(v["shapes"][0]["count"], 1);
}

#[test]
fn sample_different_seeds_differ() {
    let a = run(&["sample", "--spectrum", "0.6,0.4", "--n", "3", "--shots", "1000", "--seed", "1"]);
    let b = run(&["sample", "--spectrum", "0.6,0.4", "--n", "3", "--shots", "1000", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

// ---------------------------------------------------------------------------
// exponent / tail
// ---------------------------------------------------------------------------

#[test]
fn exponent_uniform_closed_form_and_header() {
    let out = run(&[
        "exponent",
        "--spectrum",
        "0.5,0.5",
        "--rate-min",
        "0.25",
        "--rate-max",
        "1.0",
        "--steps",
        "3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "R,parametric,primal,bh,tail_estimate");
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let r: f64 = cells[0].parse().unwrap();
        let parametric: f64 = cells[1].parse().unwrap();
        assert!((parametric - (1.0 - r)).abs() < 1e-6, "{line}");
        let primal: f64 = cells[2].parse().unwrap();
        assert!((parametric - primal).abs() < 2e-3);
    }
}

#[test]
fn exponent_duality_at_half_bit() {
    let v = stdout_json(&[
        "exponent",
        "--spectrum",
        "0.75,0.25",
        "--rate-min",
        "0.5",
        "--rate-max",
        "0.5",
        "--steps",
        "1",
        "--format",
        "json",
    ]);
    validate_against_shipped_schema(&v);
    let point = &v["points"][0];
    let parametric = point["parametric"].as_f64().unwrap();
    let primal = point["primal"].as_f64().unwrap();
    assert!((parametric - primal).abs() < 2e-3);
}

#[test]
fn exponent_rejects_grid_outside_range() {
    assert_eq!(
        exit_code(&["exponent", "--spectrum", "0.75,0.25", "--rate-max", "1.5"]),
        2
    );
}

#[test]
fn tail_full_sum_is_one_and_validates() {
    let v = stdout_json(&[
        "tail", "--spectrum", "0.75,0.25", "--n", "50", "--rate-min", "1.0", "--rate-max",
        "1.0", "--steps", "1", "--format", "json",
    ]);
    validate_against_shipped_schema(&v);
    let p = v["points"][0]["tail_probability"].as_f64().unwrap();
    assert!((p - 1.0).abs() < 1e-9);
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[test]
fn checks_pass_with_exit_zero() {
    for args in [
        vec!["check", "dims", "--d", "2", "--n-max", "20"],
        vec!["check", "lemma3", "--d", "2", "--n-max", "40"],
        vec![
            "check",
            "completeness",
            "--spectrum",
            "0.5,0.3,0.2",
            "--n-max",
            "30",
        ],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        validate_against_shipped_schema(&v);
        assert_eq!(v["passed"], Value::Bool(true));
    }
}

#[test]
fn lemma3_reports_both_coefficients() {
    let v = stdout_json(&["check", "lemma3", "--d", "4", "--n-max", "40"]);
    assert_eq!(v["coefficient_stated"].as_f64().unwrap(), 18.0);
    assert_eq!(v["coefficient_derived"].as_f64().unwrap(), 20.0);
    assert_eq!(v["coefficient_used"].as_f64().unwrap(), 20.0);
}

// ---------------------------------------------------------------------------
// yield / teleport / densecode
// ---------------------------------------------------------------------------

#[test]
fn yield_reports_mean_and_capacity() {
    let v = stdout_json(&["yield", "--spectrum", "0.75,0.25", "--n", "3"]);
    validate_against_shipped_schema(&v);
    assert!((v["mean_ebits_per_copy"].as_f64().unwrap() - 0.125).abs() < 1e-12);
    assert!((v["capacity"].as_f64().unwrap() - 0.811278124459).abs() < 1e-10);
}

#[test]
fn teleport_transcript_golden() {
    let v = stdout_json(&["teleport", "--bell-size", "2", "--seed", "7"]);
    validate_against_shipped_schema(&v);
    assert_eq!(v["classical_bits"].as_f64().unwrap(), 2.0);
    for branch in v["branches"].as_array().unwrap() {
        assert!((branch["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    }
    assert!((v["sampled"]["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn teleport_guard_is_input_error() {
    assert_eq!(exit_code(&["teleport", "--bell-size", "64"]), 2);
}

#[test]
fn densecode_decodes_everything() {
    let v = stdout_json(&["densecode", "--bell-size", "3"]);
    validate_against_shipped_schema(&v);
    assert_eq!(v["correct"], 9);
    assert_eq!(v["error_rate"].as_f64().unwrap(), 0.0);
    // Allow the 12-significant-digit output rounding.
    assert!((v["effect_bits"].as_f64().unwrap() - 3.0f64.log2()).abs() < 1e-11);
    for decode in v["decodes"].as_array().unwrap() {
        assert_eq!(decode["message"], decode["decoded"]);
    }
}

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("schurcon-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dist.json");
    let stdout_run = run(&["dist", "--spectrum", "0.75,0.25", "--n", "4"]);
    let file_run = run(&[
        "dist",
        "--spectrum",
        "0.75,0.25",
        "--n",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(file_run.status.success());
    assert!(file_run.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, stdout_run.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn identical_configs_are_byte_identical() {
    for args in [
        vec!["dist", "--spectrum", "0.5,0.3,0.2", "--n", "6"],
        vec!["teleport", "--bell-size", "3", "--seed", "11"],
        vec!["exponent", "--spectrum", "0.75,0.25", "--steps", "5"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&["dist", "--n", "3"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
    assert_eq!(exit_code(&["dist", "--spectrum", "abc", "--n", "2"]), 2);
}
