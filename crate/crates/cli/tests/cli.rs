//! End-to-end tests of the `mubell` binary: exit codes, output formats,
//! determinism, and schema conformance of the JSON reports.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mubell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mubell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

// ---- minimal structural JSON-schema checker ---------------------------

fn type_matches(ty: &str, doc: &Value) -> bool {
    match ty {
        "object" => doc.is_object(),
        "array" => doc.is_array(),
        "string" => doc.is_string(),
        "integer" => doc.is_i64() || doc.is_u64(),
        "number" => doc.is_number(),
        "boolean" => doc.is_boolean(),
        "null" => doc.is_null(),
        _ => false,
    }
}

fn validate(schema: &Value, doc: &Value, root: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let name = reference
            .strip_prefix("#/definitions/")
            .ok_or_else(|| format!("{path}: unsupported $ref {reference}"))?;
        let target = root
            .get("definitions")
            .and_then(|d| d.get(name))
            .ok_or_else(|| format!("{path}: missing definition {name}"))?;
        return validate(target, doc, root, path);
    }
    if let Some(ty) = schema.get("type") {
        let allowed: Vec<String> = match ty {
            Value::String(s) => vec![s.clone()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str().map(String::from)).collect(),
            _ => return Err(format!("{path}: malformed type")),
        };
        if !allowed.iter().any(|t| type_matches(t, doc)) {
            return Err(format!("{path}: expected {allowed:?}"));
        }
        if doc.is_null() && allowed.iter().any(|t| t == "null") {
            return Ok(());
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        if let Some(obj) = doc.as_object() {
            for key in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
    }
    if let (Some(props), Some(obj)) =
        (schema.get("properties").and_then(Value::as_object), doc.as_object())
    {
        for (key, subschema) in props {
            if let Some(subdoc) = obj.get(key) {
                validate(subschema, subdoc, root, &format!("{path}.{key}"))?;
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), doc.as_array()) {
        for (i, subdoc) in arr.iter().enumerate() {
            validate(items, subdoc, root, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_schema(schema_file: &str, doc: &str) {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs")
        .join(schema_file);
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(&schema_path).expect("schema readable"))
            .expect("schema parses");
    let doc: Value = serde_json::from_str(doc).expect("output parses as JSON");
    validate(&schema, &doc, &schema, "$").unwrap_or_else(|e| panic!("{schema_file}: {e}"));
}

// ---- field -------------------------------------------------------------

#[test]
fn field_gf4_reports_appendix_data() {
    let out = mubell(&["field", "-p", "2", "-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("GF(2^2; modulus=[1,1,1]; primitive=[0,1])"));
    assert!(text.contains("selfdual search:  {[0,1], [1,1]} [selfdual]"));
    assert!(text.contains("dual(polynomial): {[1,1], [1,0]} [dual]"));
}

#[test]
fn field_gf9_reports_almost_selfdual_exception() {
    let out = mubell(&["field", "-p", "3", "-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("almost-selfdual (exception at index 2, tr = 2)"));
}

#[test]
fn field_rejects_composite_characteristic() {
    let out = mubell(&["field", "-p", "4", "-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4 is not prime"));
}

#[test]
fn field_json_matches_schema() {
    let out = mubell(&["field", "-p", "3", "-n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_schema("field.schema.json", &stdout(&out));
}

// ---- mub ---------------------------------------------------------------

#[test]
fn mub_qubit_has_three_bases() {
    let out = mubell(&["mub", "-p", "2", "-n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mutually unbiased bases: 3"));
    assert!(text.contains("verification: 3 pairs checked, all exact"));
}

#[test]
fn mub_gf9_has_ten_bases() {
    let out = mubell(&["mub", "-p", "3", "-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mutually unbiased bases: 10"));
    assert!(text.contains("verification: 45 pairs checked, all exact"));
}

#[test]
fn mub_csv_is_tabular() {
    let out = mubell(&["mub", "-p", "7", "-n", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("basis,label,vector,component,scale,value"));
    // 8 bases × 7 vectors × 7 components data rows
    assert_eq!(text.lines().count(), 1 + 8 * 7 * 7);
    assert!(text.contains("\"cyc(7)["));
}

#[test]
fn mub_json_matches_schema() {
    let out = mubell(&["mub", "-p", "2", "-n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_schema("mub.schema.json", &stdout(&out));
}

#[test]
fn mub_no_verify_skips_the_block() {
    let out = mubell(&["mub", "-p", "2", "-n", "1", "--no-verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verification: skipped"));
}

// ---- bell --------------------------------------------------------------

#[test]
fn bell_qubit_names_and_census() {
    let out = mubell(&["bell", "-p", "2", "-n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("census: 3 symmetric, 1 antisymmetric, 0 neither"));
    for name in ["Phi+", "Psi+", "Phi-", "Psi-"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn bell_gf4_census() {
    let out = mubell(&["bell", "-p", "2", "-n", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("census: 10 symmetric, 6 antisymmetric, 0 neither"));
}

#[test]
fn bell_single_particle_census() {
    let out = mubell(&["bell", "-p", "2", "-n", "2", "--mode", "single-particle"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("census: 6 symmetric, 2 antisymmetric, 8 neither"));
}

#[test]
fn bell_single_particle_needs_dimension_four() {
    let out = mubell(&["bell", "-p", "3", "-n", "1", "--mode", "single-particle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bell_json_matches_schema() {
    let out = mubell(&["bell", "-p", "3", "-n", "1", "--format", "json"]);
    assert!(out.status.success());
    assert_schema("bell.schema.json", &stdout(&out));
    let sp = mubell(&["bell", "-p", "2", "-n", "2", "--mode", "single-particle", "--format", "json"]);
    assert!(sp.status.success());
    assert_schema("bell.schema.json", &stdout(&sp));
}

#[test]
fn bell_gf4_reports_coordinate_expansions() {
    let out = mubell(&["bell", "-p", "2", "-n", "2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_schema("bell.schema.json", &text);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let reports = doc["coordinate_reports"].as_array().expect("present for GF(4)");
    assert_eq!(reports.len(), 16);
    // every literal coordinate formula resolves to an abstract state
    assert!(reports.iter().all(|r| r["dictionary"].is_string()));
}

// ---- verify ------------------------------------------------------------

#[test]
fn verify_fast_suite_passes() {
    let out = mubell(&["verify", "--level", "fast"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains(", 0 failed"));
    assert!(text.contains("ok   mub/pairwise-unbiased GF(3^2)"));
}

#[test]
fn verify_single_field() {
    let out = mubell(&["verify", "-p", "5", "-n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bell/projector-sum-identities GF(5^1)"));
}

#[test]
fn verify_rejects_fields_above_the_bound() {
    let out = mubell(&["verify", "-p", "11", "-n", "2", "--level", "exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rejected"));
}

#[test]
fn verify_json_matches_schema() {
    let out = mubell(&["verify", "-p", "2", "-n", "1", "--format", "json"]);
    assert!(out.status.success());
    assert_schema("verify.schema.json", &stdout(&out));
}

// ---- cross-cutting -----------------------------------------------------

#[test]
fn identical_configs_give_identical_bytes() {
    let first = mubell(&["bell", "-p", "2", "-n", "2", "--format", "json"]);
    let second = mubell(&["bell", "-p", "2", "-n", "2", "--format", "json"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let dir = std::env::temp_dir();
    let a = dir.join("mubell_det_a.json");
    let b = dir.join("mubell_det_b.json");
    for path in [&a, &b] {
        let out = mubell(&[
            "mub",
            "-p",
            "3",
            "-n",
            "1",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn max_dim_env_overrides_the_bound() {
    let out = mubell(&["field", "-p", "2", "-n", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds the supported bound"));

    let out = Command::new(env!("CARGO_BIN_EXE_mubell"))
        .args(["field", "-p", "2", "-n", "13"])
        .env("MUBELL_MAX_DIM", "10000")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout(&out).contains("per-element tables omitted above order 81"));
}
