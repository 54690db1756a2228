//! End-to-end checks of the binary: subcommand output, exit codes,
//! deterministic JSON, and schema conformance.

use std::path::Path;
use std::process::{Command, Output};

fn congruence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_congruence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn syntactic_of_a_progression_prints_the_congruence() {
    let out = congruence(&["syntactic", "nat", "--set", "5+3N"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "≡_{3,3}");
}

#[test]
fn verify_table1_exits_zero() {
    let out = congruence(&["verify", "table1", "--bound", "3", "--seed", "7"]);
    assert!(out.status.success(), "{}", stdout_of(&out));
    assert!(stdout_of(&out).contains("PASS"));
}

#[test]
fn check_spp_verdicts_drive_the_exit_code() {
    let out = congruence(&[
        "check", "nat", "--fn", "floor_e_fact", "--what", "spp", "--window", "24", "--bound", "3",
    ]);
    assert!(out.status.success(), "{}", stdout_of(&out));
    let out = congruence(&[
        "check", "nat", "--fn", "zigzag_g", "--what", "spp", "--window", "24", "--bound", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("NOT stable-preorder preserving"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let out = congruence(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = congruence(&["syntactic", "nat", "--set", "gibberish"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = std::env::temp_dir().join("congruence-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "carrier 2\nop f 1\n0 9\n").unwrap();
    let out = congruence(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_reports_counts_for_a_file() {
    let dir = std::env::temp_dir().join("congruence-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mod4.alg");
    std::fs::write(&path, "carrier 4\nop suc 1\n1 2 3 0\n").unwrap();
    let out = congruence(&["analyze", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("congruences: 3"), "{text}");
}

#[test]
fn lattice_members_include_the_adjoined_universe() {
    let out = congruence(&["lattice", "nat", "--set", "finite{0}", "--bounded"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("up(a=0,k=1,F={},D={0})"), "{text}");
    assert!(text.contains("3 members"), "{text}");
}

#[test]
fn json_reports_are_deterministic_and_schema_conformant() {
    let a = congruence(&["verify", "ring", "--json"]);
    let b = congruence(&["verify", "ring", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    validate(&report, &schema, &schema);
}

#[test]
fn family_json_conforms_to_its_schema() {
    let out = congruence(&["lattice", "nat", "--set", "5+3N", "--boolean", "--json"]);
    assert!(out.status.success());
    let family: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/family-schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    validate(&family, &schema, &schema);
}

#[test]
fn examples_print_the_named_objects() {
    let out = congruence(&["examples"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("f=16"));
    assert!(text.contains("≡_{3,3}"));
}

/// Minimal JSON-schema walker covering the subset the shipped schemas
/// use: type (possibly a list), enum, required, properties,
/// additionalProperties: false, and array items.
fn validate(value: &serde_json::Value, schema: &serde_json::Value, _root: &serde_json::Value) {
    use serde_json::Value;
    if let Some(allowed) = schema.get("enum") {
        assert!(
            allowed.as_array().unwrap().contains(value),
            "{value} not among {allowed}"
        );
        return;
    }
    if let Some(ty) = schema.get("type") {
        let types: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().map(|t| t.as_str().unwrap()).collect(),
            _ => panic!("bad schema type {ty}"),
        };
        let matches = types.iter().any(|t| match *t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => panic!("unsupported type {other}"),
        });
        assert!(matches, "{value} does not match type {types:?}");
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
            for key in required {
                assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
            }
        }
        let props = schema.get("properties").and_then(|p| p.as_object());
        if let Some(props) = props {
            for (key, sub) in obj {
                match props.get(key) {
                    Some(subschema) => validate(sub, subschema, _root),
                    None => {
                        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                            panic!("unexpected property {key}");
                        }
                    }
                }
            }
        }
    }
    if let (Some(items), Some(list)) = (schema.get("items"), value.as_array()) {
        for item in list {
            validate(item, items, _root);
        }
    }
}
