//! Golden reports for the CLI. Run with `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intended change.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use finsgpd::formats::SemigroupoidJson;
use finsgpd::report::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn here() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn schemas() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn finsgpd(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_finsgpd"))
        .args(args)
        .current_dir(here().join("fixtures"))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// (golden file, arguments, exit status)
const CASES: &[(&str, &[&str], i32)] = &[
    ("validate-b2", &["validate", "b2.json"], 0),
    ("validate-two-vertex", &["validate", "two-vertex.json"], 0),
    ("validate-missing-product", &["validate", "b2-missing.json"], 2),
    ("validate-xy-plus", &["validate", "xy-plus.json"], 0),
    ("green-b2", &["green", "b2.json"], 0),
    ("eggbox-b2", &["eggbox", "b2.json"], 0),
    ("eggbox-k2ab", &["eggbox", "k2ab.json"], 0),
    ("stab-b2", &["stab", "b2.json", "--edge=(1,2)"], 0),
    ("stab-s3", &["stab", "s3.json", "--edge=123"], 0),
    ("stab-r2zero", &["stab", "r2zero.json", "--edge=0"], 0),
    ("equidiv-b2", &["equidiv", "b2.json"], 0),
    ("equidiv-s3", &["equidiv", "s3.json"], 0),
    ("pseudovar-k2ab", &["pseudovar", "k2ab.json", "--all"], 0),
    ("pseudovar-b2-k", &["pseudovar", "b2.json", "--pred=K"], 0),
    ("pseudovar-n3-li", &["pseudovar", "n3.json", "--pred=LI"], 0),
    ("pseudovar-i2", &["pseudovar", "i2.json", "--pred=LI"], 0),
    ("synt-xy-plus", &["synt", "xy-plus.json"], 0),
    ("concat-xy-plus", &["concat", "xy-plus.json", "xy-plus.json"], 0),
    ("recog-xy-plus-lsl", &["recog", "xy-plus.json", "--pred=LSl"], 0),
    ("recog-xy-plus-li", &["recog", "xy-plus.json", "--pred=LI"], 0),
    ("recog-b-twice-lsl", &["recog", "b-twice.json", "--pred=LSl"], 0),
    ("factorial-xy-plus", &["factorial", "xy-plus.json"], 0),
    ("factorial-finite", &["factorial", "finite-words.json"], 0),
    ("recur-ba", &["recur", "--p=b", "--q=a"], 0),
    ("recur-ab-k2", &["recur", "--q=ab", "--target=k2ab.json", "--label=ab-to-k2.json"], 0),
    ("pseudoid-u1", &["pseudoid", "a^w = a^w b a^w", "u1.json"], 0),
    ("pseudoid-b2-aperiodic", &["pseudoid", "x^w = x^w x", "b2.json"], 0),
    ("pseudoid-li", &["pseudoid", "a^w = a^w b a^w", "--filter=LI"], 0),
    ("catalog", &["catalog"], 0),
];

#[test]
fn golden_reports() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for &(name, args, code) in CASES {
        let (got_code, stdout, stderr) = finsgpd(args);
        assert_eq!(got_code, code, "{name}: exit status, stderr: {stderr}");
        let path = here().join("golden").join(format!("{name}.txt"));
        if update {
            fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != stdout {
            mismatches.push(format!("{name}:\n--- expected\n{expected}--- got\n{stdout}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn reports_are_byte_stable() {
    for &(_, args, _) in CASES {
        assert_eq!(finsgpd(args), finsgpd(args));
    }
}

#[test]
fn documented_examples() {
    let (code, out, _) = finsgpd(&["recog", "xy-plus.json", "--pred=LSl"]);
    assert_eq!((code, out.as_str()), (0, "LSl-recognizable: true\n"));
    let (code, out, _) = finsgpd(&["validate", "b2.json"]);
    assert_eq!((code, out.as_str()), (0, "ok\n"));
    let (_, out, _) = finsgpd(&["equidiv", "b2.json"]);
    assert!(out.starts_with("NOT equidivisible; witness "));

    // x+y+x+y+ through a file written by concat
    let (_, json, _) = finsgpd(&["--json", "concat", "xy-plus.json", "xy-plus.json"]);
    let report: ConcatReport = serde_json::from_str(&json).unwrap();
    let dir = std::env::temp_dir().join(format!("finsgpd-golden-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let file = dir.join("xyxy.json");
    fs::write(&file, serde_json::to_string(&report.dfa).unwrap()).unwrap();
    let (code, out, _) = finsgpd(&["recog", file.to_str().unwrap(), "--pred=LSl"]);
    assert_eq!((code, out.as_str()), (0, "LSl-recognizable: false\n"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_statuses() {
    // usage errors come from argument parsing, before any file is read
    assert_eq!(finsgpd(&["frobnicate", "b2.json"]).0, 2);
    assert_eq!(finsgpd(&["recog", "does-not-exist.json", "--pred=Foo"]).0, 2);
    assert_eq!(finsgpd(&["green", "b2.json", "--bogus"]).0, 2);
    // invalid input
    assert_eq!(finsgpd(&["green", "b2-missing.json"]).0, 2);
    assert_eq!(finsgpd(&["stab", "b2.json", "--edge=zz"]).0, 2);
    assert_eq!(finsgpd(&["pseudoid", "a^", "b2.json"]).0, 2);
    assert_eq!(finsgpd(&["catalog", "--show=nope"]).0, 2);
    // failures that are not about the input's content
    assert_eq!(finsgpd(&["green", "does-not-exist.json"]).0, 1);
    let (code, _, err) = finsgpd(&["pseudoid", "abcdefghij = jihgfedcba", "b3.json"]);
    assert_eq!(code, 1, "{err}");
}

fn check_schema(schema: &Path, instance: &Value) {
    let s: Value = serde_json::from_str(&fs::read_to_string(schema).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&s).unwrap();
    if let Err(errors) = compiled.validate(instance) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{} rejects {instance}: {}", schema.display(), msgs.join("; "));
    };
}

/// Validates `--json` output against its schema and checks that it
/// deserializes and re-serializes to the same bytes.
fn json_round_trip<T: Serialize + DeserializeOwned>(schema: &str, args: &[&str]) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = finsgpd(&full);
    assert!(code == 0 || code == 2, "{args:?}: {err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    check_schema(&schemas().join("reports").join(schema), &v);
    let parsed: T = serde_json::from_str(&out).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(again, out, "{args:?}");
}

#[test]
fn json_reports_follow_schemas() {
    json_round_trip::<ValidateReport>("validate.json", &["validate", "b2.json"]);
    json_round_trip::<ValidateReport>("validate.json", &["validate", "b2-missing.json"]);
    json_round_trip::<GreenReport>("green.json", &["green", "b2.json"]);
    json_round_trip::<EggboxReport>("eggbox.json", &["eggbox", "b2.json"]);
    json_round_trip::<StabReport>("stab.json", &["stab", "b2.json", "--edge=(1,2)"]);
    json_round_trip::<StabReport>("stab.json", &["stab", "r2zero.json", "--edge=0"]);
    json_round_trip::<EquidivReport>("equidiv.json", &["equidiv", "b2.json"]);
    json_round_trip::<EquidivReport>("equidiv.json", &["equidiv", "s3.json"]);
    json_round_trip::<PseudovarReport>("pseudovar.json", &["pseudovar", "k2ab.json", "--all"]);
    json_round_trip::<SyntReport>("synt.json", &["synt", "xy-plus.json"]);
    json_round_trip::<ConcatReport>("concat.json", &["concat", "xy-plus.json", "xy-plus.json"]);
    json_round_trip::<RecogReport>("recog.json", &["recog", "xy-plus.json", "--pred=LSl"]);
    json_round_trip::<FactorialReport>("factorial.json", &["factorial", "xy-plus.json"]);
    json_round_trip::<FactorialReport>("factorial.json", &["factorial", "finite-words.json"]);
    json_round_trip::<RecurReport>("recur.json", &["recur", "--p=b", "--q=a"]);
    json_round_trip::<RecurReport>("recur.json", &["recur", "--q=ab", "--target=k2ab.json", "--label=ab-to-k2.json"]);
    json_round_trip::<PseudoidReport>("pseudoid.json", &["pseudoid", "a^w = a^w b a^w", "u1.json"]);
    json_round_trip::<PseudoidReport>("pseudoid.json", &["pseudoid", "x = x^w", "i2.json"]);
    json_round_trip::<PseudoidReport>("pseudoid.json", &["pseudoid", "a^w = a^w b a^w", "--filter=LI"]);
    json_round_trip::<CatalogReport>("catalog.json", &["catalog"]);
}

#[test]
fn input_files_follow_schemas() {
    let fixtures = here().join("fixtures");
    for entry in fs::read_dir(&fixtures).unwrap() {
        let path = entry.unwrap().path();
        let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        let schema = if v.get("mul").is_some() {
            "semigroupoid.json"
        } else if v.get("delta").is_some() {
            "dfa.json"
        } else if v.get("words").is_some() {
            "words.json"
        } else if v["edges"].is_array() {
            "graph.json"
        } else {
            "label.json"
        };
        check_schema(&schemas().join(schema), &v);
    }
    let (_, out, _) = finsgpd(&["catalog", "--show=B3"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    check_schema(&schemas().join("semigroupoid.json"), &v);
    let parsed: SemigroupoidJson = serde_json::from_value(v).unwrap();
    assert_eq!(parsed.mul.len(), 100);
}
