//! End-to-end runs of the command-line tool.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn dycoh(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dycoh"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn config(name: &str) -> String {
    configs().join(name).to_string_lossy().into_owned()
}

fn report(dir: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap()
}

fn write_config(dir: &Path, text: &str) -> String {
    let p = dir.join("job.json");
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_unit_preset_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = dycoh(&["validate", "--config", &config("z2_unit_f2.json")], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(report(dir.path())["passed"], Value::Bool(true));
}

#[test]
fn betti_of_z2_unit_over_f2() {
    let dir = tempfile::tempdir().unwrap();
    let o = dycoh(
        &["betti", "--config", &config("z2_unit_f2.json"), "--max-degree", "3"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(dir.path())["betti"], serde_json::json!([1, 1, 1, 1]));
    let csv = std::fs::read_to_string(dir.path().join("betti.csv")).unwrap();
    assert_eq!(csv, "degree,dimension\n0,1\n1,1\n2,1\n3,1\n");
}

#[test]
fn field_flag_overrides_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = dycoh(
        &["betti", "--config", &config("z2_unit_f2.json"), "--field", "Q"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let r = report(dir.path());
    assert_eq!(r["betti"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(r["field"], "Q");
}

#[test]
fn weak_comp_on_sweedler_passes_per_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let o = dycoh(
        &[
            "check",
            "--suite",
            "weak-comp",
            "--seed",
            "42",
            "--samples",
            "10",
            "--config",
            &config("sweedler_trivial_q.json"),
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let r = report(dir.path());
    let entries = r["suites"][0]["results"].as_array().unwrap();
    for axiom in ["axiom-1", "axiom-2", "axiom-3", "axiom-4"] {
        assert!(
            entries
                .iter()
                .any(|e| e["identity"].as_str().unwrap().contains(axiom) && e["status"] == "pass"),
            "{axiom}"
        );
    }
    assert!(dir.path().join("timings.json").exists());
}

#[test]
fn reports_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["check", "--suite", "dga", "--config", &config("s3_transpositions_f3.json")];
    for d in [&a, &b] {
        assert_eq!(dycoh(&args, d.path()).status.code(), Some(0));
    }
    let read = |d: &tempfile::TempDir| std::fs::read(d.path().join("report.json")).unwrap();
    assert_eq!(read(&a), read(&b));
}

#[test]
fn config_errors_exit_two_with_a_pointer() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(
        dir.path(),
        r#"{"field":"Q","backend":"vec_g","group":{"preset":"cyclic","n":2},"coefficient":{"preset":"grouplike","support":[5]}}"#,
    );
    let o = dycoh(&["validate", "--config", &path], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/coefficient/support/0"));

    let o = dycoh(&["betti", "--config", &config("sweedler_trivial_q.json"), "--max-degree", "4"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/max_degree"));
}

#[test]
fn failed_checks_exit_one() {
    // A counit that is not a counit: the coalgebra axioms fail.
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(
        dir.path(),
        r#"{"field":"Q","backend":"vec_g","group":{"preset":"cyclic","n":2},
            "coefficient":{"grade_dims":[1,0],"action":[[[1]],[[1]]],"comul":[[1]],"counit":[["2"]]}}"#,
    );
    let o = dycoh(&["validate", "--config", &path], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let r = report(dir.path());
    assert_eq!(r["passed"], Value::Bool(false));
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn shipped_configs_load_and_match_the_schema_fields() {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/job.schema.json")).unwrap(),
    )
    .unwrap();
    let allowed: Vec<&str> = schema["properties"].as_object().unwrap().keys().map(String::as_str).collect();
    let mut n = 0;
    for entry in std::fs::read_dir(configs()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        dycoh::config::JobConfig::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let v: Value = serde_json::from_str(&text).unwrap();
        for key in v.as_object().unwrap().keys() {
            assert!(allowed.contains(&key.as_str()), "{key} in {}", path.display());
        }
        n += 1;
    }
    assert!(n >= 2);
}
