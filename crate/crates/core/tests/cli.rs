use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use divmax::testkit::{gen_instance, ConstraintKind, GenParams, ObjectiveKind};
use serde_json::Value;

fn divmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divmax"))
        .args(args)
        .env_remove("DIVMAX_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const WORKED: &str = r#"{
  "distances": [[0, 1, 1], [1, 0, 2], [1, 2, 0]],
  "lambda": 1.0,
  "objective": {"type": "modular", "weights": [4, 1, 0]},
  "constraint": {"type": "uniform", "p": 2}
}"#;

fn big_instance(dir: &Path, n: usize, p: usize) -> String {
    let inst = gen_instance(&GenParams {
        n,
        beta: 1.0,
        objective: ObjectiveKind::Modular,
        constraint: ConstraintKind::Uniform { p },
        lambda: 1.0,
        seed: 9,
    })
    .unwrap();
    write(dir, "big.json", &inst.to_json())
}

#[test]
fn solve_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "worked.json", WORKED);
    for (algorithm, expected) in [("greedy", 6.0), ("local", 6.0), ("exact", 6.0)] {
        let out = divmax(&["solve", "--instance", &path, "--algorithm", algorithm]);
        assert!(out.status.success(), "{}", stderr(&out));
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["algorithm"], algorithm);
        assert_eq!(report["objective_value"], expected);
        assert_eq!(report["selected"], serde_json::json!([0, 1]));
    }
}

#[test]
fn solve_is_deterministic_and_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "worked.json", WORKED);
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for target in [&a, &b] {
        let out = divmax(&["solve", "--instance", &path, "--algorithm", "local", "--compare", "--out", target.to_str().unwrap()]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["comparison"]["ratio"], 1.0);
    assert_eq!(report["comparison"]["satisfied"], true);
}

#[test]
fn asymmetric_matrix_is_rejected_with_the_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "bad.json",
        r#"{
          "distances": [[0,1,1,1],[1,0,1,2],[1,1,0,1],[1,1,1,0]],
          "lambda": 1.0,
          "objective": {"type": "modular", "weights": [1,1,1,1]},
          "constraint": {"type": "uniform", "p": 2}
        }"#,
    );
    let out = divmax(&["solve", "--instance", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("asymmetric at (1,3)"), "{err}");
    assert_eq!(err.trim().lines().count(), 1);
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "junk.json", "{ not json");
    let out = divmax(&["solve", "--instance", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_refuses_oversized_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = big_instance(dir.path(), 30, 15);
    let out = divmax(&["solve", "--instance", &path, "--algorithm", "exact"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("search space"), "{}", stderr(&out));
}

#[test]
fn state_cap_is_configurable() {
    let dir = tempfile::tempdir().unwrap();
    let path = big_instance(dir.path(), 20, 10);
    let out = Command::new(env!("CARGO_BIN_EXE_divmax"))
        .args(["solve", "--instance", &path, "--algorithm", "exact"])
        .env("DIVMAX_MAX_STATES", "100000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("search space"), "{}", stderr(&out));
}

#[test]
fn gen_is_reproducible_and_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "gen", "--n", "7", "--beta", "2", "--objective", "coverage", "--constraint", "partition",
        "--rank", "3", "--parts", "2", "--lambda", "0.5", "--seed", "11",
    ];
    let a = divmax(&args);
    let b = divmax(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);

    let path = write(dir.path(), "gen.json", &stdout(&a));
    let out = divmax(&["solve", "--instance", &path, "--algorithm", "local"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["selected"].as_array().unwrap().len(), 3);
}

#[test]
fn bench_on_empty_directory_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = divmax(&["bench", "--dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
    assert!(stdout(&out).starts_with("instance,algorithm,"));
}

#[test]
fn bench_meets_the_guarantees() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    let out = divmax(&[
        "gen", "--n", "8", "--beta", "2", "--rank", "3", "--seed", "5", "--count", "6", "--out",
        data.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let csv_path = dir.path().join("bench.csv");
    let out = divmax(&["bench", "--dir", data.to_str().unwrap(), "--out", csv_path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));

    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let measured: Vec<&csv::StringRecord> = rows
        .iter()
        .filter(|r| &r[col("algorithm")] != "exact" && !r[col("ratio")].is_empty())
        .collect();
    assert_eq!(measured.len(), 6 * 2 + 2);
    for r in measured {
        assert_eq!(&r[col("satisfied")], "true", "{r:?}");
        let ratio: f64 = r[col("ratio")].parse().unwrap();
        assert!(ratio <= 1.0 + 1e-9);
    }
    assert_eq!(rows.iter().filter(|r| &r[col("instance")] == "SUMMARY").count(), 2);
}

#[test]
fn verify_and_compare_emit_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = divmax(&["gen", "--n", "7", "--beta", "1.5", "--rank", "3", "--seed", "3"]);
    let path = write(dir.path(), "inst.json", &stdout(&out));

    let out = divmax(&["verify", "--instance", &path, "--trials", "20"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let reports: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(reports.len() >= 20);
    assert!(reports.iter().all(|r| r["holds"] == true));

    let out = divmax(&["compare", "--instance", &path]);
    assert!(out.status.success(), "{}", stderr(&out));
    let ratios: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(ratios.len(), 2);
    assert!(ratios.iter().all(|r| r["satisfied"] == true));
}

#[test]
fn usage_errors_use_clap_exit_code() {
    let out = divmax(&["solve"]);
    assert_eq!(out.status.code(), Some(2));
    let out = divmax(&["frobnicate"]);
    assert!(!out.status.success());
}
