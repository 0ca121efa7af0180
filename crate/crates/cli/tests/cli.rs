use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_hrs");

fn example_job() -> Value {
    json!({"p": 7, "r": 4, "s": 2, "t": 4, "alphas": [1, 2, 3, 4]})
}

fn with(mut job: Value, extra: Value) -> Value {
    let obj = job.as_object_mut().unwrap();
    for (k, v) in extra.as_object().unwrap() {
        obj.insert(k.clone(), v.clone());
    }
    job
}

fn run(dir: &Path, cmd: &str, job: &Value, extra: &[&str]) -> Output {
    let path = dir.join(format!("{cmd}.json"));
    std::fs::write(&path, job.to_string()).unwrap();
    Command::new(BIN)
        .arg(cmd)
        .arg("--job")
        .arg(&path)
        .args(extra)
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn encode_example() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), "encode", &with(example_job(), json!({"poly": [5, 2, 3, 1]})), &[]);
    assert_eq!(stdout_json(&out), json!({"s": 2, "r": 4, "entries": [[4, 1, 2, 6], [4, 5, 5, 4]]}));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"s":2,"r":4,"entries":[[4,1,2,6],[4,5,5,4]]}"#
    );

    let zero = run(dir.path(), "encode", &with(example_job(), json!({"poly": [0]})), &[]);
    assert_eq!(stdout_json(&zero)["entries"], json!([[0, 0, 0, 0], [0, 0, 0, 0]]));
}

#[test]
fn decode_example_and_codeword() {
    let dir = TempDir::new().unwrap();
    let job = with(example_job(), json!({"matrix": [[4, 1, 2, 6], [5, 5, 6, 4]], "e": 2}));
    let out = run(dir.path(), "decode", &job, &[]);
    assert_eq!(
        String::from_utf8(out.stdout.clone()).unwrap().trim(),
        r#"{"status":"ok","poly":[5,2,3,1],"error_weight":2}"#
    );

    let clean = with(example_job(), json!({"matrix": [[4, 1, 2, 6], [4, 5, 5, 4]]}));
    let v = stdout_json(&run(dir.path(), "decode", &clean, &[]));
    assert_eq!(v["status"], "ok");
    assert_eq!(v["error_weight"], 0);
}

#[test]
fn decode_failure_is_a_result() {
    let dir = TempDir::new().unwrap();
    let job = with(example_job(), json!({"matrix": [[0, 0, 2, 6], [5, 1, 6, 4]]}));
    let v = stdout_json(&run(dir.path(), "decode", &job, &[]));
    assert_eq!(v["status"], "fail");
    assert!(["no_solution", "non_divisible", "distance_exceeded"].contains(&v["reason"].as_str().unwrap()));
}

#[test]
fn validation_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("decode", with(example_job(), json!({"matrix": [[4, 1, 2, 6], [5, 5, 6, 4]], "e": 3}))),
        ("encode", with(example_job(), json!({"poly": [1, 1, 1, 1, 1]}))),
        ("corrupt", with(example_job(), json!({"matrix": [[4, 1, 2, 6], [4, 5, 5, 4]], "weight": 9}))),
        ("encode", with(example_job(), json!({"p": 8, "poly": [1]}))),
        ("encode", with(example_job(), json!({"alphas": [1, 1, 2, 3], "poly": [1]}))),
        ("decode", with(example_job(), json!({"matrix": [[4, 1, 2], [5, 5, 6]]}))),
        ("encode", example_job()),
    ];
    for (cmd, job) in cases {
        let out = run(dir.path(), cmd, &job, &[]);
        assert_eq!(out.status.code(), Some(2), "{cmd} {job}");
        assert!(!out.stderr.is_empty());
    }
    let degree = run(dir.path(), "encode", &with(example_job(), json!({"poly": [1, 1, 1, 1, 1]})), &[]);
    assert!(String::from_utf8_lossy(&degree.stderr).contains("t - 1 = 3"));

    let missing = Command::new(BIN).args(["encode", "--job", "/nonexistent/job.json"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let dir = TempDir::new().unwrap();
    let job = json!({"p": 101, "r": 3, "s": 2, "t": 5, "alphas": [0, 1, 2], "budget": 1000});
    assert_eq!(run(dir.path(), "mindist", &job, &[]).status.code(), Some(3));
}

#[test]
fn out_of_range_entries_are_reduced_with_a_warning() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), "encode", &with(example_job(), json!({"poly": [-2, 9, 3, 1]})), &[]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(stdout_json(&out)["entries"], json!([[4, 1, 2, 6], [4, 5, 5, 4]]));
}

#[test]
fn encode_corrupt_decode_pipeline() {
    let dir = TempDir::new().unwrap();
    let base = json!({"p": 11, "r": 5, "s": 3, "t": 6, "alphas": [0, 2, 3, 7, 10]});
    let poly = json!([3, 0, 10, 4, 4, 1]);
    let radius = (15 - 6) / 2;
    for seed in 0..20u64 {
        let weight = seed as usize % (radius + 1);
        let encoded = run(dir.path(), "encode", &with(base.clone(), json!({"poly": poly})), &[]);
        let codeword = stdout_json(&encoded);

        let corrupt_job = with(base.clone(), json!({"matrix": codeword, "weight": weight}));
        let corrupted = stdout_json(&run(dir.path(), "corrupt", &corrupt_job, &["--seed", &seed.to_string()]));
        let received = corrupted["received"].clone();

        let decoded = run(dir.path(), "decode", &with(base.clone(), json!({"matrix": received})), &[]);
        let text = String::from_utf8(decoded.stdout).unwrap();
        assert_eq!(text.trim(), format!(r#"{{"status":"ok","poly":{poly},"error_weight":{weight}}}"#));
    }
}

#[test]
fn corrupt_is_seeded_and_exact() {
    let dir = TempDir::new().unwrap();
    let job = with(example_job(), json!({"matrix": [[4, 1, 2, 6], [4, 5, 5, 4]], "weight": 8}));
    let a = run(dir.path(), "corrupt", &job, &["--seed", "5"]);
    let b = run(dir.path(), "corrupt", &job, &["--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let err = &stdout_json(&a)["error"]["entries"];
    // Full weight: every column has a nonzero top entry.
    assert!(err[0].as_array().unwrap().iter().all(|v| v != 0));

    let unchanged = with(job, json!({"weight": 0}));
    let v = stdout_json(&run(dir.path(), "corrupt", &unchanged, &[]));
    assert_eq!(v["received"]["entries"], json!([[4, 1, 2, 6], [4, 5, 5, 4]]));
}

#[test]
fn interpolate_inverts_encode() {
    let dir = TempDir::new().unwrap();
    let job = with(
        example_job(),
        json!({"multipliers": [[1, 2, 3, 4], [5, 6, 1, 2]], "poly": [5, 2, 3, 1]}),
    );
    let codeword = stdout_json(&run(dir.path(), "encode", &job, &[]));
    let v = stdout_json(&run(dir.path(), "interpolate", &with(job, json!({"matrix": codeword})), &[]));
    assert_eq!(v, json!({"poly": [5, 2, 3, 1]}));
}

#[test]
fn mindist_small_code_is_mds() {
    let dir = TempDir::new().unwrap();
    let job = json!({"p": 5, "r": 3, "s": 2, "t": 3, "alphas": [0, 1, 2]});
    let v = stdout_json(&run(dir.path(), "mindist", &job, &[]));
    assert_eq!(v, json!({"min_distance": 4, "singleton_bound": 4, "mds": true}));
}

#[test]
fn simulate_at_radius_always_succeeds() {
    let dir = TempDir::new().unwrap();
    let job = with(example_job(), json!({"weight": 2, "trials": 1000}));
    let out = run(dir.path(), "simulate", &job, &["--seed", "9"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "weight,trials,successes,fail_nosolution,fail_nondivisible,fail_distance,mean_decode_us");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("2,1000,1000,0,0,0,"), "{}", lines[1]);
}

#[test]
fn simulate_sweeps_all_weights_by_default() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), "simulate", &with(example_job(), json!({"trials": 50})), &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    let weights: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(weights, ["0", "1", "2"]);
}

#[test]
fn params_and_output_flags() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("out.json");
    let status = Command::new(BIN)
        .args(["encode", "--param", "p=7", "--param", "s=2", "--param", "t=4"])
        .args(["--param", "alphas=[1,2,3,4]", "--param", "poly=[5,2,3,1]"])
        .arg("--output")
        .arg(&target)
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["entries"], json!([[4, 1, 2, 6], [4, 5, 5, 4]]));

    // Overrides win over the job file.
    let out = run(dir.path(), "encode", &with(example_job(), json!({"poly": [1]})), &["--param", "poly=[5,2,3,1]"]);
    assert_eq!(stdout_json(&out)["entries"], json!([[4, 1, 2, 6], [4, 5, 5, 4]]));
}

#[test]
fn help_documents_coefficient_order() {
    let out = Command::new(BIN).arg("--help").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("low to high"));
    assert!(text.contains("LOW-TO-HIGH"));
}
