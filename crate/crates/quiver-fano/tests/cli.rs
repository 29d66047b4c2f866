//! Black-box tests of the `qfl` binary: exit codes, JSON output shape, the
//! fixture addressing scheme, the budget environment variable, and output
//! determinism across thread counts.

use std::io::Write;
use std::process::{Command, Output};

fn qfl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn kronecker_file(m: i64) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":2,"arrows":[[0,1,{m}]]}}"#).unwrap();
    file
}

#[test]
fn certify_fixture_is_certified_with_ordered_fields() {
    let out = qfl(&["certify", "@p1xp1", "--dim", "1,1,1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let order = ["\"status\"", "\"dimension\"", "\"picard_rank\"", "\"index\"", "\"theta\"", "\"witness\"", "\"notes\""];
    let positions: Vec<usize> = order.iter().map(|k| text.find(k).expect(k)).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "stable field order");
    let json = stdout_json(&out);
    assert_eq!(json["status"], "Certified");
    assert_eq!(json["dimension"], 2);
    assert_eq!(json["picard_rank"], 2);
    assert_eq!(json["index"], 2);
    assert_eq!(json["theta"], serde_json::json!([2, 2, -4]));
    assert_eq!(json["witness"], serde_json::Value::Null);
}

#[test]
fn certify_reads_quiver_files() {
    let file = kronecker_file(3);
    let out = qfl(&["certify", file.path().to_str().unwrap(), "-d", "2,3"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["dimension"], 6);
    assert_eq!(json["index"], 3);
}

#[test]
fn exit_codes_distinguish_outcomes() {
    // Not coprime: six points with a 2-dimensional sink.
    let out = qfl(&["family", "subspace", "-m", "6", "-d", "2"]);
    assert_eq!(code(&out), 2);
    let json = stdout_json(&out);
    assert_eq!(json["certificate"]["status"], "NotCoprime");
    assert_eq!(json["agree"], true);

    // Inconclusive: three points on a line is a single point of moduli.
    let out = qfl(&["family", "subspace", "-m", "3", "-d", "2"]);
    assert_eq!(code(&out), 3);

    // Certified family run agrees and exits 0.
    let out = qfl(&["family", "kronecker", "-m", "3", "-d", "2", "-e", "3"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    for key in ["family", "params", "prediction", "certificate", "agree"] {
        assert!(json.get(key).is_some(), "missing {key}");
    }
    assert_eq!(json["prediction"]["index"], 3);

    // Not coprime via direct certification of a quiver file: six points
    // with a 2-dimensional sink again, this time from disk.
    let mut segre = tempfile::NamedTempFile::new().unwrap();
    write!(
        segre,
        r#"{{"n":7,"arrows":[[0,6,1],[1,6,1],[2,6,1],[3,6,1],[4,6,1],[5,6,1]]}}"#
    )
    .unwrap();
    let out = qfl(&["certify", segre.path().to_str().unwrap(), "-d", "1,1,1,1,1,1,2"]);
    assert_eq!(code(&out), 2);

    // Unknown fixture is an input error.
    let out = qfl(&["certify", "@nope", "-d", "1"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown fixture"));

    // Unknown subcommands and bad flags are input errors too (exit 2 is
    // reserved for NotCoprime), while help is not an error.
    let out = qfl(&["family", "bogus", "-m", "3"]);
    assert_eq!(code(&out), 1);
    let out = qfl(&["--help"]);
    assert_eq!(code(&out), 0);

    // Malformed quiver JSON is an input error.
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "{{not json").unwrap();
    let out = qfl(&["certify", bad.path().to_str().unwrap(), "-d", "1,1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn budget_flag_and_environment_variable() {
    let file = kronecker_file(3);
    let path = file.path().to_str().unwrap();

    let out = qfl(&["certify", path, "-d", "2,3", "--budget", "5"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_qfl"))
        .args(["certify", path, "-d", "2,3"])
        .env("QFL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4, "environment variable caps the budget");

    // An explicit flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_qfl"))
        .args(["certify", path, "-d", "2,3", "--budget", "1000"])
        .env("QFL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn toric_enumerate_lists_catalog() {
    let out = qfl(&["toric-enumerate", "-n", "2", "--max-arrows", "4"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    let entries = json.as_array().expect("catalog is a JSON array");
    assert_eq!(entries.len(), 3);
    let dims: Vec<i64> = entries.iter().map(|e| e["dim"].as_i64().unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 3]);
    assert_eq!(entries[0]["spec"]["arrows"], serde_json::json!([[0, 1, 2]]));

    // Budget failure surfaces as exit 4.
    let out = qfl(&["toric-enumerate", "-n", "4", "--max-arrows", "8", "--budget", "100"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn output_is_identical_across_job_counts() {
    let runs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|jobs| {
            let out = qfl(&["toric-enumerate", "-n", "4", "--max-arrows", "6", "--jobs", jobs]);
            assert_eq!(code(&out), 0);
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);
}

#[test]
fn chambers_reports_membership_and_comparison() {
    let file = kronecker_file(3);
    let out = qfl(&[
        "chambers",
        file.path().to_str().unwrap(),
        "-d",
        "2,3",
        "--theta",
        "9,-6",
        "--theta2",
        "3,-2",
    ]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["subdim_vectors"], 10);
    assert_eq!(json["in_interior"], true);
    assert_eq!(json["signs"], serde_json::json!([[-1, 3], [1, 2], [-1, 2], [1, 3]]));
    assert_eq!(json["theta2_in_interior"], true);
    assert_eq!(json["same_chamber"], true);

    // A weighting that does not vanish on d is rejected.
    let out = qfl(&[
        "chambers",
        file.path().to_str().unwrap(),
        "-d",
        "2,3",
        "--theta",
        "1,1",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn checks_exit_zero_on_pass() {
    let out = qfl(&["checks", "kronecker-min-dim", "-m", "3", "--bound", "10"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["pass"], true);
    assert_eq!(json["equality_cases"], serde_json::json!([[1, 1]]));

    let out = qfl(&["checks", "mukai", "--max-m", "4", "--max-k", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["pass"], true);
}
