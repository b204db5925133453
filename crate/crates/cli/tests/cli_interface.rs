//! End-to-end tests of the `osalg` binary: exit-code contract, byte-level
//! determinism, text/JSON agreement, file input round-trips, and pipeability
//! of the `ops` output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn osalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osalg"))
        .args(args)
        .output()
        .expect("failed to spawn osalg")
}

fn osalg_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osalg"))
        .args(args)
        .env(key, value)
        .output()
        .expect("failed to spawn osalg")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("osalg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn exit_codes_by_error_class() {
    // Success.
    assert_eq!(osalg(&["whitney", "corpus:u23"]).status.code(), Some(0));

    // Validation failures (exit 2): usage errors, bad inputs, bad parameters.
    let validation: &[&[&str]] = &[
        &["frobnicate"],
        &["whitney", "corpus:nosuch"],
        &["whitney", "/no/such/file.json"],
        &["phi3", "corpus:u23", "--field", "fp"],
        &["phi3", "corpus:u23", "--field", "fp", "--p", "6"],
        &["phi3", "corpus:u23", "--p", "5"],
        &["kadic", "corpus:k4", "--k", "9"],
        &["kadic", "corpus:k4", "--k", "1"],
        &["os-dims", "corpus:u23", "--json", "--text"],
        &["ops", "rotate", "corpus:u23"],
        &["ops", "parallel", "corpus:u23"],
    ];
    for args in validation {
        let out = osalg(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "expected exit 2 for {args:?}, stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }

    // Budget exhaustion (exit 3): GF(7)^8 has 5_764_801 points > 100.
    let out = osalg(&["nu", "corpus:yuzvinsky8", "--p", "7", "--budget", "100"]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["info", "corpus:k4"],
        vec!["resonance", "corpus:yuzvinsky8"],
        vec!["iso-demo", "corpus:u23", "corpus:u24"],
    ] {
        let first = osalg(&args);
        let second = osalg(&args);
        assert!(first.status.success());
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs between runs of {args:?}"
        );
    }
}

#[test]
fn text_and_json_agree_on_the_betti_numbers() {
    let json = stdout_json(&osalg(&["os-dims", "corpus:k4"]));
    let betti: Vec<u64> = json["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(betti, vec![1, 6, 11, 6]);

    let text_out = osalg(&["os-dims", "corpus:k4", "--text"]);
    assert!(text_out.status.success());
    let text = String::from_utf8(text_out.stdout).unwrap();
    let line = text
        .lines()
        .find(|l| l.starts_with("betti = "))
        .expect("text mode must contain a betti line");
    let parsed: Vec<u64> = serde_json::from_str(line.strip_prefix("betti = ").unwrap()).unwrap();
    assert_eq!(parsed, betti, "text and JSON modes disagree");
}

#[test]
fn one_based_lines_file_matches_the_builtin_corpus_entry() {
    let path = scratch_file(
        "yuzvinsky8.json",
        r#"{
            "n": 8,
            "labeling": "1-based",
            "rank": 3,
            "lines": [[1,2,3], [3,4,5,6], [1,6,7], [2,5,8], [4,7,8]]
        }"#,
    );
    let from_file = stdout_json(&osalg(&["whitney", path.to_str().unwrap()]));
    let from_corpus = stdout_json(&osalg(&["whitney", "corpus:yuzvinsky8"]));
    assert_eq!(from_file["whitney"], from_corpus["whitney"]);
    assert_eq!(
        from_file["matroid"]["digest"], from_corpus["matroid"]["digest"],
        "the 1-based lines file should define the same matroid as the corpus entry"
    );
}

#[test]
fn ops_output_pipes_back_as_input() {
    // Cone over U_{2,3}: the affine algebra at the apex recovers the full
    // OS algebra of the base, with dimensions [1, 3, 2].
    let cone = osalg(&["ops", "cone", "corpus:u23"]);
    assert!(cone.status.success());
    let path = scratch_file("cone_u23.json", &String::from_utf8(cone.stdout).unwrap());
    let affine = stdout_json(&osalg(&["affine", path.to_str().unwrap()]));
    let dims: Vec<u64> = affine["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 3, 2]);

    // Parallel connection of U_{2,3} and U_{2,4}: Poincaré polynomial
    // factors as (1+t)(1+2t)(1+3t) = 1 + 6t + 11t^2 + 6t^3.
    let pc = osalg(&["ops", "parallel", "corpus:u23", "corpus:u24"]);
    assert!(pc.status.success());
    let path = scratch_file("pc_u23_u24.json", &String::from_utf8(pc.stdout).unwrap());
    let dims_doc = stdout_json(&osalg(&["os-dims", path.to_str().unwrap()]));
    let betti: Vec<u64> = dims_doc["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(betti, vec![1, 6, 11, 6]);
}

#[test]
fn stdout_is_pure_json_and_timing_goes_to_stderr() {
    let out = osalg(&["whitney", "corpus:u23"]);
    assert!(out.status.success());
    let _: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout must be exactly one JSON document");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("# elapsed_ms="),
        "timing line missing from stderr: {stderr:?}"
    );
}

#[test]
fn budget_env_var_is_honored_and_the_flag_overrides_it() {
    let starved = osalg_with_env(
        &["nu", "corpus:yuzvinsky8", "--p", "7"],
        "OSALG_BUDGET",
        "100",
    );
    assert_eq!(starved.status.code(), Some(3));

    let rescued = osalg_with_env(
        &[
            "nu",
            "corpus:yuzvinsky8",
            "--p",
            "7",
            "--budget",
            "10000000",
        ],
        "OSALG_BUDGET",
        "100",
    );
    assert_eq!(
        rescued.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&rescued.stderr)
    );
}
