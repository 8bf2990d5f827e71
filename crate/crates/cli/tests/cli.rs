//! End-to-end runs of the saxl binary: output contracts, exit codes,
//! the cache lifecycle and determinism across worker counts.

use std::process::{Command, Output};

fn saxl_with(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_saxl"));
    cmd.args(args).env_remove("ACCEPTED_CACHE_DIR");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    cmd.output().expect("run saxl")
}

fn saxl(args: &[&str]) -> Output {
    saxl_with(args, &[])
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

// ---------------------------------------------------------------------
// coefficient queries
// ---------------------------------------------------------------------

#[test]
fn kronecker_triple_prints_bare_coefficient() {
    let out = saxl(&["kronecker", "[2,1]", "[2,1]", "[2,1]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn kronecker_pair_prints_expansion() {
    let out = saxl(&["kronecker", "[3]", "[2,1]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 [2,1]\n");

    let out = saxl(&["kronecker", "[2,1]", "[2,1]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 [3]\n1 [2,1]\n1 [1,1,1]\n");
}

#[test]
fn kronecker_size_mismatch_is_usage_error() {
    let out = saxl(&["kronecker", "[2,1]", "[3,1]"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("size mismatch"));

    let out = saxl(&["kronecker", "[2,1]", "[2,1]", "[4]"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn kronecker_formats() {
    let out = saxl(&["kronecker", "[3]", "[2,1]", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.ends_with('\n'));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["degree"], 3);
    assert_eq!(value["terms"][0]["partition"], serde_json::json!([2, 1]));
    assert_eq!(value["terms"][0]["coeff"], "1");

    let out = saxl(&["kronecker", "[3]", "[2,1]", "--format", "csv"]);
    assert_eq!(stdout(&out), "coeff,partition\n1,\"[2,1]\"\n");
}

// ---------------------------------------------------------------------
// partition utilities
// ---------------------------------------------------------------------

#[test]
fn cee_examples() {
    let out = saxl(&["cee", "[10,6,4,1]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[4,3,3,3,2,2,1,1,1,1]\n");

    assert_eq!(stdout(&saxl(&["cee", "[2,1]"])), "[1,1,1]\n");
    assert_eq!(stdout(&saxl(&["cee", "[]"])), "[]\n");
}

#[test]
fn cee_output_reparses() {
    let printed = stdout(&saxl(&["cee", "[10,6,4,1]"]));
    let literal = printed.trim();
    let out = saxl(&["dominance", literal, literal]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "true\n");
}

#[test]
fn malformed_literals_are_usage_errors() {
    for bad in ["[2,a]", "[1,2]", "[0]", "[-3]", "2,1", "[2,,1]"] {
        let out = saxl(&["cee", bad]);
        assert_eq!(code(&out), 2, "literal {bad:?} should be rejected");
    }
}

#[test]
fn dominance_answers() {
    assert_eq!(stdout(&saxl(&["dominance", "[2,1]", "[1,1,1]"])), "true\n");
    assert_eq!(stdout(&saxl(&["dominance", "[1,1,1]", "[2,1]"])), "false\n");
    let out = saxl(&["dominance", "[2,1]", "[2,1,1]"]);
    assert_eq!(code(&out), 2);

    let out = saxl(&["dominance", "[3,1]", "[2,2]", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"dominates\":true}\n");
}

#[test]
fn partitions_listing_and_count() {
    let out = saxl(&["partitions", "4"]);
    assert_eq!(stdout(&out), "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");

    let out = saxl(&["partitions", "6", "--distinct"]);
    assert_eq!(stdout(&out), "[6]\n[5,1]\n[4,2]\n[3,2,1]\n");

    let out = saxl(&["partitions", "21", "--count"]);
    assert_eq!(stdout(&out), "792\n");

    let out = saxl(&["partitions", "4", "--format", "json"]);
    assert_eq!(stdout(&out), "[[4],[3,1],[2,2],[2,1,1],[1,1,1,1]]\n");
}

#[test]
fn partitions_gate() {
    let out = saxl(&["partitions", "60"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--long-run"));

    // The count path never enumerates, so it stays open.
    let out = saxl(&["partitions", "60", "--count"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "966467\n");
}

// ---------------------------------------------------------------------
// character table and cache
// ---------------------------------------------------------------------

#[test]
fn chartable_cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let dir_arg = dir.path().to_str().unwrap();

    let first = saxl(&["chartable", "3", "--cache-dir", dir_arg]);
    assert_eq!(code(&first), 0);
    assert!(stderr(&first).contains("cache miss"));
    assert_eq!(stdout(&first), "1 1 1\n2 0 -1\n1 -1 1\n");
    assert!(dir.path().join("ctab-3.txt").is_file());

    let second = saxl(&["chartable", "3", "--cache-dir", dir_arg]);
    assert_eq!(code(&second), 0);
    assert!(stderr(&second).contains("cache hit"));
    assert_eq!(stdout(&first), stdout(&second));

    let row = saxl(&["chartable", "3", "--row", "[2,1]", "--cache-dir", dir_arg]);
    assert_eq!(stdout(&row), "2 0 -1\n");

    let degenerate = saxl(&["chartable", "0", "--cache-dir", dir_arg]);
    assert_eq!(stdout(&degenerate), "1\n");

    let wrong_degree = saxl(&["chartable", "3", "--row", "[2,2]", "--cache-dir", dir_arg]);
    assert_eq!(code(&wrong_degree), 2);
}

#[test]
fn corrupt_cache_is_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    assert_eq!(code(&saxl(&["chartable", "3", "--cache-dir", dir_arg])), 0);

    let path = dir.path().join("ctab-3.txt");
    let content = std::fs::read_to_string(&path).unwrap();
    let tampered = content.replacen("2 0 -1", "2 0 -2", 1);
    assert_ne!(content, tampered, "tampering must change the file");
    std::fs::write(&path, tampered).unwrap();

    let out = saxl(&["chartable", "3", "--cache-dir", dir_arg]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("corrupt cache"));
}

#[test]
fn cache_dir_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = saxl_with(
        &["chartable", "4"],
        &[("ACCEPTED_CACHE_DIR", dir.path().to_str().unwrap())],
    );
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("ctab-4.txt").is_file());
}

#[test]
fn chartable_gate() {
    let out = saxl(&["chartable", "26"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--long-run"));
}

#[test]
fn cache_files_are_identical_across_worker_counts() {
    let one = tempfile::tempdir().unwrap();
    let many = tempfile::tempdir().unwrap();
    let run_one = saxl(&[
        "chartable",
        "6",
        "--jobs",
        "1",
        "--cache-dir",
        one.path().to_str().unwrap(),
    ]);
    let run_many = saxl(&[
        "chartable",
        "6",
        "--jobs",
        "4",
        "--cache-dir",
        many.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&run_one), 0);
    assert_eq!(code(&run_many), 0);
    assert_eq!(stdout(&run_one), stdout(&run_many));

    let file_one = std::fs::read(one.path().join("ctab-6.txt")).unwrap();
    let file_many = std::fs::read(many.path().join("ctab-6.txt")).unwrap();
    assert_eq!(file_one, file_many, "ctab-v1 bytes differ across --jobs");
}

// ---------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------

#[test]
fn verify_cube_json_contract() {
    let out = saxl(&["verify", "saxl-cube", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.ends_with('\n'));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["claim"], "saxl-cube");
    assert_eq!(value["status"], "pass");
    let witnesses = value["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 3);
    assert_eq!(witnesses[0]["partition"], serde_json::json!([3]));
    assert_eq!(witnesses[0]["multiplicity"], "1");
    assert_eq!(witnesses[1]["partition"], serde_json::json!([2, 1]));
    assert_eq!(witnesses[1]["multiplicity"], "3");
    assert_eq!(value["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_tensor_summand_table_output() {
    let out = saxl(&["verify", "tensor-summand", "--mu", "[2,1]"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("claim: tensor-summand"));
    assert!(text.contains("status: pass"));
    assert!(text.contains("witnesses: 0"), "difference should be zero");
    assert!(text.contains("counterexamples: 0"));
}

#[test]
fn verify_square_is_conjecture_holds() {
    let out = saxl(&["verify", "saxl-square", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status: conjecture-holds"));
}

#[test]
fn verify_gate_requires_long_run() {
    let out = saxl(&["verify", "saxl-cube", "--n", "7"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--long-run"));
}

#[test]
fn verify_luo_sellke_rejects_repeated_parts() {
    let out = saxl(&["verify", "luo-sellke", "--mu", "[2,2]"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("distinct"));

    let out = saxl(&["verify", "luo-sellke", "--mu", "[3,2,1]"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status: pass"));
}

#[test]
fn verify_macdonald_csv() {
    let out = saxl(&["verify", "macdonald", "--mu", "[2,1]", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("claim,params,status,witnesses,counterexamples,elapsed_ms")
    );
    let data = lines.next().unwrap();
    assert!(data.starts_with("\"macdonald\",\"mu=[2,1]\",pass,"));
}

#[test]
fn verify_two_modular() {
    let out = saxl(&["verify", "two-modular", "--n", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["status"], "pass");
    assert!(value["params"]
        .as_str()
        .unwrap()
        .contains("dominance-checked"));
}

#[test]
fn verify_json_is_deterministic_across_worker_counts() {
    let one = saxl(&[
        "verify", "saxl-cube", "--n", "3", "--format", "json", "--jobs", "1",
    ]);
    let many = saxl(&[
        "verify", "saxl-cube", "--n", "3", "--format", "json", "--jobs", "3",
    ]);
    assert_eq!(code(&one), 0);
    assert_eq!(code(&many), 0);
    let mut a: serde_json::Value = serde_json::from_str(&stdout(&one)).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout(&many)).unwrap();
    a.as_object_mut().unwrap().remove("elapsed_ms");
    b.as_object_mut().unwrap().remove("elapsed_ms");
    assert_eq!(a, b, "report data differs across --jobs");
}

// ---------------------------------------------------------------------
// argument plumbing
// ---------------------------------------------------------------------

#[test]
fn usage_errors_from_the_parser() {
    assert_eq!(code(&saxl(&["no-such-command"])), 2);
    assert_eq!(code(&saxl(&["verify", "saxl-cube"])), 2, "--n is required");
    assert_eq!(code(&saxl(&["verify", "no-such-claim", "--n", "2"])), 2);
    assert_eq!(code(&saxl(&["chartable"])), 2);
    assert_eq!(code(&saxl(&["kronecker", "[2,1]"])), 2);
    assert_eq!(code(&saxl(&["chartable", "3", "--jobs", "0"])), 2);
    assert_eq!(code(&saxl(&["chartable", "3", "--format", "yaml"])), 2);
}
