// End-to-end runs of the skeletal binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn skeletal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeletal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn round_trip(shape: &str, n: &str, k: &str, p: &str) {
    let dir = TempDir::new().unwrap();
    let (b, s) = (path(&dir, "b.txt"), path(&dir, "s.txt"));
    let out = skeletal(&[
        "construct",
        "--shape",
        shape,
        "--n",
        n,
        "--k",
        k,
        "--p",
        p,
        "--out-b",
        &b,
        "--out-s",
        &s,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let summary = json(&out);
    assert_eq!(summary["sizeS"].to_string(), p);
    let out = skeletal(&["verify", "--mode", shape, "--k", k, "--b", &b, "--s", &s]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["satisfied"], Value::Bool(true));
}

#[test]
fn construct_then_verify() {
    round_trip("skeleton", "2", "0", "225");
    round_trip("skeleton", "2", "1", "37");
    round_trip("nl", "2", "1", "50");
    round_trip("nl", "2", "2", "50");
    round_trip("orthoplex", "2", "0", "40");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let (b, s) = (path(&dir, "b.txt"), path(&dir, "s.txt"));
    std::fs::write(&b, "0 0\n").unwrap();
    std::fs::write(&s, "5 5\n7 1\n").unwrap();
    let out = skeletal(&[
        "verify", "--mode", "skeleton", "--k", "0", "--b", &b, "--s", &s,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["satisfied"], Value::Bool(false));

    assert_eq!(
        skeletal(&["construct", "--shape", "cube"]).status.code(),
        Some(2)
    );
    std::fs::write(&s, "1 2\n3\n").unwrap();
    let out = skeletal(&["verify", "--mode", "skeleton", "--b", &b, "--s", &s]);
    assert_eq!(out.status.code(), Some(2));

    let out = skeletal(&[
        "--point-cap",
        "10",
        "construct",
        "--shape",
        "skeleton",
        "--n",
        "2",
        "--k",
        "0",
        "--p",
        "100",
        "--out-b",
        &b,
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exponents_json() {
    let out = skeletal(&["exponents", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["beta"], "7/8");
    assert_eq!(v["r_at_zero"], "5/24");
    assert_eq!(v["nl_exponent"], "3/8");
}

#[test]
fn shadow_commands() {
    let v = json(&skeletal(&["shadow", "bounds", "--m", "10", "--b", "3"]));
    assert_eq!(v["kk"], 10);
    assert_eq!(v["cascade"], serde_json::json!([5]));

    let dir = TempDir::new().unwrap();
    let fam = path(&dir, "fam.txt");
    std::fs::write(&fam, "1 2 3\n1 2 4\n").unwrap();
    let out = skeletal(&["shadow", "exact", "--family", &fam, "--c", "1"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .filter(|l| !l.starts_with('#'))
            .count(),
        5
    );
}

#[test]
fn digits_and_cantor_commands() {
    let out = skeletal(&["digits", "dump", "--i", "2", "--n", "1"]);
    let digits: Vec<i64> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.trim().parse().unwrap())
        .collect();
    assert_eq!(digits.first(), Some(&-4));
    assert_eq!(digits.last(), Some(&4));
    assert!(digits.contains(&0));

    let out = skeletal(&["cantor", "stages", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["a"]["stages"].is_array());
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = TempDir::new().unwrap();
    let s = path(&dir, "s.txt");
    std::fs::write(&s, "0 0\n1 2\n3 1\n2 2\n").unwrap();
    let runs: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|t| {
            Command::new(env!("CARGO_BIN_EXE_skeletal"))
                .env("SKELETAL_THREADS", t)
                .args([
                    "oracle", "sweep", "--s", &s, "--shape", "skeleton", "--k", "1", "--r-max", "2",
                ])
                .output()
                .unwrap()
                .stdout
        })
        .collect();
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn help_documents_output_keys() {
    let out = skeletal(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for key in [
        "criterion",
        "verifier_failed",
        "SKELETAL_THREADS",
        "Exit codes",
    ] {
        assert!(text.contains(key), "{key} missing from help");
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_skeletal")).exists());
}
