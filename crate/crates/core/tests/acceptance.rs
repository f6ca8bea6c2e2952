// Acceptance checks. Each test writes one PASS/FAIL line straight to stderr
// so the verdicts show up even when output capture is on.

use std::io::Write;
use std::path::Path;

use skeletal::report::{self, Section};

fn verdict(section: &Section) {
    let line = format!(
        "acceptance [{}] {}: {} | {}\n",
        section.criterion,
        section.title,
        if section.pass { "PASS" } else { "FAIL" },
        section.summary
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn check(section: skeletal::Result<Section>) {
    let section = section.expect("section runs to completion");
    verdict(&section);
    assert!(section.pass, "{}: {}", section.title, section.summary);
}

#[test]
fn construction_validity() {
    check(report::construction_validity());
}

#[test]
fn skeleton_scaling_law() {
    check(report::skeleton_scaling());
}

#[test]
fn orthoplex_scaling() {
    check(report::orthoplex_scaling());
}

#[test]
fn oracle_against_explicit_lower_bound() {
    check(report::oracle_lower_bound());
}

#[test]
fn shadow_machinery() {
    check(report::shadow_machinery());
}

#[test]
fn exponent_fixpoints() {
    check(report::exponent_fixpoints());
}

#[test]
fn multiscale_covering() {
    check(report::multiscale_covering());
}

#[test]
fn cantor_lab() {
    check(report::cantor_lab());
}

fn study_in_pool(threads: usize) -> (Vec<String>, String) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let sections = pool.install(report::run_all).expect("study runs");
    let json = serde_json::to_string_pretty(&sections).expect("summary serializes");
    (sections.into_iter().map(|s| s.csv).collect(), json)
}

#[test]
fn determinism_across_thread_counts() {
    let (csv1, json1) = study_in_pool(1);
    let (csv4, json4) = study_in_pool(4);
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut mismatches = Vec::new();
    for (idx, (a, b)) in csv1.iter().zip(&csv4).enumerate() {
        let stored = std::fs::read_to_string(golden.join(format!("criterion_{}.csv", idx + 1)))
            .expect("golden csv present");
        if a != b || *a != stored {
            mismatches.push(idx + 1);
        }
    }
    let stored_json = std::fs::read_to_string(golden.join("summary.json")).expect("golden json");
    let json_ok = json1 == json4 && format!("{json1}\n") == stored_json;
    let section = Section {
        criterion: 9,
        title: "determinism".into(),
        pass: mismatches.is_empty() && json_ok,
        summary: format!(
            "threads 1 vs 4 and golden files: csv mismatches {mismatches:?}, summary json identical {json_ok}"
        ),
        verifier_failed: false,
        csv: String::new(),
    };
    verdict(&section);
    assert!(section.pass, "{}", section.summary);
}
