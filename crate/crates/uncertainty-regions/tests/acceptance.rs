//! Acceptance battery: one test per criterion, each printing a single
//! pass/fail summary line (visible with `--nocapture`).

use std::process::Command;
use std::time::Instant;

use uncertainty_regions::verify::{run_suite, CheckResult, VerifyConfig};

fn cfg(samples: u64) -> VerifyConfig {
    VerifyConfig {
        samples,
        seed: 0,
        tol: 5e-3,
    }
}

fn report(criterion: usize, label: &str, results: &[CheckResult], started: Instant) {
    let pass = results.iter().all(|c| c.pass);
    println!(
        "criterion {criterion} {label}: {} ({} checks, {:.2}s)",
        if pass { "pass" } else { "fail" },
        results.len(),
        started.elapsed().as_secs_f64()
    );
    for c in results {
        assert!(c.pass, "criterion {criterion} failed: {}", c.line());
    }
}

#[test]
fn criterion_1_qubit_pair_tightness() {
    let t = Instant::now();
    let results = run_suite("qubit-thm1", &cfg(1_000_000)).unwrap();
    assert!(
        t.elapsed().as_secs_f64() <= 30.0,
        "pair tightness suite exceeded 30 s"
    );
    report(1, "qubit-pair-tightness", &results, t);
}

#[test]
fn criterion_2_identity_suite() {
    let t = Instant::now();
    let results = run_suite("qubit-identities", &cfg(10_000)).unwrap();
    assert!(
        t.elapsed().as_secs_f64() <= 2.0,
        "identity suite exceeded 2 s"
    );
    report(2, "identity-suite", &results, t);
}

#[test]
fn criterion_3_triple_region() {
    let t = Instant::now();
    let results = run_suite("triple", &cfg(100_000)).unwrap();
    let picked: Vec<CheckResult> = results
        .into_iter()
        .filter(|c| !c.name.ends_with("heisenberg-witness"))
        .collect();
    report(3, "triple-region", &picked, t);
}

#[test]
fn criterion_4_saturation_witnesses() {
    let t = Instant::now();
    let results = run_suite("triple", &cfg(10_000)).unwrap();
    let picked: Vec<CheckResult> = results
        .into_iter()
        .filter(|c| c.name.ends_with("heisenberg-witness"))
        .collect();
    assert_eq!(picked.len(), 1);
    report(4, "saturation-witnesses", &picked, t);
}

#[test]
fn criterion_5_extended_pair() {
    let t = Instant::now();
    let results = run_suite("extended", &cfg(1_000_000)).unwrap();
    assert!(
        t.elapsed().as_secs_f64() <= 60.0,
        "extended-pair suite exceeded 60 s"
    );
    report(5, "extended-pair", &results, t);
}

#[test]
fn criterion_6_gellmann_curves() {
    let t = Instant::now();
    let results = run_suite("gellmann-curves", &cfg(1_000_000)).unwrap();
    assert!(
        t.elapsed().as_secs_f64() <= 300.0,
        "Gell-Mann curve suite exceeded 5 min"
    );
    report(6, "gellmann-curves", &results, t);
}

#[test]
fn criterion_7_schrodinger_gap() {
    let t = Instant::now();
    let results = run_suite("gellmann-gap", &cfg(1_000_000)).unwrap();
    report(7, "schrodinger-gap", &results, t);
}

#[test]
fn criterion_8_qp_envelope() {
    let t = Instant::now();
    let results = run_suite("qp-equivalence", &cfg(1_000_000)).unwrap();
    report(8, "qp-envelope", &results, t);
}

fn run_uncreg(args: &[&str]) -> (Vec<u8>, Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_uncreg"))
        .args(args)
        .env("UA_THREADS", "1")
        .output()
        .expect("binary runs");
    (out.stdout, out.stderr, out.status.code())
}

#[test]
fn criterion_9_determinism() {
    let t = Instant::now();
    let invocations: &[&[&str]] = &[
        &[
            "qubit-region",
            "--theta",
            "pi/4",
            "--samples",
            "100000",
            "--seed",
            "11",
            "--overlay-oracle",
        ],
        &["qubit-region", "--theta", "pi/8", "--format", "svg"],
        &["triple-region", "--slices", "4", "--grid", "60"],
        &["qp-envelope", "--ell", "0.5,1,2", "--grid", "120"],
        &["extended-region", "--grid", "100", "--overlay-oracle"],
        &["gellmann-region", "--grid", "100", "--overlay-oracle"],
        &["gellmann-region", "--format", "svg"],
        &["verify", "qubit-identities", "--samples", "2000", "--seed", "3"],
    ];
    let mut all_equal = true;
    for args in invocations {
        let (out1, _, code1) = run_uncreg(args);
        let (out2, _, code2) = run_uncreg(args);
        assert_eq!(code1, Some(0), "command failed: {args:?}");
        if out1 != out2 || code1 != code2 {
            all_equal = false;
            eprintln!("non-deterministic output for {args:?}");
        }
        assert!(!out1.is_empty(), "command produced no output: {args:?}");
    }
    println!(
        "criterion 9 determinism: {} ({} commands, {:.2}s)",
        if all_equal { "pass" } else { "fail" },
        invocations.len(),
        t.elapsed().as_secs_f64()
    );
    assert!(all_equal);
}
