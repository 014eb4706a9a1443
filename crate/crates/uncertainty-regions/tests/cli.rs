//! Exit-code and output-shape checks for the `uncreg` binary.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_uncreg"))
        .args(args)
        .env("UA_THREADS", "1")
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn success_exits_zero_with_csv_header() {
    let (stdout, _, code) = run(&["qp-envelope", "--grid", "50"]);
    assert_eq!(code, Some(0));
    assert!(stdout.starts_with("x,y_min,y_max,kind,source"));
}

#[test]
fn failed_verification_exits_one() {
    let (stdout, _, code) = run(&[
        "verify",
        "qubit-thm1",
        "--samples",
        "10000",
        "--tol",
        "1e-15",
    ]);
    assert_eq!(code, Some(1));
    assert!(stdout.contains("fail"));
}

#[test]
fn unknown_suite_exits_two() {
    let (_, stderr, code) = run(&["verify", "no-such-suite"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn bad_flag_exits_two() {
    let (_, _, code) = run(&["qubit-region", "--no-such-flag"]);
    assert_eq!(code, Some(2));
}

#[test]
fn bad_theta_exits_two() {
    let (_, stderr, code) = run(&["qubit-region", "--theta", "2.0"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("theta"));
}

#[test]
fn svg_output_is_svg() {
    let (stdout, _, code) = run(&["triple-region", "--format", "svg"]);
    assert_eq!(code, Some(0));
    assert!(stdout.starts_with("<svg"));
    assert!(stdout.trim_end().ends_with("</svg>"));
}

#[test]
fn verify_prints_one_line_per_check() {
    let (stdout, _, code) = run(&["verify", "gellmann-gap"]);
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        assert_eq!(line.split(' ').count(), 4, "bad line: {line}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("uncreg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("qp.csv");
    let (stdout, _, code) = run(&[
        "qp-envelope",
        "--grid",
        "40",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,y_min,y_max,kind,source"));
    std::fs::remove_file(&path).unwrap();
}
