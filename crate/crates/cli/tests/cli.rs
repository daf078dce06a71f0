use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobsthal3"))
        .args(args)
        .env_remove("JACOBSTHAL3_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn values(out: &Output) -> Vec<String> {
    stdout(out)
        .lines()
        .map(|l| l.split('\t').nth(1).expect("n<TAB>value").to_string())
        .collect()
}

#[test]
fn seq_tables() {
    let out = run(&["seq", "j3", "0", "4"]);
    assert!(out.status.success());
    assert_eq!(values(&out), ["0", "1", "1", "2", "5"]);

    assert_eq!(values(&run(&["seq", "jl3", "0", "4"])), ["2", "1", "5", "10", "17"]);
    assert_eq!(values(&run(&["seq", "dual-j3", "2", "2"])), ["1 + 2*eps"]);
    assert_eq!(values(&run(&["seq", "U", "0", "2"])), ["0", "1", "-1"]);
    assert_eq!(values(&run(&["seq", "V", "0", "2"])), ["2", "-3", "1"]);
}

#[test]
fn seq_rejects_empty_range() {
    assert_eq!(run(&["seq", "j3", "5", "2"]).status.code(), Some(2));
}

#[test]
fn check_counts() {
    let out = run(&["check", "--id", "e4", "--n", "0..10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("checked 11: 11 passed, 0 failed"));

    let out = run(&["check", "--id", "thm5", "--n", "0..10", "--m", "0..10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("checked 121: 121 passed, 0 failed"));
}

#[test]
fn check_domain_error() {
    let out = run(&["check", "--id", "e9", "--n", "0..2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("e9"));
}

#[test]
fn check_as_printed_fails() {
    let out = run(&["check", "--id", "thm5-as-printed", "--n", "1", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_json_and_csv() {
    let out = run(&["check", "--id", "e4", "--n", "2", "--format", "json"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"identity":"e4","n":2,"lhs":"8","rhs":"8","pass":true}"#
    );

    let out = run(&["check", "--id", "e4,e7", "--n", "0..1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("identity,n,m,lhs,rhs,pass"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn format_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_jacobsthal3"))
        .args(["seq", "j3", "3", "3"])
        .env("JACOBSTHAL3_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), r#"{"n":"3","value":"2"}"#);
}

#[test]
fn check_workers_deterministic() {
    let a = run(&["check", "--all", "--n", "0..20", "--m", "0..20", "--format", "json"]);
    let b = run(&["check", "--all", "--n", "0..20", "--m", "0..20", "--format", "json", "--workers", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn vec_ops() {
    let out = run(&["vec", "dot", "1", "0"]);
    assert_eq!(stdout(&out).trim(), "3 + 13*eps | closed: 3 + 13*eps | match");
    assert!(stdout(&run(&["vec", "dot", "1", "1"])).starts_with("6 + 26*eps"));

    let out = run(&["vec", "cross", "1", "0"]);
    assert!(stdout(&out).starts_with("(-1 - 3*eps, -1 - 1*eps, 1 + 1*eps) |"));
    assert!(stdout(&out).trim_end().ends_with("| match"));

    assert!(stdout(&run(&["vec", "unit", "0"])).starts_with("c1=12 c2=22 is_unit=false"));
    assert!(stdout(&run(&["vec", "norm", "0"])).contains("norm_sq=2 inner=3"));

    assert_eq!(run(&["vec", "dot", "1"]).status.code(), Some(2));
}

#[test]
fn ratio_rows() {
    let out = run(&["ratio", "1", "1"]);
    assert!(stdout(&out).starts_with("1\t1 + 1*eps"));
    let out = run(&["ratio", "30", "30"]);
    let dist: f64 = stdout(&out).split("distance=").nth(1).unwrap().trim().parse().unwrap();
    assert!(dist < 1e-8);
    assert_eq!(run(&["ratio", "0", "3"]).status.code(), Some(2));
}
