use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_reports_the_verdict() {
    let o = run(&["classify", "--m", "2", "--n", "1", "--d", "3", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "finite");
    let o = run(&["classify", "--m", "2", "--d", "3", "--p", "3", "--classical", "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("case:"));
}

#[test]
fn dim_agrees_with_the_commutant() {
    let o = run(&["dim", "--m", "1", "--n", "1", "--d", "3", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("12"), "{text}");
    assert!(text.contains("commutant=formula: pass"));
}

#[test]
fn json_report_has_the_fixed_fields() {
    let o = run(&["--json", "decompose", "--biweight", "2|1", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json");
    for key in ["command", "inputs", "result", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["result"]["dim"], 3);
}

#[test]
fn dot_output_for_the_chain() {
    let o = run(&["quiver", "--m", "1", "--n", "1", "--d", "3", "--p", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph"), "{text}");
    assert_eq!(text.matches("->").count(), 6);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["classify", "--m", "2", "--d", "3", "--p", "4"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["decompose", "--biweight", "2,x", "--p", "3"]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in [["verify", "prop-3.5.1"], ["verify", "thm-4.2.1-count"], ["verify", "eq-indiso"]] {
        let o = run(&suite);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn slow_suite_skips_without_flag() {
    let o = run(&["verify", "sec-4.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skip"));
}
