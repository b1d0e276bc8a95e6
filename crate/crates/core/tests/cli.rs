mod common;

use std::process::{Command, Output};

use common::fixture;
use pogamma::io::{from_machine, ReportDocument};
use pogamma::sweep::SweepReport;
use pogamma::theorems::CheckReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pogamma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn valid_fixtures_validate() {
    for name in ["one-element", "null-table", "min-chain", "left-zero"] {
        let o = run(&["validate", &path(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
}

#[test]
fn broken_fixtures_exit_2_with_diagnostics() {
    for (name, needle) in [
        ("broken-malformed", "parse error"),
        ("broken-out-of-range", "tables[0][1][1]"),
        ("broken-non-associative", "associativity"),
        ("broken-order", "antisymmetry"),
        ("incompatible", "compatibility"),
    ] {
        for cmd in ["validate", "analyze", "check"] {
            let o = run(&[cmd, &path(name)]);
            assert_eq!(o.status.code(), Some(2), "{cmd} {name}");
            let err = String::from_utf8_lossy(&o.stderr);
            assert!(err.contains(needle), "{cmd} {name}: {err}");
        }
    }
}

#[test]
fn missing_file_exits_2() {
    let o = run(&["check", "/nonexistent/structure.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_theorem_exits_2() {
    let o = run(&["check", &path("null-table"), "--theorem", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));
}

#[test]
fn single_theorem_filter() {
    let o = run(&["check", &path("null-table"), "--theorem", "prop4", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument<Vec<CheckReport>> = from_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.kind, "check");
    assert_eq!(doc.report.len(), 1);
    assert!(doc.report[0].passed());
}

#[test]
fn forced_violation_exits_1_with_witness() {
    let o = run(&["check", &path("incompatible"), "--no-compat-check", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: ReportDocument<Vec<CheckReport>> = from_machine(&stdout(&o)).unwrap();
    let failing: Vec<_> = doc.report.iter().filter(|r| !r.passed()).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|r| r.witness.is_some()));
}

#[test]
fn output_is_deterministic_and_out_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let args = ["check", &path("min-chain"), "--format", "machine"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let o = run(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), a);
}

#[test]
fn analyze_text_and_machine() {
    let o = run(&["analyze", &path("null-table")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("structure null-table"));
    assert!(text.contains("{0}"));
    let o = run(&["analyze", &path("null-table"), "--format", "machine"]);
    let doc: ReportDocument<pogamma::analysis::AnalysisReport> = from_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.report.bi_ideals.len(), 2);
}

#[test]
fn sweep_passes_and_is_worker_independent() {
    let base = ["sweep", "--n", "2", "--m", "2", "--canonical", "--format", "machine"];
    let one = run(&base);
    let four = run(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let doc: ReportDocument<Vec<SweepReport>> = from_machine(&stdout(&one)).unwrap();
    assert_eq!(doc.report[0].structures, 15);
}

#[test]
fn cumulative_sweep_covers_every_size() {
    let o = run(&["sweep", "--n", "2", "--m", "2", "--cumulative", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument<Vec<SweepReport>> = from_machine(&stdout(&o)).unwrap();
    let sizes: Vec<_> = doc.report.iter().map(|r| (r.n, r.m)).collect();
    assert_eq!(sizes, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
}

#[test]
fn incompatible_sweep_exits_1() {
    let o = run(&["sweep", "--n", "3", "--m", "1", "--canonical", "--no-compat-check"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("VIOLATION"));
}

#[test]
fn sweep_guard_exits_2() {
    let o = run(&["sweep", "--n", "6", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("beyond exhaustive range"));
}
