use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use arrowsimp::{paley_tournament, to_trn, SuiteReport};
use arrowsimp_cli::{failure_summary, write_fixtures, ReportFile, ResultEntry};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrowsimp"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_random_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.trn", "b.trn"] {
        assert!(run(dir.path(), &["gen", "random", "6", "--seed", "42", "--out", name]).status.success());
    }
    let a = fs::read(dir.path().join("a.trn")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.trn")).unwrap());
    assert!(a.starts_with(b"6\n"));
}

#[test]
fn gen_paley_row_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "paley", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().nth(1), Some("0110100"));
    assert_eq!(text, to_trn(&paley_tournament(7).unwrap()));
}

#[test]
fn bad_parameters_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "paley", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3 mod 4"));
    assert_eq!(run(dir.path(), &["gen", "bogus"]).status.code(), Some(2));

    fs::write(dir.path().join("bad.trn"), "3\n011\n001\n0x0\n").unwrap();
    let o = run(dir.path(), &["analyze", "bad.trn"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 2"));
}

#[test]
fn analyze_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "paley", "7", "--out", "p7.trn"]);
    let o = run(d, &["analyze", "p7.trn", "--exact", "--json"]);
    let report = ReportFile::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.to_json(), stdout(&o));
    let ResultEntry::Analysis(a) = &report.results[0] else { panic!("not an analysis") };
    assert_eq!((a.s, a.witness_arcs.len(), a.doubly_regular_k), (Some(3), 3, Some(1)));

    run(d, &["gen", "paley-minus", "11", "--delete", "0,1,2", "--out", "m3.trn"]);
    assert!(stdout(&run(d, &["analyze", "m3.trn"])).contains("\ns                 2\n"));

    fs::write(d.join("t5.trn"), "5\n01111\n00111\n00011\n00001\n00000\n").unwrap();
    let text = stdout(&run(d, &["analyze", "t5.trn"]));
    assert!(text.contains("\ns                 0\n") && text.contains("witness module    {"));
    let text = stdout(&run(d, &["analyze", "t5.trn", "--bounds-only"]));
    assert!(text.contains("\ns                 0\n"));
}

#[test]
fn verify_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "theorem1", "--exhaustive", "5"][..],
        &["verify", "theorem9", "--q", "11"],
        &["verify", "lakhlifi", "--q", "7"],
        &["verify", "paley", "--q", "19"],
        &["verify", "characterize", "--q", "11"],
        &["verify", "identities", "--samples", "50", "--n-max", "16"],
    ] {
        let o = run(dir.path(), args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
    }
    let o = run(dir.path(), &["verify", "theorem1", "--exhaustive", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_scope_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // k = 1 is below the range of the two/three deletion suite
    assert_eq!(run(dir.path(), &["verify", "theorem9", "--q", "7"]).status.code(), Some(2));
    let o = run(dir.path(), &["verify", "characterize", "--samples", "3", "--n-min", "7"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(dir.path(), &["verify", "lakhlifi", "--q", "11", "--fixtures", "fx"]);
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
    assert!(!dir.path().join("fx").exists());
}

#[test]
fn failures_are_reported_with_replayable_instance() {
    let t = paley_tournament(7).unwrap();
    let mut r = SuiteReport::new("demo", &["holds", "breaks"]);
    r.record("holds", "paley:q=7", &t, true, String::new);
    r.record("breaks", "paley:q=7", &t, false, || "deliberate".into());
    assert!(!r.passed());
    let text = failure_summary(&r).unwrap();
    assert!(text.starts_with("demo: check breaks failed on paley:q=7: deliberate\n7\n0110100\n"));

    let dir = tempfile::tempdir().unwrap();
    let written = write_fixtures(&dir.path().join("fx"), &[r]).unwrap();
    assert_eq!(written.len(), 1);
    assert!(written[0].ends_with("demo-breaks.trn"));
    let replay = arrowsimp::parse_trn(&fs::read_to_string(&written[0]).unwrap()).unwrap();
    assert_eq!(replay, t);
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "paley", "11", "--out", "p.trn"]);
    assert!(run(d, &["convert", "dr-to-hadamard", "p.trn", "h.txt"]).status.success());
    let h = fs::read_to_string(d.join("h.txt")).unwrap();
    assert!(h.starts_with("12\n+1 +1"));
    assert!(run(d, &["convert", "hadamard-to-dr", "h.txt", "back.trn"]).status.success());
    assert_eq!(fs::read(d.join("p.trn")).unwrap(), fs::read(d.join("back.trn")).unwrap());

    run(d, &["gen", "random", "7", "--seed", "1", "--out", "r.trn"]);
    let o = run(d, &["convert", "dr-to-hadamard", "r.trn", "x.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not doubly regular"));
    assert!(!d.join("x.txt").exists());
}

#[test]
fn report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "bounds", "--samples", "30", "--seed", "9", "--json"][..],
        &["verify", "theorem9", "--q", "11", "--json"],
    ] {
        let text = stdout(&run(dir.path(), args));
        let report = ReportFile::from_json(&text).unwrap();
        assert_eq!(report.to_json(), text);
        assert!(matches!(report.results[0], ResultEntry::Suite(_)));
        let keys: Vec<&str> = text.lines().skip(1).take(2).map(|l| l.trim()).collect();
        assert!(keys[0].starts_with("\"tool_version\"") && keys[1].starts_with("\"command\""));
    }
    let a = stdout(&run(dir.path(), &["verify", "bounds", "--samples", "30", "--seed", "9", "--json", "--workers", "4"]));
    let b = stdout(&run(dir.path(), &["verify", "bounds", "--samples", "30", "--seed", "9", "--json"]));
    assert_eq!(a, b);
}

#[test]
fn csv_has_one_row_per_check() {
    let dir = tempfile::tempdir().unwrap();
    let text = stdout(&run(dir.path(), &["verify", "lakhlifi", "--q", "7", "--csv"]));
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.headers().unwrap().get(1), Some("check"));
    assert_eq!(r.records().count(), arrowsimp::verify::LAKHLIFI_CHECKS.len());
}
