use std::path::Path;
use std::process::{Command, Output};

fn mim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mim"))
        .args(args)
        .output()
        .expect("mim binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_reports_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("book.txt");
    let o = mim(&["gen", "--family", "book:4x5", "-o", arg(&file)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("20 vertices, 31 edges"));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("graph 20\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 31);

    let o = mim(&["gen", "--family", "path:1", "-o", arg(&file)]);
    assert!(stdout(&o).contains("1 vertices, 0 edges"));
    let o = mim(&["gen", "--family", "star:5", "-o", arg(&file)]);
    assert!(stdout(&o).contains("5 vertices, 4 edges"));
}

#[test]
fn gen_rejects_bad_families() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.txt");
    for family in ["cycle:2", "book:0x3", "wheel:5"] {
        let o = mim(&["gen", "--family", family, "-o", arg(&file)]);
        assert!(!o.status.success(), "{family} accepted");
    }
    let o = mim(&["gen", "--family", "path:4", "--witness", "-o", arg(&file)]);
    assert!(!o.status.success());
}

#[test]
fn witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("book.txt");
    let o = mim(&["gen", "--family", "book:5x5", "--witness", "-o", arg(&file)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = mim(&["solve", arg(&file), "--witness"]);
    let out = stdout(&o);
    assert!(out.contains("size 8\n"), "{out}");
    assert!(out.contains("optimal true"));
    assert!(out.contains("file_witness 8 valid"));
    assert_eq!(out.lines().filter(|l| l.starts_with("w ")).count(), 8);
}

#[test]
fn solve_methods() {
    let dir = tempfile::tempdir().unwrap();
    let book = dir.path().join("book.txt");
    mim(&["gen", "--family", "book:3x2", "-o", arg(&book)]);
    let out = stdout(&mim(&["solve", arg(&book)]));
    assert!(out.contains("size 2\n") && out.contains("method branch_and_bound"), "{out}");

    let cycle = dir.path().join("cycle.txt");
    mim(&["gen", "--family", "cycle:9", "-o", arg(&cycle)]);
    let out = stdout(&mim(&["solve", arg(&cycle), "--method", "brute"]));
    assert!(out.contains("size 3\n") && out.contains("method brute_force"), "{out}");

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "graph 4\n").unwrap();
    let out = stdout(&mim(&["solve", arg(&empty), "--method", "greedy"]));
    assert!(out.contains("size 0\n") && out.contains("optimal false"), "{out}");
}

#[test]
fn solve_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "graph 3\ne 0 1\ne 1 x\n").unwrap();
    let o = mim(&["solve", arg(&bad)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let big = dir.path().join("big.txt");
    mim(&["gen", "--family", "cycle:30", "-o", arg(&big)]);
    let o = mim(&["solve", arg(&big), "--method", "brute"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("30"), "{}", stderr(&o));

    let invalid = dir.path().join("invalid.txt");
    std::fs::write(&invalid, "graph 4\ne 0 1\ne 1 2\ne 2 3\nw 0 1\nw 2 3\n").unwrap();
    let o = mim(&["solve", arg(&invalid)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("not an induced matching"), "{}", stderr(&o));
}

#[test]
fn verify_exit_codes_follow_results() {
    let o = mim(&["verify", "--suite", "lemmas"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));

    let o = mim(&["verify", "--suite", "conjectures", "--m-max", "3", "--n-max", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("[REPORT]"));

    let o = mim(&["verify", "--suite", "theorems", "--m-max", "3", "--n-max", "3"]);
    let out = stdout(&o);
    assert_eq!(o.status.success(), !out.contains("[FAIL]"), "{out}");
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let o = mim(&[
        "sweep", "--m", "3..4", "--n", "2..5", "--workers", "2", "--csv", arg(&csv),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(mim_harness::sweep::CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.contains(",match,")));

    let o = mim(&["sweep", "--m", "4..3", "--n", "2..5", "--csv", arg(&csv)]);
    assert!(!o.status.success());
}
