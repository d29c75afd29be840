use std::fs;
use std::process::{Command, Output};

use hurwitz_core::parse_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const FIGURE: &str = "7; 3,2,1,1; 3,2,1,1; 7";

#[test]
fn check_reports_genus() {
    let out = run(&["check", "3; 3; 3; 3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cover genus: 1"));
    let out = run(&["check", "2; 2; 2; 1,1"]);
    assert!(stdout(&out).contains("degenerate"));
    assert_eq!(
        run(&["check", "3; 3; 3; 3", "--genus", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "7; 3,x"]).status.code(), Some(1));
    assert_eq!(run(&["check", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let out = run(&["count", "3; 3; 3; 2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parity"));
    assert_eq!(run(&["count", "4; 3,1; 2,2"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", FIGURE]).status.code(), Some(2));
    assert_eq!(run(&["count", "3; 3; 3; 3; 1,1,1"]).status.code(), Some(2));
}

#[test]
fn count_table_and_json() {
    let table = stdout(&run(&["count", FIGURE]));
    assert!(table.contains("rigid         9"));
    assert!(table.contains("flexible      6"));
    assert!(table.contains("very flexible 4"));
    assert!(table.contains("legend:"));

    let json = stdout(&run(&["count", FIGURE, "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        (
            v["rigid"].as_u64(),
            v["flexible"].as_u64(),
            v["very_flexible"].as_u64()
        ),
        (Some(9), Some(6), Some(4))
    );
    assert_eq!(v["table"]["R^+"], 12);
    assert_eq!(v["table"].as_object().unwrap().len(), 12);
}

#[test]
fn classes_lists_one_line_per_class() {
    let text = stdout(&run(&["classes", FIGURE, "--orbits"]));
    let lines: Vec<_> = text.lines().filter(|l| l.starts_with("alpha=")).collect();
    assert_eq!(lines.len(), 9);
    assert!(lines
        .iter()
        .all(|l| l.contains("; beta=(") && l.contains("; gamma=(")));
    let flex = text.lines().find(|l| l.starts_with("flexible: ")).unwrap();
    let map: serde_json::Value = serde_json::from_str(&flex["flexible: ".len()..]).unwrap();
    assert_eq!(map.as_object().unwrap().len(), 9);
}

#[test]
fn dessins_written_to_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["dessins", FIGURE, "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let mut dots: Vec<String> = (0..9)
        .map(|i| fs::read_to_string(dir.path().join(format!("class_{i}.dot"))).unwrap())
        .collect();
    assert!(dots.iter().all(|d| d.starts_with("graph dessin {")));
    dots.sort();
    dots.dedup();
    assert_eq!(dots.len(), 9);

    let out = run(&[
        "dessins",
        "2; 2; 2; 1,1",
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let map = parse_json(&fs::read_to_string(dir.path().join("class_0.json")).unwrap()).unwrap();
    assert_eq!(map.degree, 2);
    assert_eq!(map.genus, 0);
}

#[test]
fn oracle_subcommand() {
    let text = stdout(&run(&["oracle", "4; 2,2; 2,2; 3,1"]));
    assert_eq!(text, "rigid 0\nflexible 0\nvery flexible 0\n");
}

#[test]
fn scan_orders_exceptional_first() {
    let text = stdout(&run(&["scan", "--degree", "6"]));
    let lines: Vec<_> = text.lines().collect();
    let first_ok = lines
        .iter()
        .position(|l| l.starts_with("realizable"))
        .unwrap();
    assert!(lines[..first_ok]
        .iter()
        .all(|l| l.starts_with("exceptional ")));
    assert_eq!(lines.last().unwrap(), &"exceptional: 6 / total: 63");
    assert_eq!(
        stdout(&run(&["scan", "--degree", "2"])),
        "exceptional: 0 / total: 0\n"
    );
}
