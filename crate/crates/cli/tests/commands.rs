use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const LAYERED6: &str = "# six variables, three layers\n\
x1: 1 -> 0\nx2: 0 -> 0\nx3: 0 -> 0\nx4: 1 -> 1\nx5: 1 -> 1\nx6: 1 -> 0\ndefault: 1\n";
const LAYERED6_NORMALIZED: &str =
    "x1: 1 -> 0\nx2: 0 -> 0\nx3: 0 -> 0\nx4: 1 -> 1\nx5: 1 -> 1\nx6: 0 -> 1\ndefault: 0\n";
const OR3: &str = "x1: 1 -> 1\nx2: 1 -> 1\nx3: 1 -> 1\ndefault: 0\n";
const F6: &str =
    "x1: 1 -> 1\nx2: 1 -> 0\nx3: 1 -> 1\nx4: 1 -> 0\nx5: 1 -> 1\nx6: 1 -> 0\ndefault: 1\n";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }
}

fn ncf<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_ncf"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn machine_line(out: &Output) -> String {
    stdout(out).lines().last().unwrap_or("").to_string()
}

#[test]
fn normalize_layered6() {
    let ws = Workspace::new();
    let out = ncf([
        "normalize".as_ref(),
        ws.file("layered6.ncf", LAYERED6).as_os_str(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), LAYERED6_NORMALIZED);

    let again = ncf([
        "normalize".as_ref(),
        ws.file("normalized6.ncf", LAYERED6_NORMALIZED).as_os_str(),
    ]);
    assert_eq!(stdout(&again), LAYERED6_NORMALIZED);
}

#[test]
fn normalize_canonical_sorts_layers() {
    let ws = Workspace::new();
    let f = ws.file("f.ncf", "x3: 0 -> 1\nx1: 1 -> 1\nx2: 0 -> 1\ndefault: 0\n");
    let out = ncf(["normalize".as_ref(), "--canonical".as_ref(), f.as_os_str()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "x1: 1 -> 1\nx2: 0 -> 1\nx3: 0 -> 1\ndefault: 0\n"
    );
}

#[test]
fn malformed_default_reports_line() {
    let ws = Workspace::new();
    let f = ws.file("bad.ncf", "x1: 1 -> 1\nx2: 1 -> 1\ndefault: maybe\n");
    let out = ncf(["normalize".as_ref(), f.as_os_str()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = ncf(["analyze", "/nonexistent/file.ncf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_machine_lines() {
    let ws = Workspace::new();
    for (name, text, expected) in [
        (
            "layered6.ncf",
            LAYERED6,
            "n=6 q=2 r1=0 r2=2 level=4 strong=0",
        ),
        ("f6.ncf", F6, "n=6 q=5 r1=4 r2=1 level=6 strong=1"),
        ("or3.ncf", OR3, "n=3 q=1 r1=1 r2=0 level=1 strong=0"),
    ] {
        let out = ncf(["analyze".as_ref(), ws.file(name, text).as_os_str()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(machine_line(&out), expected, "{name}");
    }
    let out = ncf([
        "analyze".as_ref(),
        ws.file("layered6.ncf", LAYERED6).as_os_str(),
    ]);
    assert!(stdout(&out).contains("table: n=6 tt=4040400040404040"));
}

#[test]
fn eval_and_to_table() {
    let ws = Workspace::new();
    let f = ws.file(
        "mixed3.ncf",
        "x1: 1 -> 0\nx2: 1 -> 1\nx3: 0 -> 1\ndefault: 0\n",
    );
    let out = ncf(["to-table".as_ref(), f.as_os_str()]);
    assert_eq!(stdout(&out), "n=3 tt=45\n");
    for index in 0..8u64 {
        let out = ncf(["eval".as_ref(), f.as_os_str(), index.to_string().as_ref()]);
        let expected = (0x45u64 >> index) & 1;
        assert_eq!(
            machine_line(&out),
            format!("index={index} value={expected}")
        );
    }
    let out = ncf(["eval".as_ref(), f.as_os_str(), "8".as_ref()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recognize_verdicts() {
    let ws = Workspace::new();
    let or3 = ws.file("or3.st", "groups: 3\n0: 0\n1: 1\n2: 1\n3: 1\n");
    let out = ncf(["recognize".as_ref(), or3.as_os_str()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with(OR3), "{text}");
    let back = ws.file("back.ncf", &text);
    let table = ncf(["to-table".as_ref(), back.as_os_str()]);
    assert_eq!(stdout(&table), "n=3 tt=FE\n");

    let maj = ws.file("maj.st", "groups: 3\n0: 0\n1: 0\n2: 1\n3: 1\n");
    let out = ncf(["recognize".as_ref(), maj.as_os_str()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("NOT-NCF "));

    let dup = ws.file("dup.st", "groups: 2\n0: 0\n1: 1\n1: 1\n2: 1\n");
    let out = ncf(["recognize".as_ref(), dup.as_os_str()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_small_and_capacity() {
    let out = ncf(["enumerate", "3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        machine_line(&out),
        "n=3 ncfs=64 strong=24 levels=1:4,2:36,3:24 expected=24 check=1"
    );

    let out = ncf(["enumerate", "20"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ncf(["enumerate", "5", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ncf(["enumerate", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ncf(["enumerate", "3", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_four_exposes_the_closed_form_gap() {
    // Exhaustive enumeration finds 240 strongly asymmetric NCFs on four
    // variables; the closed form n! 2^(n-1) gives 192, so --check fails.
    let out = ncf(["enumerate", "4", "--check"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        machine_line(&out),
        "n=4 ncfs=736 strong=240 levels=1:4,2:108,3:384,4:240 expected=192 check=0"
    );
    assert!(stdout(&out).contains("sum over layer shapes:  240"));
}

#[test]
fn enumerate_is_deterministic_across_job_counts() {
    let one = ncf(["enumerate", "4", "--jobs", "1"]);
    let four = ncf(["enumerate", "4", "--jobs", "4"]);
    let default = ncf(["enumerate", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
}

#[test]
fn hardness_gen_and_verify() {
    let ws = Workspace::new();
    let contradiction = ws.file("c.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let out = ncf([
        "hardness".as_ref(),
        "gen".as_ref(),
        contradiction.as_os_str(),
        "--rho".as_ref(),
        "1".as_ref(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("p cnf 5 4\n1 0\n-1 0\n2 -4 0\n3 -5 0\n"),
        "{text}"
    );

    let out = ncf([
        "hardness".as_ref(),
        "verify".as_ref(),
        contradiction.as_os_str(),
        "--rho".as_ref(),
        "1".as_ref(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(machine_line(&out), "sat=0 level=1 rho=1 ok=1");

    let unit = ws.file("u.cnf", "p cnf 1 1\n1 0\n");
    let out = ncf([
        "hardness".as_ref(),
        "verify".as_ref(),
        unit.as_os_str(),
        "--rho".as_ref(),
        "1".as_ref(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let line = machine_line(&out);
    assert!(
        line.starts_with("sat=1 level=") && line.ends_with(" rho=1 ok=1"),
        "{line}"
    );

    let big = ws.file("big.cnf", "p cnf 12 1\n1 0\n");
    let out = ncf([
        "hardness".as_ref(),
        "verify".as_ref(),
        big.as_os_str(),
        "--rho".as_ref(),
        "2".as_ref(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    let bad = ws.file("bad.cnf", "p cnf 1 1\n2 0\n");
    let out = ncf(["hardness".as_ref(), "gen".as_ref(), bad.as_os_str()]);
    assert_eq!(out.status.code(), Some(2));

    let out = ncf([
        "hardness".as_ref(),
        "gen".as_ref(),
        unit.as_os_str(),
        "--rho".as_ref(),
        "0".as_ref(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generated_formula_parses_back() {
    let ws = Workspace::new();
    let g = ws.file("g.cnf", "p cnf 2 1\n1 2 0\n");
    let out = ncf([
        "hardness".as_ref(),
        "gen".as_ref(),
        g.as_os_str(),
        "--rho".as_ref(),
        "2".as_ref(),
    ]);
    let reduced = ws.file("f.cnf", &stdout(&out));
    let again = ncf([
        "hardness".as_ref(),
        "gen".as_ref(),
        reduced.as_os_str(),
        "--rho".as_ref(),
        "1".as_ref(),
    ]);
    assert_eq!(again.status.code(), Some(0));
    assert!(stdout(&again).contains("p cnf 12 6\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ncf(["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncf(["enumerate"]).status.code(), Some(2));
    assert_eq!(ncf(["enumerate", "three"]).status.code(), Some(2));
}
