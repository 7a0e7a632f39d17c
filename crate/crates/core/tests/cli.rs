use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quadrivol"));
    c.env_remove("QUADRIVOL_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn check_golden(args: &[&str], file: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file));
}

#[test]
fn veronese_golden() {
    check_golden(&["--json", "veronese"], "veronese.json");
}

#[test]
fn rnc_golden() {
    check_golden(&["rnc", "--n", "5", "--json"], "rnc_n5.json");
}

#[test]
fn scroll_golden() {
    check_golden(&["--json", "scroll", "--k", "2", "--l", "3"], "scroll_k2_l3.json");
}

#[test]
fn trigonal_golden() {
    check_golden(&["--json", "trigonal", "--n", "5"], "trigonal_n5.json");
}

#[test]
fn text_reports() {
    let out = run(&["veronese"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("base_count=2 harmonic_count=4"));
    let out = run(&["rnc", "--n", "5"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("base_count=4"));
}

#[test]
fn gallery_json_all_pass() {
    let out = run(&["gallery", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cases = v.as_array().unwrap();
    assert!(cases.iter().all(|c| c["passed"] == true));
    let summary = String::from_utf8(out.stderr).unwrap();
    assert_eq!(summary.trim(), format!("passed {0}/{0}", cases.len()));
}

#[test]
fn injected_failure_exits_one() {
    let m = scratch(
        "failing.json",
        r#"[{"case": "veronese"}, {"case": "rnc", "n": 5, "expected_base_count": 5}]"#,
    );
    let out = run(&["gallery", "--manifest", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("passed 1/2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["rnc", "--n"]).status.code(), Some(2));
    assert_eq!(run(&["scroll", "--k", "2", "--l", "3", "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(run(&["--seed", "minus-one", "genus4"]).status.code(), Some(2));
}

#[test]
fn malformed_descriptor_exits_two() {
    let p = scratch("bad.json", "{\n  \"variety\": {\"type\": \"rnc\", \"n\": 4},\n  \"involution\": \n");
    let out = run(&["decompose", "--descriptor", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line"));
}

#[test]
fn non_square_matrix_names_field() {
    let p = scratch(
        "nonsquare.json",
        r#"{"variety": {"type": "rnc", "n": 2}, "involution": {"matrix": [[1, 0, 0], [0, -1]]}}"#,
    );
    let out = run(&["decompose", "--descriptor", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("involution.matrix"));
}

#[test]
fn decompose_descriptor() {
    let p = scratch(
        "d4.json",
        r#"{
            "variety": {"type": "rnc", "n": 4},
            "involution": {"matrix": [[1,0,0,0,0],[0,-1,0,0,0],[0,0,1,0,0],[0,0,0,-1,0],[0,0,0,0,1]]},
            "eta": {"t": [[1, 0], [0, -1]]}
        }"#,
    );
    let out = run(&["--json", "decompose", "--descriptor", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["invariant"], true);
    assert_eq!(v["decomposition"]["base_count"], 2);

    let out = run(&["--json", "joinf", "--descriptor", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lhs"], 2);
}

#[test]
fn non_invariant_descriptor_exits_one() {
    let p = scratch(
        "twisted.json",
        r#"{
            "variety": {"type": "rnc", "n": 3},
            "involution": {"matrix": [[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]},
            "eta": {"t": [[1, 0], [0, -1]]}
        }"#,
    );
    let out = run(&["decompose", "--descriptor", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_from_environment() {
    let a = bin().args(["--json", "genus4"]).env("QUADRIVOL_SEED", "9").output().unwrap();
    let b = run(&["--json", "--seed", "9", "genus4"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--json", "--seed", "10", "genus4"]);
    assert_ne!(a.stdout, c.stdout);
}
