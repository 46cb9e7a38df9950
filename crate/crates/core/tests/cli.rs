use std::path::PathBuf;
use std::process::{Command, Output};

use hopf_baxter::fixtures;
use hopf_baxter::io::{from_json, to_json};
use hopf_baxter::scalar::Scalar;
use hopf_baxter::uqsl2::{spin_half, uqsl2_r_matrix};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hopf-baxter"));
    c.env_remove("HOPF_BAXTER_OUT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopf-baxter-{}-{}", name, std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn uqsl2_latex() {
    let o = run(&["uqsl2", "--spin", "1/2", "--parametric", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("\\begin{pmatrix}\ns & 0 & 0 & 0 \\\\"), "{}", text);
    assert!(text.contains("s^{-1}"));
    assert!(text.contains("\\mu"));
}

#[test]
fn uqsl2_json_matches_reference() {
    let o = run(&["uqsl2", "--spin", "1", "--parametric", "--format", "json", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let m = from_json(&stdout(&o)).unwrap();
    assert_eq!(m, fixtures::spin_one().matrix().unwrap());
    assert!(String::from_utf8_lossy(&o.stderr).contains("parametric YBE"));
}

#[test]
fn taft_pipeline_verifies() {
    let o = run(&["taft", "--N", "4", "--rep", "3,2", "--parametric", "--verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(from_json(&stdout(&o)).unwrap(), fixtures::taft_nine(4, 1, 2).matrix().unwrap());
    let o = run(&["taft", "--N", "3", "--alpha", "2", "--l", "1", "--parametric", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["taft", "--N", "4", "--rep", "3,1", "--normalization", "raw", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["taft", "--N", "4", "--q-power", "2", "--rep", "3,1"]).status.code(), Some(2));
    assert_eq!(run(&["taft", "--N", "4", "--rep", "3"]).status.code(), Some(2));
    assert_eq!(run(&["uqsl2", "--spin", "3/2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--input", "/nonexistent/matrix.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_detects_corruption() {
    let dir = scratch_dir("verify");
    let mut m = uqsl2_r_matrix(&spin_half(), true);
    let good = dir.join("good.json");
    std::fs::write(&good, to_json(&m)).unwrap();
    let o = run(&["verify", "--input", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("parametric YBE on V^(x3), dim V = 2: pass"));

    m.set(1, 2, m.get(1, 2).scale(&Scalar::int(2)));
    let bad = dir.join("bad.json");
    std::fs::write(&bad, to_json(&m)).unwrap();
    let o = run(&["verify", "--input", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let report = stdout(&o);
    assert!(report.contains("\"passed\": false") && report.contains("\"worst\""), "{}", report);

    std::fs::write(&bad, "{\"dim\": 4}").unwrap();
    assert_eq!(run(&["verify", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_directory_from_environment() {
    let dir = scratch_dir("out");
    let o = bin()
        .env("HOPF_BAXTER_OUT", &dir)
        .args(["uqsl2", "--spin", "1/2", "--parametric", "--format", "json", "--output", "nested/r.json"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.join("nested/r.json")).unwrap();
    assert_eq!(from_json(&text).unwrap(), fixtures::spin_half().matrix().unwrap());
}

#[test]
fn baxterize_and_double_commands() {
    let dir = scratch_dir("baxterize");
    let input = dir.join("r1.json");
    std::fs::write(&input, to_json(&uqsl2_r_matrix(&spin_half(), false))).unwrap();
    let o = run(&["baxterize", "--input", input.to_str().unwrap(), "--weights", "1,0", "--format", "json", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(from_json(&stdout(&o)).unwrap(), uqsl2_r_matrix(&spin_half(), true));

    let o = run(&["baxterize", "--input", input.to_str().unwrap(), "--weights", "0,0,0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["baxterize", "--taft", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).contains("mu"));

    let o = run(&["double", "--N", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimension 16"));
}

#[test]
fn single_regression() {
    let o = run(&["all-regressions", "--only", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[PASS]  1."));
    assert_eq!(run(&["all-regressions", "--only", "13"]).status.code(), Some(2));
}
