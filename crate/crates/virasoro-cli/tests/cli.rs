use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_virasoro"))
        .args(args)
        .env_remove("VIRASORO_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("virasoro-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn c1_character_is_q_minus_q4_times_phi() {
    let out = run(&["character", "--c1", "--j", "1", "--N", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["character"]["leading_exponent"], "1");
    let coeffs: Vec<&str> = v["character"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "1", "2", "2", "4", "5", "8", "10", "15"]);
}

#[test]
fn bdiz_vector_at_level_two() {
    let out = run(&["singvec", "--method", "bdiz", "--j", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["vector"], serde_json::json!({ "[1,1]": "1", "[2]": "-t" }));
    assert_eq!(v["singular"], true);
}

#[test]
fn kac_ratio_is_constant() {
    let v = json_of(&run(&["kacdet", "--level", "3"]));
    assert_eq!(v["constant"], true);
    assert_eq!(v["ratio"], "2304");
}

#[test]
fn gram_at_a_degenerate_point() {
    let v = json_of(&run(&["gram", "--c", "1/2", "--h", "1/16", "--level", "2"]));
    assert_eq!(v["rank"], 1);
    assert_eq!(v["det"], "0");
}

#[test]
fn jantzen_and_goldstone() {
    let v = json_of(&run(&["jantzen", "--m", "3", "--r", "1", "--s", "1", "--level", "3"]));
    assert_eq!(v["identity"], true);
    assert_eq!(v["det_order"], v["dim_sum"]);
    let out = run(&["goldstone", "--k2", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["singular"], true);
}

#[test]
fn identity_mismatch_exits_one() {
    // the pairing at 2p = 3 against the determinant at μ = 2
    let out = run(&["binomdet", "--f", "2,1", "--mu", "2", "--two-p", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["pairing"]["equals_det"], false);
    let out = run(&["binomdet", "--f", "2,1", "--two-p", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["character", "--j", "1"][..],
        &["gram", "--c", "x", "--level", "2"],
        &["fock-check", "--emax", "-1"],
        &["fock-check", "--suite", "nope"],
        &["--threads", "0", "kacdet", "--level", "2"],
        &["acceptance", "--suite", "11"],
        &["jantzen", "--m", "3", "--r", "3", "--s", "1", "--level", "2"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn fock_suites_from_the_command_line() {
    let out = run(&["--threads", "1", "fock-check", "--emax", "4", "--suite", "car,shift", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() == 2 && text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn out_dir_from_environment_and_flag() {
    let dir = scratch("env");
    let out = Command::new(env!("CARGO_BIN_EXE_virasoro"))
        .args(["ffpoly", "--j", "1", "--format", "csv"])
        .env("VIRASORO_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("ffpoly.csv")).unwrap();
    assert_eq!(written.as_bytes(), &out.stdout[..]);
    assert!(written.starts_with("key,value\n"));

    let dir2 = scratch("flag");
    let out = run(&["--out", dir2.to_str().unwrap(), "kacdet", "--level", "2", "--mode", "product"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir2.join("kacdet.json")).unwrap()).unwrap();
    assert!(v["product"].is_string());
    let _ = std::fs::remove_dir_all(dir);
    let _ = std::fs::remove_dir_all(dir2);
}

#[test]
fn acceptance_subset() {
    let out = run(&["acceptance", "--suite", "2,9", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2, "{text}");
}
