use serde_json::Value;
use std::process::{Command, Output};

fn recalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recalg")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fixtures_subcommand_passes() {
    let o = recalg(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert!(v["fixtures"].as_array().unwrap().iter().all(|f| f["passed"] == true));
}

#[test]
fn verify_full_oracle_for_7_3() {
    let o = recalg(&["verify", "--r", "7", "--a", "3", "--mode", "full_oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["oracle"]["ideal_equal"], true);
}

#[test]
fn hj_for_165_104() {
    let v = json(&recalg(&["hj", "--r", "165", "--a", "104"]));
    assert_eq!(v["alpha"], serde_json::json!([2, 3, 2, 4, 3, 2, 2]));
}

#[test]
fn every_subcommand_runs() {
    let group = ["--r", "7", "--a", "2"];
    for sub in ["hj", "quiver", "generators", "qdet", "matrix-m", "matrix-k", "verify", "deform", "charts", "fiber"] {
        for format in ["json", "text"] {
            let mut args = vec![sub];
            args.extend(group);
            args.extend(["--format", format]);
            let o = recalg(&args);
            assert_eq!(o.status.code(), Some(0), "{sub} {format}: {}", String::from_utf8_lossy(&o.stderr));
            assert!(!o.stdout.is_empty());
        }
    }
    let o = recalg(&["pi", "--r", "3", "--a", "1", "--point", r#"["1","2","0","5","4","7"]"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["in_delta"], true);
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(recalg(&["verify", "--r", "8", "--a", "2"]).status.code(), Some(2));
    assert_eq!(recalg(&["verify", "--r", "7", "--a", "2", "--mode", "fast"]).status.code(), Some(2));
    assert_eq!(recalg(&["pi", "--r", "7", "--a", "2", "--point", "[1]"]).status.code(), Some(2));
    assert_eq!(recalg(&[]).status.code(), Some(2));
}

#[test]
fn pair_cap_from_environment_reports_failure() {
    let o = Command::new(env!("CARGO_BIN_EXE_recalg"))
        .args(["fiber", "--r", "11", "--a", "3"])
        .env("RECALG_MAX_PAIRS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    assert!(v["error"].is_string());
}

#[test]
fn sweep_is_deterministic() {
    let a = recalg(&["sweep", "--max-r", "8", "--seed", "5"]);
    let b = recalg(&["sweep", "--max-r", "8", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["failed"], 0);
}
