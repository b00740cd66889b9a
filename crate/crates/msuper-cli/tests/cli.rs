use std::process::{Command, Output};

fn msuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msuper")).args(args).env_remove("MSUPER_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_of_zero_is_tau() {
    let o = msuper(&["build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"N":4,"terms":[{"x":[0,0,0,0],"theta":[3],"coeff":"-t^3"},{"x":[0,0,0,0],"theta":[4],"coeff":"t^2"}]}"#
    );
}

#[test]
fn build_is_deterministic() {
    let args = ["build", "--N", "6", "--type", "0", "--label", "5,6", "--alpha", "1,1,0,0,0,0", "--format", "latex"];
    let a = msuper(&args);
    let b = msuper(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("\\theta_{5}"));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        &["build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,x,0,0"][..],
        &["build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,0"],
        &["build", "--N", "4", "--type", "0", "--label", "2,3", "--alpha", "0,0,0,0"],
        &["build", "--N", "4", "--type", "2", "--m", "1", "--alpha", "0,0,0,0"],
        &["eval", "--N", "4", "--type", "0", "--label", "2,4", "--alpha", "1,0,0,0"],
        &["eval", "--N", "4", "--type", "0", "--m", "1", "--alpha", "1,0,0,0", "--point", "x1"],
        &["verify", "--suite", "nope"],
    ] {
        assert_eq!(msuper(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_matches() {
    let o = msuper(&["eval", "--N", "4", "--m", "1", "--type", "0", "--alpha", "1,0,0,0", "--point", "x0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"V":"(t^5 - q*t^7 - q*t^9 + q^2*t^11)/(1 - q*t - q*t^3 + q^2*t^4)","verdict":"MATCH"}"#);
    let o = msuper(&["eval", "--N", "4", "--m", "1", "--type", "0", "--alpha", "0,0,0,0"]);
    assert_eq!(stdout(&o).trim(), r#"{"V":"1","verdict":"MATCH"}"#);
    let o = msuper(&["eval", "--N", "4", "--m", "1", "--type", "0", "--alpha", "0,1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("MATCH"));
    let o = msuper(&["eval", "--N", "4", "--m", "2", "--type", "1", "--alpha", "0,2,0,0", "--point", "x1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn singular_probe_outcomes() {
    let o = msuper(&["singular", "--N", "6", "--type", "1", "--label", "1,2,3", "--alpha", "2,1,0,0,0,0", "--e", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"exponents":[1,0,-1,2,1,0],"shape":[3,3],"hook":false,"outcome":"Singular"}"#);
    let o = msuper(&["singular", "--N", "6", "--type", "1", "--label", "1,2,3", "--alpha", "1,2,0,0,0,0", "--e", "2"]);
    assert!(stdout(&o).contains("NotContentVector"));
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join(format!("msuper-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = msuper(&["verify", "--suite", "module", "--N-max", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS module"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report[0]["suite"], "module");
    assert!(report[0]["failures"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_dir_round_trip() {
    let dir = std::env::temp_dir().join(format!("msuper-cache-{}", std::process::id()));
    let args = ["build", "--N", "3", "--type", "1", "--m", "1", "--alpha", "2,0,1"];
    let run = || Command::new(env!("CARGO_BIN_EXE_msuper")).args(args).env("MSUPER_CACHE_DIR", &dir).output().unwrap();
    let first = run();
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, msuper(&args).stdout);
    std::fs::remove_dir_all(&dir).ok();
}
