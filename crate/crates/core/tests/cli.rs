use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lieo(args: &[&str], cache_env: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lieo"));
    cmd.args(args).env_remove("LIEO_CACHE_DIR");
    if let Some(dir) = cache_env {
        cmd.env("LIEO_CACHE_DIR", dir);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(lieo(&["rootsys", "--type", "B2"], None).status.code(), Some(0));
    assert_eq!(lieo(&["rootsys", "--type", "B2", "--nope"], None).status.code(), Some(2));
    assert_eq!(lieo(&["frobnicate"], None).status.code(), Some(2));
    let bad = lieo(&["weyl", "--type", "A2", "--weight", "1,2,3"], None);
    assert_eq!(bad.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert!(v["error"]["kind"].is_string());
    let gl = lieo(&["rootsys", "--type", "GL"], None);
    assert_ne!(gl.status.code(), Some(0));
}

#[test]
fn output_is_byte_deterministic() {
    let runs: [&[&str]; 4] = [
        &["rootsys", "--type", "G2"],
        &["bgg", "--type", "A2", "--weight", "0,0", "--parabolic", "1"],
        &["audit", "coeff", "--type", "A2", "--weight", "1,-3", "--gamma", "1,1", "--n", "2"],
        &["drinfeld", "--d", "2", "--r", "-1", "--s", "1", "--format", "table"],
    ];
    for args in runs {
        let a = lieo(args, None);
        let b = lieo(args, None);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_envelope() {
    let o = lieo(&["weyl", "--type", "A2"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "weyl");
    assert!(v["result"].is_object());
}

#[test]
fn cache_cold_warm_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "verma", "--type", "B2", "--weight", "1,-2", "--depth", "5"];
    let uncached = lieo(&args[2..], None);
    let cold = lieo(&args, None);
    let warm = lieo(&args, None);
    assert_eq!(cold.status.code(), Some(0), "{}", stderr(&cold));
    assert_eq!(cold.stdout, uncached.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(!stderr(&warm).contains("warning"));

    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    let text = fs::read_to_string(&entries[0]).unwrap();
    fs::write(&entries[0], &text[..text.len() / 2]).unwrap();
    let repaired = lieo(&args, None);
    assert_eq!(repaired.status.code(), Some(0));
    assert!(stderr(&repaired).contains("cache entry rebuilt"), "{}", stderr(&repaired));
    assert_eq!(repaired.stdout, cold.stdout);
    assert_eq!(fs::read_to_string(&entries[0]).unwrap(), text);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = lieo(&["verma", "--type", "A2", "--weight", "0,0", "--depth", "3"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}
