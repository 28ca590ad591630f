use std::fs;
use std::process::{Command, Output};

fn quadwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn census_expectations() {
    let o = quadwalk(&["census", "--max-mult", "1", "--expect", "79"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classes 79"));
    let o = quadwalk(&["census", "--max-mult", "1", "--expect", "80"]);
    assert_eq!(o.status.code(), Some(1));
    let o = quadwalk(&["census", "--max-mult", "0"]);
    assert!(stdout(&o).contains("classes 0"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(quadwalk(&["census", "--nope"]).status.code(), Some(2));
    assert_eq!(quadwalk(&["model", "1,2,3"]).status.code(), Some(2));
    assert_eq!(quadwalk(&["verify", "d12"]).status.code(), Some(2));
    assert_eq!(quadwalk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn model_reports() {
    let o = quadwalk(&["model", "0,1,0,1,0,0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("group D6"));
    assert!(s.contains("F1b"));
    assert!(s.contains("orbit sum zero"));
    let o = quadwalk(&["model", "2,-3,5,-7,13,6,-9,15", "--out", "-"]);
    let s = stdout(&o);
    assert!(s.contains("group D4"));
    assert!(s.contains("F0 lambda=1/3"));
    assert!(s.contains("orbit sum nonzero"));
    let json = s.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["schema"], "qw/1");
    assert_eq!(v["families"][0]["lambda"], "1/3");
}

#[test]
fn verify_writes_json_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.jsonl");
    let o = quadwalk(&["verify", "d8", "--terms", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    for l in text.lines() {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert!(v["status"] == "pass" || v["status"] == "skipped");
    }
}

#[test]
fn sweep_resume_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let p = out.to_str().unwrap();
    let o = quadwalk(&["sweep", "--max-mult", "2", "--out", p, "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let fresh = fs::read(&out).unwrap();
    let text = String::from_utf8(fresh.clone()).unwrap();
    let half: Vec<&str> = text.lines().take(text.lines().count() / 2).collect();
    fs::write(&out, half.join("\n") + "\n").unwrap();
    let o = quadwalk(&["sweep", "--max-mult", "2", "--out", p, "--resume"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reused"));
    assert_eq!(fs::read(&out).unwrap(), fresh);
    let o = quadwalk(&["sweep", "--max-mult", "2", "--out", p, "--resume", "--group-bound", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guess_subcommand() {
    let o = quadwalk(&["guess", "0,1,0,1,0,0,0,1", "--terms", "60", "--kind", "algebraic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("checked on 75 terms: pass"));
}
