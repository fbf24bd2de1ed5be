use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_merge-algebra")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_merge-algebra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ds_solve_json() {
    let o = run(&["--json", "ds", "solve", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[2][0]["term"], "{x {x x}}");
    assert_eq!(v[2][0]["coeff"]["num"], 2);
}

#[test]
fn lr_product_text() {
    let o = run(&["lr", "product", "[< x x]", "[< x x]"]);
    assert!(o.status.success());
    // binom(2, 1) terms
    assert_eq!(stdout(&o).trim(), "[< • [< • •]] + [< [< • •] •]");
}

#[test]
fn mg_external_merge() {
    let o = run(&["mg", "em", r#"v:"sel(D) V""#, r#"d:"D""#]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"[< v:"V" d:""]"#);
    let bad = run(&["mg", "em", r#"v:"V""#, r#"d:"D""#]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn reads_dash_from_stdin() {
    let o = run_stdin(&["--json", "ext", "relations", "-"], "{a b}\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sisters"].as_array().unwrap().len(), 2);
    assert!(v["asym_c_commands"].as_array().unwrap().is_empty());
}

#[test]
fn check_exit_codes() {
    // fails, but the failure is a known one
    assert!(run(&["check", "left-ideal"]).status.success());
    let o = run(&["check", "no-such-law"]);
    assert_eq!(o.status.code(), Some(2));
    let list = stdout(&run(&["check", "--list"]));
    assert!(list.lines().any(|l| l.starts_with("lr-coassoc")));
}

#[test]
fn config_files() {
    let mut kv = tempfile::NamedTempFile::new().unwrap();
    writeln!(kv, "# small run\nmaxLeaves=3\nsmcMode = sum-all").unwrap();
    let mut js = tempfile::NamedTempFile::new().unwrap();
    write!(js, r#"{{"maxLeaves": 3, "smcMode": "sum-all"}}"#).unwrap();
    let a = run(&["--json", "--config", kv.path().to_str().unwrap(), "check", "right-ideal"]);
    let b = run(&["--json", "--config", js.path().to_str().unwrap(), "check", "right-ideal"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["smcMode"], "sum-all");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "colour=red").unwrap();
    let o = run(&["--config", bad.path().to_str().unwrap(), "check", "lr-counit"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_check_is_deterministic() {
    let args = ["--json", "check", "lr-assoc", "lca-totality", "ws-equivalence"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
