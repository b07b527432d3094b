use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fstab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn canon_and_value() {
    let o = fstab(&["canon", "0(1000)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(0100) 4/15\n");
    assert_eq!(stdout(&fstab(&["value", "11(01)"])), "5/6\n");
    assert_eq!(stdout(&fstab(&["canon", "5/6"])), "1(10) 5/6\n");
}

#[test]
fn act_moves_point() {
    let o = fstab(&["act", "4/15", "ABB"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1(0010)\n");
}

#[test]
fn graph_dot_is_deterministic() {
    let a = fstab(&["graph", "1/2", "--radius", "4", "--format", "dot"]);
    let b = fstab(&["graph", "1/2", "--radius", "4", "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn graph_json_parses() {
    let o = fstab(&["graph", "4/15", "--radius", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["seed"], "(0100)");
    assert_eq!(doc["vertices"][0], "(0100)");
}

#[test]
fn gens_pipe_into_verify() {
    let gens = fstab(&["gens", "1(0011)"]);
    assert!(gens.status.success());
    assert!(stdout(&gens).starts_with("# point=(1001) h=e w=0110\n"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_fstab"))
        .args(["verify", "1(0011)", "--gens", "-", "--samples", "30"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gens.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn path_between_points() {
    let o = fstab(&["path", "4/15", "10(0100)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ABB\n");
    assert_eq!(fstab(&["path", "1/2", "0(1)", "--radius", "3"]).status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let o = fstab(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(fstab(&[]).status.code(), Some(2));
    assert_eq!(fstab(&["canon", "2/1"]).status.code(), Some(2));
    assert_eq!(fstab(&["act", "1/2", "q"]).status.code(), Some(2));
    assert_eq!(fstab(&["graph", "1/2", "--radius", "9", "--cap", "5"]).status.code(), Some(1));
    assert_eq!(fstab(&["--help"]).status.code(), Some(0));
}
