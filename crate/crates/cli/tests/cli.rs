use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn ppg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ppg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

fn temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ppg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn witness(name: &str) -> String {
    let o = ppg(&["gen", "witness", name], "");
    assert!(o.status.success());
    stdout(&o)
}

const EN1: &str = "ppg v1\nvertex a\nvertex b\ncover a b\nwinset a\n";

#[test]
fn op_outcome_is_p() {
    let o = ppg(&["outcome", "-"], &witness("OP"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "P\n");
}

#[test]
fn en1_maker_first() {
    let o = ppg(&["solve", "-", "--first", "maker"], EN1);
    assert_eq!(first_line(&o), "Maker");
}

#[test]
fn connect3_pipeline() {
    let board = stdout(&ppg(&["gen", "connectk", "--k", "3", "--w", "3", "--h", "3"], ""));
    assert_eq!(board.matches("\nwinset").count(), 8);
    for algo in ["auto", "oracle", "dp"] {
        assert_eq!(first_line(&ppg(&["solve", "-", "--algo", algo], &board)), "Maker", "{algo}");
    }
}

#[test]
fn json_envelope() {
    let o = ppg(&["--json", "solve", "-", "--first", "both"], EN1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "N");
    for key in ["winner", "solver", "nodes", "wall_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let o = ppg(&["--json", "outcome", "-"], EN1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "N");
    assert_eq!(v["maker_first"], "Maker");
}

#[test]
fn errors_exit_nonzero() {
    let o = ppg(&["solve", "-"], "ppg v1\nvertex a\ncover a a\n");
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle"));
    let o = ppg(&["outcome", "-"], "ppg v1\nvertex a\nbogus a\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert!(!ppg(&["solve", "/nonexistent/file"], "").status.success());
    assert!(!ppg(&["gen", "connectk", "--k", "0", "--w", "3", "--h", "3"], "").status.success());
}

#[test]
fn union_table_check() {
    let a = temp("en1.ppg", &witness("EN1"));
    let b = temp("en2.ppg", &witness("EN2"));
    let o = ppg(&["union", a.to_str().unwrap(), b.to_str().unwrap(), "--check-table"], "");
    assert!(o.status.success());
    assert_eq!(first_line(&o), "N");
    assert!(stdout(&o).contains("consistent"));
}

#[test]
fn generators() {
    let cnf = temp("f.cnf", "c tiny\np cnf 2 2\n1 -2 0\n2 0\n");
    let g = stdout(&ppg(&["gen", "sat", cnf.to_str().unwrap()], ""));
    // Satisfiable, so Breaker wins.
    assert_eq!(first_line(&ppg(&["solve", "-"], &g)), "Breaker");

    let qbf = temp("f.qdimacs", "p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
    let g = stdout(&ppg(&["gen", "qbf", qbf.to_str().unwrap()], ""));
    assert_eq!(g.matches("\nvertex").count(), 5);

    let cover = temp("h.txt", "element p\nelement q\nedge p\nedge q\n");
    let g = stdout(&ppg(&["gen", "setcover", cover.to_str().unwrap(), "--k", "1"], ""));
    assert_eq!(first_line(&ppg(&["solve", "-"], &g)), "Maker");
    let g = stdout(&ppg(&["gen", "setcover", cover.to_str().unwrap(), "--k", "2"], ""));
    assert_eq!(first_line(&ppg(&["solve", "-"], &g)), "Breaker");

    let at = temp("a.txt", "var p\nvar q\nclause p q\n");
    let g = stdout(&ppg(&["gen", "avoidtrue", at.to_str().unwrap()], ""));
    assert!(g.contains("convention: maker-maker"));
    assert!(ppg(&["solve", "-", "--first", "both"], &g).status.success());

    let r1 = stdout(&ppg(&["gen", "random", "--n", "6", "--width", "2", "--winsets", "2", "--size", "3", "--seed", "1"], ""));
    let r2 = stdout(&ppg(&["gen", "random", "--n", "6", "--width", "2", "--winsets", "2", "--size", "3", "--seed", "1"], ""));
    assert_eq!(r1, r2);
}

#[test]
fn verify_commands() {
    let o = ppg(&["verify", "witnesses"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    let o = ppg(&["--json", "verify", "solvers", "--family", "chains-ws2", "--count", "40"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!ppg(&["verify", "solvers", "--family", "nope"], "").status.success());
    assert!(ppg(&["verify", "union-table", "--max-n", "5", "--samples", "40", "--seed", "3"], "").status.success());
}

#[test]
fn play_session() {
    let f = temp("play.ppg", EN1);
    let o = ppg(&["play", f.to_str().unwrap(), "--as", "maker"], "b\na\n");
    let s = stdout(&o);
    assert!(o.status.success());
    assert!(s.contains("illegal move `b`; legal: a"));
    assert!(s.contains("Maker wins."));
}
