use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn grundy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grundy")).args(args).env_remove("GRUNDY_MAX_BOUND").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = grundy(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn point_values() {
    assert_eq!(stdout(&["sg", "welter:3", "7,5,3", "--saturate", "--p", "2"]).trim(), "sg=6 lg=12");
    assert_eq!(stdout(&["sg", "welter:3", "7,5,3", "--saturate", "--p", "5"]).trim(), "sg=12 lg=12");
    assert_eq!(stdout(&["sg", "sum:welter:3+welter:1", "7,5,3;3", "--saturate", "--p", "5"]).trim(), "sg=10 lg=15");
    assert_eq!(stdout(&["psi", "7,5,3", "--position", "--p", "5"]).trim(), "12");
    assert_eq!(stdout(&["psi", "4,3,2", "--p", "2"]).trim(), "7");
    assert_eq!(stdout(&["psi", ""]).trim(), "0");
    assert_eq!(stdout(&["hooks", "2,1"]).trim(), "1,1,3");
    assert_eq!(stdout(&["fcount", "4,3,2"]).trim(), "168");
    assert_eq!(stdout(&["fcount", "4,4,2;2,1"]).trim(), "144144");
    assert_eq!(stdout(&["pprime", "4,3,2", "--p", "2"]).trim(), "Z=3,2,2 f=21");
}

#[test]
fn saturated_grid() {
    let grid = stdout(&["table", "--saturate", "--p", "3", "nim:2", "--bound", "2"]);
    assert_eq!(grid, "\t0\t1\t2\n0\t0\t1\t2\n1\t1\t2\t0\n2\t2\t0\t1\n");
    let line = stdout(&["table", "welter:2", "--bound", "1"]);
    assert_eq!(line.lines().nth(1).unwrap(), "0\t-\t0");
}

#[test]
fn json_records_round_trip() {
    for args in [
        vec!["sg", "nim:2", "3,5", "--json"],
        vec!["table", "nim:1", "--bound", "3", "--json"],
        vec!["psi", "4,3,2", "--p", "3", "--json"],
        vec!["hooks", "3,1;2", "--json"],
        vec!["fcount", "3,3", "--json"],
        vec!["pprime", "4,4,2;2,1", "--p", "2", "--json"],
        vec!["verify", "pn-nim-corollary", "--json"],
        vec!["suites", "--json"],
    ] {
        let text = stdout(&args);
        for line in text.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["schema_version"], 1);
            assert_eq!(v["command"], args[0]);
            assert_eq!(serde_json::to_string(&v).unwrap(), line);
        }
        assert_eq!(stdout(&args), text, "{args:?} is not deterministic");
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(grundy(&["verify", "calm-counterexample"]).status.code(), Some(0));
    assert_eq!(grundy(&["verify", "welter-classical", "--bound", "3"]).status.code(), Some(0));
    assert_eq!(grundy(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(grundy(&["verify", "macdonald-criterion", "--p", "4"]).status.code(), Some(2));
    let text = stdout(&["suites"]);
    assert_eq!(text.lines().count(), 20);
}

#[test]
fn replay_reproduces_failure() {
    let out = grundy(&["verify", "pn-nim-corollary", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["outcome"], "fail");
    let replay = serde_json::to_string(&v["result"]["replay"]).unwrap();
    let again = grundy(&["verify", "pn-nim-corollary", "--params", &replay, "--json"]);
    assert_eq!(again.status.code(), Some(0));
    let w: Value = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(w["result"]["counterexample"], v["result"]["counterexample"]);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(grundy(&["sg", "welter:2", "3,3"]).status.code(), Some(2));
    assert_eq!(grundy(&["sg", "nim:2", "1,2,3"]).status.code(), Some(2));
    assert_eq!(grundy(&["fcount", "1,2"]).status.code(), Some(2));
    assert_eq!(grundy(&["pprime", "2,1", "--p", "6"]).status.code(), Some(2));
    assert_eq!(grundy(&["sg", "chess:2", "1"]).status.code(), Some(2));
}

#[test]
fn bound_cap() {
    assert_eq!(grundy(&["table", "nim:1", "--bound", "13"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_grundy"))
        .args(["table", "nim:1", "--bound", "13"])
        .env("GRUNDY_MAX_BOUND", "20")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().last(), Some("13\t13"));
}

#[test]
fn explicit_game_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two_point.txt");
    fs::write(&path, "# two positions\nm=1\n3\npositions:\n0\n3\n").unwrap();
    let game = format!("explicit:@{}", path.display());
    assert_eq!(stdout(&["sg", &game, "3"]).trim(), "sg=1 lg=1");
    let sum = format!("sum:{game}+nim:1");
    assert_eq!(stdout(&["sg", &sum, "3;1"]).trim(), "sg=0 lg=2");
    assert_eq!(grundy(&["sg", "explicit:@/nonexistent", "0"]).status.code(), Some(2));
}
