use assert_cmd::Command;

fn mediant() -> Command {
    Command::cargo_bin("mediant").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = mediant().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fails_with(args: &[&str], code: i32, needle: &str) {
    let out = mediant().args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(needle), "{args:?}: {err}");
}

#[test]
fn farey_rows() {
    assert_eq!(stdout_of(&["farey", "4"]), "0/1 1/4 1/3 1/2 2/3 3/4 1/1\n");
    assert_eq!(stdout_of(&["farey", "1"]), "0/1 1/1\n");
    assert_eq!(stdout_of(&["farey", "2", "--lines"]), "0/1\n1/2\n1/1\n");
    let json: Vec<String> = serde_json::from_str(&stdout_of(&["farey", "5", "--format", "json"])).unwrap();
    assert_eq!(json.len(), 11);
    assert_eq!(json[1], "1/5");
}

#[test]
fn farey_errors() {
    fails_with(&["farey", "0"], 2, "");
    fails_with(&["farey", "x"], 2, "invalid value");
    fails_with(&["farey", "100001"], 1, "LimitExceeded");
    fails_with(&["farey", "3", "--format", "dot"], 2, "dot");
}

#[test]
fn sb_queries() {
    assert_eq!(stdout_of(&["sb", "locate", "3/7"]), "LRR\n");
    assert_eq!(stdout_of(&["sb", "locate", "1/2"]), "\n");
    assert_eq!(stdout_of(&["sb", "decode", "LRR"]), "3/7\n");
    assert_eq!(stdout_of(&["sb", "decode", ""]), "1/2\n");
    assert_eq!(stdout_of(&["sb", "neighbors", "1/2"]), "0/1 1/1\n");
    assert_eq!(stdout_of(&["sb", "neighbors", "3/7"]), "2/5 1/2\n");
    assert_eq!(
        stdout_of(&["--format", "json", "sb", "locate", "6/14"]),
        "{\"fraction\":\"3/7\",\"path\":\"LRR\"}\n"
    );
    assert_eq!(
        stdout_of(&["sb", "neighbors", "5/7", "--format", "json"]),
        "{\"fraction\":\"5/7\",\"left\":\"2/3\",\"right\":\"3/4\"}\n"
    );
}

#[test]
fn sb_errors() {
    fails_with(&["sb", "locate", "0/1"], 1, "OutOfRange");
    fails_with(&["sb", "locate", "1/1"], 1, "OutOfRange");
    fails_with(&["sb", "neighbors", "4/3"], 1, "OutOfRange");
    fails_with(&["sb", "locate", "three/7"], 2, "invalid value");
    fails_with(&["sb", "locate", "1/0"], 2, "denominator is zero");
    fails_with(&["sb", "decode", "LXR"], 2, "only the letters L and R");
    fails_with(&["sb", "tree", "13"], 1, "LimitExceeded");
}

#[test]
fn sb_tree_renderings() {
    assert_eq!(stdout_of(&["sb", "tree", "0"]), "1/2\n");
    assert_eq!(stdout_of(&["sb", "tree", "2"]).lines().count(), 7);
    assert_eq!(
        stdout_of(&["sb", "tree", "1", "--format", "dot"]),
        "digraph sb {\n  \"1/2\" -> \"1/3\";\n  \"1/2\" -> \"2/3\";\n}\n"
    );
    let a = stdout_of(&["sb", "tree", "6", "--format", "dot"]);
    let b = stdout_of(&["sb", "tree", "6", "--format", "dot"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().filter(|l| l.contains("->")).count(), 2 * 63);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&["sb", "tree", "2", "--format", "json"])).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(json["vertices"][4]["path"], "LR");
    assert_eq!(json["vertices"][4]["value"], "2/5");
}

#[test]
fn bezout_command() {
    assert_eq!(stdout_of(&["bezout", "5", "7", "--method", "tree"]), "x=3 y=-2\n");
    assert_eq!(stdout_of(&["bezout", "5", "7", "--method", "euclid"]), "x=3 y=-2\n");
    assert_eq!(stdout_of(&["bezout", "3", "7"]), "x=5 y=-2\n");
    assert_eq!(stdout_of(&["bezout", "4", "9", "--method", "euclid"]), "x=7 y=-3\n");
    assert_eq!(stdout_of(&["bezout", "1", "1"]), "x=1 y=0\n");
    assert_eq!(
        stdout_of(&["bezout", "3", "7", "--format", "json"]),
        "{\"m\":3,\"n\":7,\"x\":5,\"y\":-2,\"check\":\"m*x+n*y=1\"}\n"
    );
    fails_with(&["bezout", "6", "4"], 1, "NotCoprime");
    fails_with(&["bezout", "0", "4"], 2, "");
    fails_with(&["bezout", "3", "7", "--method", "magic"], 2, "invalid value");
}

#[test]
fn approx_command() {
    assert_eq!(stdout_of(&["approx", "0.3333333", "10"]), "1/3\n");
    assert_eq!(stdout_of(&["approx", "0.70710678", "100"]), "70/99\n");
    assert_eq!(stdout_of(&["approx", "0.5", "2"]), "1/2\n");
    assert_eq!(stdout_of(&["approx", "0.5", "1"]), "0/1\n");
    assert_eq!(
        stdout_of(&["approx", "0.5", "1", "--format", "json"]),
        "{\"value\":\"0.5\",\"max_den\":1,\"best\":\"0/1\"}\n"
    );
    fails_with(&["approx", "1.5", "3"], 2, "[0, 1]");
    fails_with(&["approx", "abc", "3"], 2, "invalid value");
    fails_with(&["approx", "0.5", "0"], 2, "");
}

#[test]
fn locate_then_decode_round_trip() {
    for q in 2..=50u64 {
        for p in 1..q {
            if (1..=p).rev().find(|d| p % d == 0 && q % d == 0) != Some(1) {
                continue;
            }
            let f = format!("{p}/{q}");
            let path = stdout_of(&["sb", "locate", &f]);
            let back = stdout_of(&["sb", "decode", path.trim_end()]);
            assert_eq!(back.trim_end(), f);
        }
    }
}
