//! End-to-end checks of the command-line interface: exit codes, pipe
//! composability via stdin, and byte-level determinism of the output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn canfilt(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_canfilt"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("spawn canfilt");
    if let Some(input) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    child.wait_with_output().expect("wait for canfilt")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_pipe_canonical_gives_staircase_weights() {
    let algebra = canfilt(&["gen", "truncated-poly", "1", "5"], None);
    assert!(algebra.status.success());
    let result = canfilt(&["canonical", "-"], Some(&stdout_of(&algebra)));
    assert!(result.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&result)).unwrap();
    let weights: Vec<&str> = json["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(weights, vec!["0", "1", "2", "3", "4"]);
    assert_eq!(json["certificate"]["kkt_ok"], serde_json::Value::Bool(true));
}

#[test]
fn semistable_and_exit_codes() {
    let m2 = stdout_of(&canfilt(&["gen", "full-matrix", "2"], None));
    let out = canfilt(&["semistable", "-"], Some(&m2));
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["semistable"], serde_json::Value::Bool(true));

    // A Lie table violating alternation: exit code 2 with the violation.
    let bad = r#"{"dim":3,"kind":"lie","labels":["a","b","c"],
                  "table":[[1,1,2,"1"]],"grading":null}"#;
    let out = canfilt(&["validate", "-"], Some(bad));
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("alternating fails at (1,1)"));

    // Malformed JSON: exit 1 with a position-annotated message.
    let out = canfilt(&["validate", "-"], Some("{\"dim\": 3,"));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line"), "error should carry a position: {err}");

    // Usage errors: exit 1.
    let out = canfilt(&["no-such-command"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let ut3 = stdout_of(&canfilt(&["gen", "block-triangular", "1,1,1"], None));
    let first = canfilt(&["canonical", "-", "--grouping", "blocks"], Some(&ut3));
    let second = canfilt(&["canonical", "-", "--grouping", "blocks"], Some(&ut3));
    assert!(first.status.success());
    assert_eq!(stdout_of(&first), stdout_of(&second));

    let g1 = stdout_of(&canfilt(&["gen", "sl-nilpotent", "3"], None));
    let g2 = stdout_of(&canfilt(&["gen", "sl-nilpotent", "3"], None));
    assert_eq!(g1, g2);
}

#[test]
fn nu_gr_certify_and_structure_flow() {
    let chain = stdout_of(&canfilt(&["gen", "truncated-poly", "1", "4"], None));
    let dir = std::env::temp_dir().join(format!("canfilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let apath = dir.join("chain4.json");
    std::fs::write(&apath, &chain).unwrap();
    let fpath = dir.join("filt.json");
    std::fs::write(&fpath, r#"{"weights":["0","1","2","3"]}"#).unwrap();
    let apath = apath.to_str().unwrap();
    let fpath = fpath.to_str().unwrap();

    let out = canfilt(&["nu", apath, fpath], None);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["wt"], "6");
    assert_eq!(json["norm_sq"], "14");
    assert_eq!(json["nu_sign"], -1);
    assert_eq!(json["nu_squared"], "18/7");

    let out = canfilt(&["certify", apath, fpath], None);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["certified"], serde_json::Value::Bool(true));
    assert_eq!(json["path"], "cone-kkt");

    // Gr along the canonical weights is the algebra itself, regraded.
    let out = canfilt(&["gr", apath, fpath], None);
    assert!(out.status.success());
    let gr = stdout_of(&out);
    let out = canfilt(&["graded-ss", "-"], Some(&gr));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["graded_semistable"], serde_json::Value::Bool(true));

    let out = canfilt(&["gr-structure", "-"], Some(&gr));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["all"], serde_json::Value::Bool(true));

    let out = canfilt(&["radical", apath], None);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["dim"], 3);

    let out = canfilt(&["oracle", apath], None);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["certificate"]["kkt_ok"], serde_json::Value::Bool(true));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn oracle_row_bound_is_configurable() {
    let ut6 = stdout_of(&canfilt(&["gen", "block-triangular", "1,1,1,1,1,1"], None));
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_canfilt"));
    cmd.args(["oracle", "-", "--grouping", "blocks"])
        .env("CANFILT_MAX_ORACLE_ROWS", "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(ut6.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle bound"));
}

#[test]
fn ungraded_input_falls_back_to_the_lattice_grading() {
    // The two-dimensional non-abelian Lie algebra [x,y] = y admits the
    // separating grading deg(x) = 0, deg(y) = 1 even when the file
    // carries none; auto mode derives it and finds weights (0, 1).
    let aff = r#"{"dim":2,"kind":"lie","labels":["x","y"],
                  "table":[[0,1,1,"1"]],"grading":null}"#;
    let out = canfilt(&["canonical", "-"], Some(aff));
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let weights: Vec<&str> = json["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(weights, vec!["0", "1"]);

    // An ungraded semisimple table resolves through the radical check.
    let sl2 = r#"{"dim":3,"kind":"lie","labels":["e","f","h"],
                  "table":[[0,1,2,"1"],[2,0,0,"2"],[2,1,1,"-2"]],
                  "grading":null}"#;
    let out = canfilt(&["canonical", "-"], Some(sl2));
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["method"], "semistable");
}
