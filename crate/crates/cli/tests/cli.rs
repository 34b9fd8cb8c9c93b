use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tonnetz"))
        .args(args)
        .env_remove("TONNETZ_DEFAULT_COMMA")
        .output()
        .expect("run tonnetz")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&all)).expect("valid json")
}

#[test]
fn reduce_window() {
    assert_eq!(
        stdout(&["reduce", "[-3,2,1]"]).lines().next(),
        Some("s2 s3 s2")
    );
}

#[test]
fn path_between_chords() {
    let out = stdout(&["path", "C", "G"]);
    assert!(out.contains("RL"), "{out}");
}

#[test]
fn hexagon_of_c() {
    let out = stdout(&["hexagon", "C"]);
    for c in ["C", "Em", "E", "C#m", "A", "Am"] {
        assert!(
            out.split_whitespace().any(|w| w == c),
            "{c} missing in {out}"
        );
    }
}

#[test]
fn json_outputs_parse() {
    for args in [
        vec!["classify", "s2 s3 s2"],
        vec!["chord", "C#m"],
        vec!["hexagon", "C"],
        vec!["analyze", "C#m, E, A, D"],
        vec!["stripe", "C", "--kind", "hexatonic", "--count", "2"],
        vec!["riemann", "quotient", "(1,2,1)"],
    ] {
        let v = json(&args);
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn default_comma_override() {
    let forced = Command::new(env!("CARGO_BIN_EXE_tonnetz"))
        .args(["chord", "E", "--json"])
        .env("TONNETZ_DEFAULT_COMMA", "0")
        .output()
        .unwrap();
    assert!(forced.status.success());
    let a: serde_json::Value = serde_json::from_slice(&forced.stdout).unwrap();
    let b = json(&["chord", "E"]);
    assert_ne!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["reduce", "[x"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "[1,1,-2]"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_single_suite() {
    let out = stdout(&["verify", "--suite", "coxeter", "--radius", "3"]);
    assert!(out.contains("coxeter"), "{out}");
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("patch.svg");
    stdout(&[
        "render",
        "--center",
        "C",
        "--radius",
        "2",
        "--labels",
        "chords",
        "--out",
        path.to_str().unwrap(),
    ]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(">C</text>"));
}

#[test]
fn corollary_counts() {
    let v = json(&["corollary", "--radius", "6"]);
    let text = v.to_string();
    assert!(text.contains("64"), "{text}");
}

#[test]
fn parse_error_points_at_field() {
    let out = run(&["riemann", "comma", "(1,2,f)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 5"));
}
