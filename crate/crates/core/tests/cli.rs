use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn chi1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chi1")).args(args).output().expect("binary runs")
}

fn chi1_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chi1"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chi1_of_k4() {
    let o = chi1(&["chi1", &data("K4.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(r#"{"lower":2,"upper":2,"status":"Exact""#));
}

#[test]
fn bracketed_answers_exit_two() {
    let o = chi1_stdin(&["--budget", "0", "decide2", "-"], "F~~~w\n");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "unknown");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stdin_embedding_and_graph6_agree() {
    let emb = std::fs::read_to_string(data("octahedron.emb")).unwrap();
    let a = chi1_stdin(&["chi1", "-"], &emb);
    let from_file = chi1(&["chi1", &data("octahedron.emb")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, from_file.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["lower"], 2);
}

#[test]
fn printed_witnesses_pass_check_selection() {
    for file in ["K4.g6", "octahedron.emb", "icosahedron.emb"] {
        for cmd in ["chi1", "decide2"] {
            let o = chi1(&[cmd, &data(file)]);
            let v: Value = serde_json::from_slice(&o.stdout).unwrap();
            let edges = if cmd == "chi1" { &v["witness_edges"] } else { &v["selection"] };
            let check = chi1(&["check-selection", &data(file), &edges.to_string()]);
            assert_eq!(check.status.code(), Some(0), "{cmd} {file}");
            let c: Value = serde_json::from_slice(&check.stdout).unwrap();
            assert_eq!(c["selection"], true);
        }
    }
}

#[test]
fn check_selection_rejects_two_cycles() {
    let o = chi1(&["--format", "text", "check-selection", &data("K4.g6"), "0,1,2,3,4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a selection set"));
    let ok = chi1(&["--format", "text", "check-selection", &data("K4.g6"), "0,1,3"]);
    let text = stdout(&ok);
    assert!(text.lines().any(|l| l == "3 -> -"));
    assert!(text.lines().filter(|l| l.contains("-> (")).count() == 3);
}

#[test]
fn prop2_on_octahedron() {
    let o = chi1(&["prop2", &data("octahedron.emb")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["chi1"], 2);
    let colours = v["bipartition"].as_array().unwrap();
    assert_eq!(colours.len(), 6);
    let ico: Value = serde_json::from_slice(&chi1(&["prop2", &data("icosahedron.emb")]).stdout).unwrap();
    assert_eq!(ico["size"], 10);
    let tet: Value = serde_json::from_slice(&chi1(&["prop2", &data("tetrahedron.emb")]).stdout).unwrap();
    assert_eq!(tet["size"], 2);
}

#[test]
fn prop2_needs_a_triangulation() {
    let o = chi1(&["prop2", &data("cube.emb")]);
    assert_eq!(o.status.code(), Some(1));
    let o = chi1(&["prop2", &data("K4.g6")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dual_faces_and_minimalize() {
    let d = chi1(&["--format", "text", "dual", &data("octahedron.emb")]);
    assert!(stdout(&d).starts_with("8 12\n"));
    let f = chi1(&["faces", &data("cube.emb")]);
    let v: Value = serde_json::from_slice(&f.stdout).unwrap();
    assert_eq!(v["lengths"], serde_json::json!([4, 4, 4, 4, 4, 4]));
    let m = chi1(&["minimalize", &data("K4.g6"), "[0,1,3,5]"]);
    let v: Value = serde_json::from_slice(&m.stdout).unwrap();
    assert_eq!(v["minimal"].as_array().unwrap().len(), 2);
    let bad = chi1(&["minimalize", &data("K4.g6"), "[0]"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn gadget_outputs() {
    let fr = chi1(&["--format", "text", "gadget", "fragment"]);
    assert!(stdout(&fr).starts_with("18 24\n"));
    let ce = chi1(&["gadget", "counterexample", "--expansion", "1"]);
    let v: Value = serde_json::from_slice(&ce.stdout).unwrap();
    assert_eq!(v["star_vertices"], 360);
    let dot = chi1(&["--format", "dot", "gadget", "counterexample"]);
    assert!(stdout(&dot).starts_with("graph counterexample {"));
}

#[test]
fn verify_counterexample_reports_unknown_with_evidence() {
    let o = chi1(&["verify-counterexample", "--budget", "5000"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chi1_lower"], "unknown");
    assert_eq!(v["pigeonhole"]["passed"], true);
    assert!(!v["evidence"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(chi1(&["chi1", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(chi1_stdin(&["chi1", "-"], "3 3\n0: 0\n").status.code(), Some(1));
    assert_eq!(chi1(&["bogus"]).status.code(), Some(1));
    assert_eq!(chi1(&["dual", &data("K4.g6")]).status.code(), Some(1));
}
