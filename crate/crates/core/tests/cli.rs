use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_detects_kinds() {
    for (file, expect) in [
        ("e21.bg", "valid Brauer graph"),
        ("a3r.alg", "valid gentle algebra"),
        ("annulus.tri", "valid triangulation"),
    ] {
        let out = run(&["validate", &fixture(file)]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with(expect), "{file}: {}", stdout(&out));
    }
    let out = run(&["validate", &fixture("disconnected.alg")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not connected"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.alg", "vertex 1\narrow a 1 9\n");
    let out = run(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["convert", "--mode", "trivext", &fixture("e21.bg")]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "--max-edges", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 5"));
}

#[test]
fn bg_to_alg_gives_truncated_polynomial_ring() {
    let out = run(&["convert", "--mode", "bg-to-alg", &fixture("e21.bg")]);
    assert_eq!(stdout(&out), "vertex E1\narrow h1 E1 E1\nrel mono h1 h1 h1\n");
}

#[test]
fn trivext_of_a3_with_relation() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.alg");
    let out = run(&["convert", "--mode", "trivext", &fixture("a3r.alg"), "--out", t.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let out = run(&["validate", "--kind", "ssb", t.to_str().unwrap()]);
    assert!(stdout(&out).ends_with("dimension 10\n"), "{}", stdout(&out));
}

#[test]
fn triangulation_to_jacobian() {
    let out = run(&["convert", "--mode", "tri-to-jacobian", &fixture("annulus.tri")]);
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(&dir, "a.alg", &stdout(&out));
    let out = run(&["validate", &a]);
    assert_eq!(stdout(&out), "valid gentle algebra: 3 vertices, 3 arrows, dimension 7\n");
    // Under the other convention the arrows turn around.
    let out = run(&[
        "convert",
        "--mode",
        "tri-to-jacobian",
        "--arrow-convention",
        "predecessor",
        &fixture("annulus.tri"),
    ]);
    assert!(stdout(&out).contains("arrow 2.0 2 1\n"), "{}", stdout(&out));
}

#[test]
fn iso_reports_bijection_or_invariant() {
    let out = run(&["iso", "--kind", "bg", &fixture("line3.bg"), &fixture("line3_relabeled.bg")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("isomorphic\n"));
    assert!(stdout(&out).contains("half a0 -> "));

    let out = run(&["iso", "--kind", "bg", &fixture("line3.bg"), &fixture("star3.bg")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("valencies"));

    let out = run(&["iso", "--kind", "bg", &fixture("loop.bg"), &fixture("loop_mult2.bg")]);
    assert_eq!(stdout(&out), "not isomorphic: multiplicities [1] != [2]\n");

    let dir = tempfile::tempdir().unwrap();
    let e = write_temp(&dir, "e.alg", &stdout(&run(&["convert", "--mode", "bg-to-alg", &fixture("e21.bg")])));
    let l = write_temp(&dir, "l.alg", &stdout(&run(&["convert", "--mode", "bg-to-alg", &fixture("loop.bg")])));
    let out = run(&["iso", "--kind", "alg", &e, &l]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not isomorphic: dimension 3 != 4\n");
}

#[test]
fn trivext_matches_triangulation_graph_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_temp(&dir, "t.alg", &stdout(&run(&["convert", "--mode", "trivext", &fixture("annulus_jacobian.alg")])));
    let g = write_temp(&dir, "g.bg", &stdout(&run(&["convert", "--mode", "tri-to-bg", &fixture("annulus.tri")])));
    let l = write_temp(&dir, "l.alg", &stdout(&run(&["convert", "--mode", "bg-to-alg", &g])));
    let out = run(&["iso", "--kind", "alg", &t, &l]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn cuts_enumerate_and_verify() {
    let out = run(&["cuts", "--enumerate", "--verify", &fixture("line3.bg")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "cut a1,b2 ok\ncut a1,c2 ok\ncut b1,b2 ok\ncut b1,c2 ok\n4 cutting sets\n");

    let out = run(&["cuts", "--cut", "a1,b2", "--verify", &fixture("line3.bg")]);
    assert!(stdout(&out).ends_with("# roundtrip: ok\n"));

    let out = run(&["cuts", "--cut", "a1,b2", "--dot", &fixture("line3.bg")]);
    assert!(stdout(&out).contains("[label=\"a1\", style=dashed]"));

    let out = run(&["cuts", "--cut", "a1", &fixture("line3.bg")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_outputs() {
    let out = run(&["dot", &fixture("e21.bg")]);
    assert!(stdout(&out).contains("mult=2"));
    let out = run(&["dot", &fixture("annulus.tri")]);
    assert!(stdout(&out).contains("style=bold"));
    let out = run(&["convert", "--mode", "trivext", "--dot", &fixture("a2.alg")]);
    assert!(stdout(&out).contains("style=dashed"));
    assert!(stdout(&out).starts_with("digraph"));
}

#[test]
fn check_small_suites() {
    let out = run(&["check", "--suite", "thm-1-1", "--max-edges", "3", "--max-mult", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with(", 0 failures\n"));
    let out = run(&["check", "--suite", "thm-1-3", "--max-edges", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["check", "--suite", "lemma-2-1", "--max-vertices", "4"]);
    assert_eq!(out.status.code(), Some(0));
}
