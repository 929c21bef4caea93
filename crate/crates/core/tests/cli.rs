//! End-to-end tests of the command line interface, including golden output
//! for the machine-readable format.

use std::process::{Command, Output};

fn tetra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetra"))
        .args(args)
        .output()
        .expect("spawn tetra")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_plain_and_records() {
    let out = tetra(&["eval", "[u0, u1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "u2*(-t)\n");

    let out = tetra(&["eval", "[u0, u1]", "--format", "records"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "u0\t0\nu1\t0\nu2\t-t\n");

    let out = tetra(&["eval", "[G_1, A_0]", "--context", "onsager", "--format", "records"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "v0\t0\nv1\t8*t\nv2\t8 - 8*t\n");
}

#[test]
fn eval_extension_context() {
    let out = tetra(&["eval", "X_01 + X_10", "--context", "extension", "--format", "records"]);
    assert!(out.status.success());
    // X~_01 + X~_10 = C_01 = (0, -1) in the residue chart
    assert_eq!(stdout(&out), "u0\t0\nu1\t0\nu2\t0\nK0\t0\nK1\t-1\n");

    let out = tetra(&["eval", "Y_01 + Y_10", "--context", "extension"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn decompose_golden() {
    let out = tetra(&["decompose", "u0 + u1*t + u2*(t'')", "--by", "grading", "--format", "records"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "g0\tu0*(1)\ng1\tu1*(t)\ng2\tu2*((-1) / ((t-1)))\n"
    );

    let out = tetra(&["decompose", "1/(t*(1-t))", "--by", "kbasis", "--format", "records"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\t1\nt'^1\t-1\nt''^1\t1\n");

    let out = tetra(&["decompose", "u1*(t + t') + u0", "--by", "omega", "--format", "records"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("omega\t"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn ideal_queries() {
    let out = tetra(&["ideal", "gen", "u0*(t-2)", "u1*((t-2)*(t-3))"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "I = (-2 + t)\n");

    let out = tetra(&["ideal", "member", "u0*(t*(t-2))", "--in", "t-2"]);
    assert_eq!(stdout(&out), "true\n");
    let out = tetra(&["ideal", "member", "u0*(t-3)", "--in", "t-2"]);
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn onsager_ideal_queries() {
    let out = tetra(&["onsager-ideal", "gen", "v0*(t-2)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "J = (-2 + t)\n");

    let ok = tetra(&[
        "onsager-ideal",
        "member",
        "v2*((t^2+1)*t) + v1*((t^2+1)*(t-1))",
        "--in",
        "J=t^2+1; typeII eta=1",
    ]);
    assert_eq!(stdout(&ok), "true\n");
    let no = tetra(&[
        "onsager-ideal",
        "member",
        "v2*((t^2+1)*t)",
        "--in",
        "J=t^2+1; typeII eta=1",
    ]);
    assert_eq!(stdout(&no), "false\n");
}

#[test]
fn act_applies_permutations() {
    let out = tetra(&["act", "(123)", "u0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "u1*(1)\n");

    let out = tetra(&["act", "(12)(30)", "X_02"]);
    let expect = tetra(&["eval", "X_31"]);
    assert_eq!(stdout(&out), stdout(&expect));

    let out = tetra(&["act", "bogus", "u0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_closed_ideals() {
    let out = tetra(&["census", "closed-ideals", "--J", "t^2+1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("closed ideals: 9"));
    // 16 type I + 3 type II + the summary line
    assert_eq!(text.lines().count(), 20);
    // every type II row carries the witness w2 t
    for line in text.lines().filter(|l| l.contains("typeII")) {
        assert!(line.contains("closed=no"));
        assert!(line.contains("witness=v2*(t + t^3)"));
    }
}

#[test]
fn verify_exit_codes_and_formats() {
    let out = tetra(&["verify", "tet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("verification: PASS (60/60"));

    let out = tetra(&["verify", "phi", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        assert!(line.ends_with("\tpass"));
    }
}

#[test]
fn parse_errors_exit_2() {
    let out = tetra(&["eval", "[u0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 3"));

    let out = tetra(&["eval", "w9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tetra(&["eval", "A_1"]); // loop context by default
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lifts_table_is_deterministic() {
    let a = tetra(&["lifts"]);
    let b = tetra(&["lifts"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 15); // 12 lifts + 3 charges
    assert!(text.contains("C_01\tK1*(-1)"));
    assert!(text.contains("C_02\tK0*(1)"));
}
