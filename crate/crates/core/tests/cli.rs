//! End-to-end runs of the command-line front end.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use quadbundle::algebra_core::Field;
use quadbundle::cli::{run, Outcome};
use quadbundle::quadric_nets::NetOfQuadrics;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("quadbundle").chain(args.iter().copied()))
}

fn line<'a>(out: &'a Outcome, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(prefix.as_str()))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{}", out.stdout))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quadbundle-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn b3_file() -> PathBuf {
    let net = NetOfQuadrics::block_b3(Field::prime(7).unwrap());
    scratch("b3.json", &net.to_json().to_string())
}

#[test]
fn hilbert_expansion() {
    let out = cli(&["--order", "6", "hilbert", "--num", "1+4t+t^2", "--den", "1-3t+3t^2-t^3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "coefficients"), "1 7 19 37 61 91");
}

#[test]
fn analyze_block_net() {
    let file = b3_file();
    let out = cli(&["net", "analyze", "--file", file.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "discriminant"), "6*a0^2*a1^2*a2^2");
    assert!(line(&out, "smoothness_probe").contains("(1,0,0)"));
    assert!(line(&out, "base_points").starts_with("(1,0,0,0,0,0) "));
    assert!(out.stdout.contains("warning: "));
}

#[test]
fn structured_report_feeds_back_as_input() {
    let file = b3_file();
    let first = cli(&["--format", "structured", "net", "analyze", "--no-extension", "--file", file.to_str().unwrap()]);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let a: Value = serde_json::from_str(&first.stdout).unwrap();
    assert_eq!(a["command"], "net analyze");
    let again = scratch("report.json", &first.stdout);
    let second = cli(&["--format", "structured", "net", "analyze", "--no-extension", "--file", again.to_str().unwrap()]);
    let b: Value = serde_json::from_str(&second.stdout).unwrap();
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["inputs"], b["inputs"]);
}

#[test]
fn exit_codes_separate_domain_and_input_errors() {
    let file = b3_file();
    let f = file.to_str().unwrap();
    // (1,0,0,0,0,0) spans the kernel of the fiber over (0,1,0).
    let vertex = cli(&["net", "reduce", "--file", f, "--point", "1,0,0,0,0,0", "--at", "0,1,0"]);
    assert_eq!(vertex.code, 1);
    assert!(vertex.stderr.contains("vertex"));

    let bad_field = cli(&["--field", "GF(4)", "chern", "chi-k3", "--rho", "2", "--d", "2", "--c2", "4", "--n", "0"]);
    assert_eq!(bad_field.code, 2);

    let missing = cli(&["net", "analyze", "--file", "/nonexistent/net.json"]);
    assert_eq!(missing.code, 2);

    let asym = cli(&["clifford", "build", "--gram", "1,2;3,1"]);
    assert_eq!(asym.code, 1, "{}", asym.stderr);

    let unknown = cli(&["frobnicate"]);
    assert_eq!(unknown.code, 2);
}

#[test]
fn reduction_off_the_vertex() {
    let file = b3_file();
    let out = cli(&["net", "reduce", "--file", file.to_str().unwrap(), "--point", "2,0,0,0,0,0", "--at", "1,1,1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "fiber_rank"), "6");
    assert_eq!(line(&out, "reduced_rank"), "4");
    assert_eq!(line(&out, "randomized_complement_rank"), "4");
}

#[test]
fn chern_and_counting_commands() {
    let chi = cli(&["chern", "chi-k3", "--rho", "2", "--d", "2", "--c2", "4", "--n", "0"]);
    assert_eq!(line(&chi, "chi"), "0");

    let theta = cli(&["theta", "count", "--genus", "3"]);
    assert_eq!(line(&theta, "even"), "36");
    assert_eq!(line(&theta, "odd"), "28");

    let morita = cli(&["morita", "tensor", "--n", "3"]);
    assert_eq!(line(&morita, "dimension"), "1");
}

#[test]
fn split_form_ideals_agree_with_rulings() {
    let out = cli(&["--field", "GF(3)", "clifford", "ideals", "--gram", "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "planes"), "8");
    assert_eq!(line(&out, "component_classes"), "2");
    assert_eq!(line(&out, "partitions_agree"), "true");
}

#[test]
fn binary_exit_status_matches_library() {
    let status = Command::new(env!("CARGO_BIN_EXE_quadbundle"))
        .args(["theta", "count", "--degree", "0"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&status.stderr).contains("degree must be positive"));
}
