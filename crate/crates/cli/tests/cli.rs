//! End-to-end runs of the `vfree` binary over temporary files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn vfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, content).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K34: &str = "b 3 4 12\n0 0\n0 1\n0 2\n0 3\n1 0\n1 1\n1 2\n1 3\n2 0\n2 1\n2 2\n2 3\n";

#[test]
fn solve_certificate_passes_verify() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", K34);
    let cert = dir.path().join("g.cert");

    let out = vfree(&["solve", "--in", s(&g), "--out", s(&cert), "--quiet"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&cert).unwrap();
    assert!(text.lines().any(|l| l.starts_with("edge ")));
    assert!(text.lines().any(|l| l.starts_with("link ")));

    let out = vfree(&["verify", "--in", s(&g), "--cert", s(&cert), "--required", "all"]);
    assert_eq!(code(&out), 0, "stdout: {}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_rejects_tampered_certificate() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", K34);
    // Two links through s0 and s1 share both centers.
    let cert = write(&dir, "bad.cert", "link 0 0 1\nlink 0 1 1\n");
    let out = vfree(&["verify", "--in", s(&g), "--cert", s(&cert)]);
    assert_eq!(code(&out), 1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("violation:"), "stdout: {stdout}");
}

#[test]
fn oracle_answers_no_on_a_forced_v_path() {
    let dir = TempDir::new().unwrap();
    // A single S-node with two required T-neighbours cannot avoid the V.
    let g = write(&dir, "star.txt", "b 1 2 2\n0 0\n0 1\n");
    let out = vfree(&["oracle", "--in", s(&g), "--required", "all", "--quiet"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn oracle_witness_passes_verify() {
    let dir = TempDir::new().unwrap();
    // Path t0 - s0 - t1 - s1 - t2: all of T is coverable V-freely.
    let g = write(&dir, "path.txt", "b 2 3 4\n0 0\n0 1\n1 1\n1 2\n");
    let wit = dir.path().join("path.wit");
    let out = vfree(&["oracle", "--in", s(&g), "--out", s(&wit), "--quiet"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let out = vfree(&["verify", "--in", s(&g), "--cert", s(&wit)]);
    assert_eq!(code(&out), 0, "stdout: {}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn oracle_reports_budget_exhaustion() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", K34);
    let out = vfree(&["oracle", "--in", s(&g), "--budget-edges", "1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn reduce3dm_writes_gadget_and_roles() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "m.txt", "3dm 1 3\n0 0 0\n0 0 0\n0 0 0\n");
    let g = dir.path().join("m.graph");
    let out = vfree(&["reduce3dm", "--in", s(&inst), "--out", s(&g), "--quiet"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("b 8 12 23\n"), "got: {}", text.lines().next().unwrap());
    let roles = fs::read_to_string(dir.path().join("m.graph.roles")).unwrap();
    assert!(roles.lines().any(|l| l == "3 t1 0"), "roles: {roles}");
}

#[test]
fn solve_output_verifies_against_the_degree3_set() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    let cert = dir.path().join("g.cert");
    let out = vfree(&["gen", "--kind", "liang", "--seed", "3", "--out", s(&g)]);
    assert_eq!(code(&out), 0);
    let out = vfree(&["solve", "--in", s(&g), "--out", s(&cert), "--quiet"]);
    assert_eq!(code(&out), 0);
    let out = vfree(&["verify", "--in", s(&g), "--cert", s(&cert), "--required", "deg3"]);
    assert_eq!(code(&out), 0, "stdout: {}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    let c = dir.path().join("c.txt");
    for (path, seed) in [(&a, "5"), (&b, "5"), (&c, "6")] {
        let out = vfree(&["gen", "--kind", "liang", "--seed", seed, "--out", s(path)]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn gen_rejects_infeasible_no_instances() {
    // Every 3-regular instance with part size 2 has a perfect matching.
    let out = vfree(&["gen", "--kind", "3dm-no", "--part", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn extmatch_takes_a_single_triple_whole() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.txt", "h 3 1\n3 0 1 2\n");
    let out = vfree(&["extmatch", "--in", s(&h), "--perfect", "--quiet"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "hyperedge 0\n");
}

#[test]
fn extmatch_certificate_passes_verify() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.txt");
    let cert = dir.path().join("h.cert");
    let out = vfree(&[
        "gen", "--kind", "hypergraph", "--nodes", "12", "--arity", "3", "--degree", "4",
        "--seed", "1", "--out", s(&h),
    ]);
    assert_eq!(code(&out), 0);
    let out = vfree(&["extmatch", "--in", s(&h), "--perfect", "--out", s(&cert), "--quiet"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let out = vfree(&["verify", "--in", s(&h), "--cert", s(&cert), "--required", "all"]);
    assert_eq!(code(&out), 0, "stdout: {}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn missing_input_is_an_input_error() {
    let out = vfree(&["solve", "--in", "/nonexistent/g.txt"]);
    assert_eq!(code(&out), 2);
}
