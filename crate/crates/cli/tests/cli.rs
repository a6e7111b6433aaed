use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use dodgreed_core::format::parse_graph;
use dodgreed_core::reduction::PartMap;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn dodgreed(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dodgreed"))
        .args(args)
        .output()
        .expect("run binary");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn score_of_c_is_three() {
    let e = data("four_voter.txt");
    let (out, _, code) = dodgreed(&["election-score", "--election", path_str(&e), "--candidate", "C"]);
    assert_eq!((out.as_str(), code), ("score C = 3\n", 0));
}

#[test]
fn winner_and_condorcet() {
    let e = data("four_voter.txt");
    let (out, _, _) = dodgreed(&["election-winner", "--election", path_str(&e)]);
    assert_eq!(out, "winner = P\n");
    let (out, _, code) = dodgreed(&["election-winner", "--election", path_str(&e), "--candidate", "C"]);
    assert_eq!((out.as_str(), code), ("winner C = no\n", 0));
    let (out, _, _) = dodgreed(&["condorcet", "--election", path_str(&e)]);
    assert!(out.starts_with("condorcet = P\n"));
    let cyc = data("three_voter_cycle.txt");
    let (out, _, _) = dodgreed(&["condorcet", "--election", path_str(&cyc)]);
    assert_eq!(out, "condorcet = none\nmajority C > D\nmajority D > P\nmajority P > C\n");
}

#[test]
fn graph_verbs() {
    let k4 = data("k4.col");
    assert_eq!(dodgreed(&["graph-alpha", "--graph", path_str(&k4)]).0, "alpha = 1\n");
    assert_eq!(
        dodgreed(&["graph-sr", "--graph", path_str(&k4), "--r", "1"]).0,
        "in-S[1/1] = yes\n"
    );
    let gap = data("greedy_gap.col");
    let (out, _, code) = dodgreed(&["graph-sr", "--graph", path_str(&gap), "--r", "1/1"]);
    assert_eq!((out.as_str(), code), ("in-S[1/1] = no\n", 0));
    let (out, _, _) = dodgreed(&["graph-sr", "--graph", path_str(&gap), "--r", "6/4", "--pipeline"]);
    assert_eq!(out, "in-S[3/2] = yes\n");
    let (out, _, _) = dodgreed(&["graph-mdg", "--graph", path_str(&gap)]);
    assert!(out.starts_with("mdg = 2\ntrace = "));
}

#[test]
fn verify_reduction_passes_on_single_vertices() {
    let k1 = data("k1.col");
    let (out, _, code) = dodgreed(&[
        "verify-reduction",
        "--graph",
        path_str(&k1),
        "--graph2",
        path_str(&k1),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("alpha(Ghat) = 10\nmdg(Ghat) = 10\n"));
    assert!(out.ends_with("reduction: PASS\n"));
}

#[test]
fn unequal_pair_is_not_in_s1() {
    let (k1, two) = (data("k1.col"), data("two_isolated.col"));
    let (out, _, code) = dodgreed(&[
        "verify-reduction",
        "--graph",
        path_str(&k1),
        "--graph2",
        path_str(&two),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("alpha(Ghat) = 14\nmdg(Ghat) = 13\n"));
    assert!(out.contains("Ghat in S[1/1] = no\n"));
    assert!(out.ends_with("reduction: PASS\n"));
}

#[test]
fn emitted_artifact_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("ghat.col");
    let (k4, k1) = (data("k4.col"), data("k1.col"));
    let (out, _, code) = dodgreed(&[
        "reduce",
        "--graph",
        path_str(&k4),
        "--graph2",
        path_str(&k1),
        "--emit-artifact",
        path_str(&target),
    ]);
    assert_eq!(code, 0, "{out}");
    let ghat = parse_graph(&fs::read_to_string(&target).unwrap()).unwrap().graph;
    let map = PartMap::parse(&fs::read_to_string(dir.path().join("ghat.col.parts")).unwrap()).unwrap();
    map.check(&ghat).unwrap();
    assert!(out.contains(&format!("vertices = {}\n", ghat.n())));
}

#[test]
fn eval_batch_replays() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.txt");
    fs::write(&q, "q alpha_geq 1 3 1-2,2-3,1-3\nq alpha_geq 2 3 1-2,2-3,1-3\nq mdg_geq zz\n").unwrap();
    let (out, _, code) = dodgreed(&["eval-batch", "--queries", path_str(&q)]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..2], ["a 1", "a 0"]);
    assert!(lines[2].starts_with("a error"));
}

#[test]
fn errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.col");
    fs::write(&bad, "p 2 1\ne 1 1\n").unwrap();
    let (out, err, code) = dodgreed(&["graph-alpha", "--graph", path_str(&bad)]);
    assert!(out.is_empty());
    assert_ne!(code, 0);
    assert!(err.contains("line 2"), "{err}");

    let short = dir.path().join("short.txt");
    fs::write(&short, "A B C\nA C\n").unwrap();
    let (_, err, code) = dodgreed(&["election-score", "--election", path_str(&short)]);
    assert_ne!(code, 0);
    assert!(err.contains("line 2"), "{err}");

    let e = data("four_voter.txt");
    let (_, _, code) = dodgreed(&["election-score", "--election", path_str(&e), "--candidate", "Z"]);
    assert_ne!(code, 0);
    let k4 = data("k4.col");
    let (_, err, code) = dodgreed(&["graph-sr", "--graph", path_str(&k4), "--r", "1/2"]);
    assert_ne!(code, 0);
    assert!(err.contains("below 1"), "{err}");
    let (_, err, code) = dodgreed(&["graph-mdg", "--graph", path_str(&data("greedy_gap.col")), "--budget", "0"]);
    assert_ne!(code, 0);
    assert!(err.contains("resource limit"), "{err}");
}

#[test]
fn duplicate_edge_warns_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.col");
    fs::write(&dup, "p 2 2\ne 1 2\ne 2 1\n").unwrap();
    let (out, err, code) = dodgreed(&["graph-alpha", "--graph", path_str(&dup)]);
    assert_eq!((out.as_str(), code), ("alpha = 1\n", 0));
    assert!(err.contains("duplicate edge"));
}

#[test]
fn reports_are_byte_stable() {
    let (k4, k1) = (data("k4.col"), data("k1.col"));
    let args = ["verify-reduction", "--graph", path_str(&k4), "--graph2", path_str(&k1)];
    assert_eq!(dodgreed(&args), dodgreed(&args));
}
