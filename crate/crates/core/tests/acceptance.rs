//! Acceptance criteria, one test per criterion. Each prints a single
//! `[PASS]`/`[FAIL]` line (visible with `--nocapture`) and fails the test if
//! the check fails or overruns its time limit.

use dodgreed_core::selftest::{self, Outcome};

fn gate(outcome: Outcome) {
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
    assert!(outcome.within_limit(), "time limit exceeded: {}", outcome.line());
}

#[test]
fn criterion_1_golden_vectors() {
    gate(selftest::golden_vectors());
}

#[test]
fn criterion_2_score_oracle_equivalence() {
    gate(selftest::score_oracle_equivalence());
}

#[test]
fn criterion_3_greedy_oracle_equivalence() {
    gate(selftest::greedy_oracle_equivalence());
}

#[test]
fn criterion_4_sr_consistency() {
    gate(selftest::sr_consistency());
}

#[test]
fn criterion_5_trees_in_s1() {
    gate(selftest::trees_in_s1());
}

#[test]
fn criterion_6_transform_contract() {
    gate(selftest::transform_contract());
}

#[test]
fn criterion_7_reduction_equalities() {
    gate(selftest::reduction_equalities());
}

#[test]
fn criterion_8_pipeline_agreement() {
    gate(selftest::pipeline_agreement());
}

#[test]
fn criterion_9_witness_replay() {
    gate(selftest::witness_replay());
}
