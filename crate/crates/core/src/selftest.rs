//! The small-instance verification suites, one per acceptance criterion.
//!
//! Each suite compares the production solvers against the brute-force
//! oracles (or against the worked examples) and reports a single outcome.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::budget::StateBudget;
use crate::classes::{in_s_r, not_in_s_r_via_k};
use crate::dodgson::{all_scores, all_winners, carroll_score, is_carroll_winner, ties_or_defeats};
use crate::election::{Election, SwapStep};
use crate::engine::{
    carroll_winner_pipeline_with, evaluate_batch, sr_pipeline_with, AnswerVector, QueryBatch,
    QueryOracle,
};
use crate::error::Result;
use crate::fixtures;
use crate::generate::{all_graphs, free_trees, random_graph};
use crate::graph::Graph;
use crate::greedy::mdg_max;
use crate::mis::alpha;
use crate::oracle::{brute_alpha, bfs_carroll_score, naive_mdg};
use crate::rational::Rational;
use crate::reduction::{double_subdivision, verify_reduction};

/// Result of one suite.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    /// Wall-clock limit for the suite.
    pub limit: Duration,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {}: {} ({}; {:.2?} of {:?})",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed,
            self.limit
        )
    }
}

fn timed(
    id: u32,
    title: &'static str,
    limit_secs: u64,
    body: impl FnOnce() -> std::result::Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed,
        limit: Duration::from_secs(limit_secs),
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Every profile with `voters` voters over `m` candidates.
pub fn all_profiles(m: usize, voters: usize) -> Vec<Election> {
    let perms = permutations(m);
    let mut out = Vec::new();
    let mut idx = vec![0usize; voters];
    loop {
        let rankings = idx.iter().map(|&i| perms[i].clone()).collect();
        let names: Vec<String> = (0..m).map(|i| ((b'A' + i as u8) as char).to_string()).collect();
        out.push(Election::new(names, rankings).expect("valid profile"));
        let mut pos = 0;
        loop {
            if pos == voters {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Profiles of the score-oracle suite: `m <= 3` candidates, `1..=3` voters.
pub fn small_profiles() -> Vec<Election> {
    (1..=3)
        .flat_map(|m| (1..=3).flat_map(move |v| all_profiles(m, v)))
        .collect()
}

/// Graph corpus of the greedy suites: every labelled graph on at most six
/// vertices plus 200 seeded random graphs on seven.
pub fn greedy_corpus() -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(0x6d64_6737);
    let mut corpus: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
    corpus.extend((0..200).map(|_| random_graph(7, 0.5, &mut rng)));
    corpus.push(fixtures::smallest_greedy_gap());
    corpus
}

/// Pair corpus of the reduction suite: all pairs on at most three vertices
/// plus 50 seeded random pairs on at most four.
pub fn reduction_pairs() -> Vec<(Graph, Graph)> {
    let small: Vec<Graph> = (0..=3).flat_map(all_graphs).collect();
    let mut pairs: Vec<(Graph, Graph)> = small
        .iter()
        .flat_map(|g| small.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x7265_6475);
    for _ in 0..50 {
        let (ng, nh) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        pairs.push((random_graph(ng, 0.5, &mut rng), random_graph(nh, 0.5, &mut rng)));
    }
    pairs
}

pub fn radii() -> [Rational; 3] {
    [
        Rational::ONE,
        Rational::new(3, 2).expect("valid"),
        Rational::new(2, 1).expect("valid"),
    ]
}

/// Oracle wrapper that counts how many batches it is asked.
#[derive(Default)]
pub struct CountingOracle {
    pub budget: StateBudget,
    calls: AtomicUsize,
}

impl CountingOracle {
    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::SeqCst);
    }
}

impl QueryOracle for CountingOracle {
    fn answer(&self, batch: &QueryBatch) -> AnswerVector {
        self.calls.fetch_add(1, Ordering::SeqCst);
        evaluate_batch(batch, self.budget)
    }
}

pub fn golden_vectors() -> Outcome {
    timed(1, "worked election examples", 1, || {
        let e = fixtures::four_voter();
        let id = |n: &str| e.candidate_id(n).unwrap();
        let (c, d, p) = (id("C"), id("D"), id("P"));
        let scores = lift(all_scores(&e))?;
        ensure!(
            (scores[p], scores[c], scores[d]) == (0, 3, 3),
            "scores (P, C, D) = ({}, {}, {})",
            scores[p],
            scores[c],
            scores[d]
        );
        ensure!(e.condorcet_winner() == Some(p), "Condorcet winner is not P");
        ensure!(lift(all_winners(&e))? == vec![p], "winners are not {{P}}");
        ensure!(
            lift(ties_or_defeats(&e, c, d))? && lift(ties_or_defeats(&e, d, c))?,
            "C and D do not tie-or-defeat each other"
        );
        let cyc = fixtures::three_voter_cycle();
        let id = |n: &str| cyc.candidate_id(n).unwrap();
        ensure!(cyc.condorcet_winner().is_none(), "cycle has a Condorcet winner");
        let rel: BTreeSet<_> = cyc.majority_relation().into_iter().collect();
        let want: BTreeSet<_> = [(id("C"), id("D")), (id("P"), id("C")), (id("D"), id("P"))]
            .into_iter()
            .collect();
        ensure!(rel == want, "majority relation {rel:?}");
        Ok("scores (P, C, D) = (0, 3, 3); cycle C>D, P>C, D>P".into())
    })
}

pub fn score_oracle_equivalence() -> Outcome {
    timed(2, "Dodgson score equals full-swap BFS", 300, || {
        let profiles = small_profiles();
        let mut checked = 0;
        for e in &profiles {
            let raw: Vec<Vec<usize>> = e.voters().iter().map(|v| v.ranking().to_vec()).collect();
            for c in 0..e.m() {
                let cert = lift(carroll_score(e, c))?;
                lift(cert.verify(e))?;
                let bfs = bfs_carroll_score(&raw, e.m(), c);
                ensure!(cert.score == bfs, "score {} != bfs {bfs} on {e:?}, candidate {c}", cert.score);
                checked += 1;
            }
        }
        Ok(format!("{} profiles, {checked} scores", profiles.len()))
    })
}

pub fn greedy_oracle_equivalence() -> Outcome {
    timed(3, "mdg search equals naive tie enumeration", 600, || {
        let corpus = greedy_corpus();
        for g in &corpus {
            let out = lift(mdg_max(g, StateBudget::default()))?;
            let naive = naive_mdg(g);
            ensure!(out.value == naive, "mdg {} != naive {naive} on {g:?}", out.value);
            lift(out.trace.replay(g))?;
            ensure!(out.trace.len() == out.value, "trace length mismatch on {g:?}");
            let a = alpha(g);
            ensure!(a == brute_alpha(g), "alpha {a} != brute force on {g:?}");
            ensure!(out.value <= a, "mdg {} > alpha {a} on {g:?}", out.value);
        }
        Ok(format!("{} graphs", corpus.len()))
    })
}

pub fn sr_consistency() -> Outcome {
    timed(4, "S_r membership equals complement test; monotone in r", 600, || {
        let corpus = greedy_corpus();
        let rs = radii();
        let mut outside = [0usize; 3];
        for g in &corpus {
            let mut member = [false; 3];
            for (i, &r) in rs.iter().enumerate() {
                member[i] = lift(in_s_r(g, r, StateBudget::default()))?;
                let via_k = lift(not_in_s_r_via_k(g, r, StateBudget::default()))?;
                ensure!(member[i] != via_k, "complement test disagrees at r = {r} on {g:?}");
                outside[i] += usize::from(!member[i]);
            }
            ensure!(
                member.windows(2).all(|w| !w[0] || w[1]),
                "membership not monotone in r on {g:?}"
            );
        }
        Ok(format!(
            "{} graphs; outside S_1, S_3/2, S_2: {:?}",
            corpus.len(),
            outside
        ))
    })
}

pub fn trees_in_s1() -> Outcome {
    timed(5, "trees are greedy-optimal", 120, || {
        let mut count = 0;
        for n in 1..=9 {
            for t in free_trees(n) {
                let m = lift(mdg_max(&t, StateBudget::default()))?.value;
                let a = alpha(&t);
                ensure!(m == a, "tree {t:?}: mdg {m} != alpha {a}");
                count += 1;
            }
        }
        Ok(format!("{count} trees on 1..=9 vertices"))
    })
}

pub fn transform_contract() -> Outcome {
    timed(6, "double subdivision adds k to alpha and is greedy-optimal", 600, || {
        let mut count = 0;
        for n in 0..=6 {
            for g in all_graphs(n) {
                let t = double_subdivision(&g);
                let (a, at) = (alpha(&g), alpha(&t));
                ensure!(at == a + g.edge_count(), "alpha {at} != {a} + k on {g:?}");
                let m = lift(mdg_max(&t, StateBudget::default()))?.value;
                ensure!(m == at, "mdg {m} != alpha {at} after subdividing {g:?}");
                count += 1;
            }
        }
        Ok(format!("{count} graphs"))
    })
}

pub fn reduction_equalities() -> Outcome {
    let pairs = reduction_pairs();
    // 60 s per pair; the per-pair limit is also checked individually.
    timed(7, "reduction equalities and iff", 60 * pairs.len() as u64, || {
        let mut slowest = Duration::ZERO;
        let mut in_s1 = 0;
        for (g, h) in &pairs {
            let start = Instant::now();
            let report = lift(verify_reduction(g, h, StateBudget::default()))?;
            let took = start.elapsed();
            slowest = slowest.max(took);
            ensure!(took <= Duration::from_secs(60), "pair {g:?} / {h:?} took {took:?}");
            ensure!(report.passed(), "pair {g:?} / {h:?}:\n{}", report.to_text());
            in_s1 += usize::from(report.ghat_in_s1());
        }
        Ok(format!(
            "{} pairs, {in_s1} in S_1, slowest {slowest:.2?}",
            pairs.len()
        ))
    })
}

pub fn pipeline_agreement() -> Outcome {
    timed(8, "single-round pipelines agree with direct solvers", 600, || {
        let oracle = CountingOracle::default();
        let mut elections = vec![fixtures::four_voter(), fixtures::three_voter_cycle()];
        elections.extend(small_profiles());
        for e in &elections {
            for c in 0..e.m() {
                oracle.reset();
                let piped = lift(carroll_winner_pipeline_with(&oracle, e, c))?;
                ensure!(oracle.calls() == 1, "{} batches for {e:?}", oracle.calls());
                ensure!(
                    piped == lift(is_carroll_winner(e, c))?,
                    "winner pipeline disagrees on {e:?}, candidate {c}"
                );
            }
        }
        let mut graphs = greedy_corpus();
        graphs.extend((1..=9).flat_map(free_trees));
        for g in &graphs {
            for r in radii() {
                oracle.reset();
                let piped = lift(sr_pipeline_with(&oracle, g, r))?;
                ensure!(oracle.calls() == 1, "{} batches for {g:?}", oracle.calls());
                ensure!(
                    piped == lift(in_s_r(g, r, StateBudget::default()))?,
                    "S_r pipeline disagrees at r = {r} on {g:?}"
                );
            }
        }
        Ok(format!("{} elections, {} graphs", elections.len(), graphs.len()))
    })
}

pub fn witness_replay() -> Outcome {
    timed(9, "worked exchange sequence makes C a Condorcet winner", 1, || {
        let e = fixtures::four_voter();
        let c = e.candidate_id("C").unwrap();
        let raised = lift(e.apply_raise(c, 1, 1).and_then(|x| x.apply_raise(c, 3, 2)))?;
        ensure!(raised.condorcet_winner() == Some(c), "raises do not elect C");
        // Same exchanges as individual adjacent swaps.
        let steps = [
            SwapStep { voter: 1, position: 1 },
            SwapStep { voter: 3, position: 2 },
            SwapStep { voter: 3, position: 1 },
        ];
        let swapped = lift(steps.iter().try_fold(e.clone(), |acc, &s| acc.apply_swap(s)))?;
        ensure!(swapped == raised, "swap replay differs from raise replay");
        let cert = lift(carroll_score(&e, c))?;
        lift(cert.verify(&e))?;
        ensure!(cert.score == steps.len(), "solver score {} != 3", cert.score);
        Ok("3 exchanges".into())
    })
}

/// Runs every suite in criterion order.
pub fn run_all() -> Vec<Outcome> {
    vec![
        golden_vectors(),
        score_oracle_equivalence(),
        greedy_oracle_equivalence(),
        sr_consistency(),
        trees_in_s1(),
        transform_contract(),
        reduction_equalities(),
        pipeline_agreement(),
        witness_replay(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_enumeration_sizes() {
        assert_eq!(all_profiles(3, 3).len(), 216);
        assert_eq!(all_profiles(2, 3).len(), 8);
        assert_eq!(all_profiles(1, 2).len(), 1);
        let distinct: BTreeSet<String> = all_profiles(3, 2)
            .iter()
            .map(crate::format::format_election)
            .collect();
        assert_eq!(distinct.len(), 36);
    }

    #[test]
    fn quick_suites_pass() {
        for o in [golden_vectors(), witness_replay()] {
            assert!(o.ok(), "{}", o.line());
        }
    }
}
