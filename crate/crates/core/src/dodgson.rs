//! Exact Dodgson (Carroll) scores.
//!
//! Only exchanges that move the target candidate upward can help it: swaps
//! between two other candidates leave every contest involving the target
//! unchanged, and lowering the target only loses head-to-head wins. A
//! solution is therefore a raise amount per voter, and the cost is their
//! sum. The search is a depth-first branch and bound over voters, bounded
//! below by the largest remaining single-rival deficit (one exchange passes
//! exactly one rival).

use rayon::prelude::*;

use crate::election::{CandidateId, Election, SwapStep};
use crate::error::{Error, Result};

/// A Dodgson score together with a realizing sequence of exchanges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreCertificate {
    pub candidate: CandidateId,
    pub score: usize,
    pub witness: Vec<SwapStep>,
}

impl ScoreCertificate {
    /// Replays the witness and checks that it makes the candidate a
    /// Condorcet winner in exactly `score` exchanges.
    pub fn verify(&self, e: &Election) -> Result<()> {
        if self.witness.len() != self.score {
            return Err(Error::Integrity(format!(
                "witness has {} exchanges for score {}",
                self.witness.len(),
                self.score
            )));
        }
        let end = self.replay(e)?;
        if end.condorcet_winner() != Some(self.candidate) {
            return Err(Error::Integrity(format!(
                "witness does not make {} a Condorcet winner",
                e.name(self.candidate)
            )));
        }
        Ok(())
    }

    /// The election after applying every exchange of the witness.
    pub fn replay(&self, e: &Election) -> Result<Election> {
        self.witness
            .iter()
            .try_fold(e.clone(), |acc, &step| acc.apply_swap(step))
    }
}

/// Per-voter view of the search problem.
struct RaiseProblem {
    /// For each voter, the rivals above the target, nearest first.
    above: Vec<Vec<CandidateId>>,
    /// Extra head-to-head wins needed against each candidate.
    deficit: Vec<usize>,
}

impl RaiseProblem {
    fn new(e: &Election, c: CandidateId) -> Self {
        let tally = e.pairwise_tally();
        let above = e
            .voters()
            .iter()
            .map(|v| {
                let pos = v.position(c);
                v.ranking()[..pos].iter().rev().copied().collect()
            })
            .collect();
        let deficit = (0..e.m())
            .map(|d| if d == c { 0 } else { tally.deficit(c, d) })
            .collect();
        RaiseProblem { above, deficit }
    }
}

struct Search<'p> {
    p: &'p RaiseProblem,
    /// suffix_supply[i][d]: voters at index >= i that rank d above the target.
    suffix_supply: Vec<Vec<usize>>,
    need: Vec<usize>,
    raises: Vec<usize>,
    /// Cost bound: only solutions strictly cheaper are accepted.
    limit: usize,
    best: Option<Vec<usize>>,
}

impl<'p> Search<'p> {
    fn new(p: &'p RaiseProblem, limit: usize) -> Self {
        let voters = p.above.len();
        let m = p.deficit.len();
        let mut suffix_supply = vec![vec![0; m]; voters + 1];
        for i in (0..voters).rev() {
            suffix_supply[i] = suffix_supply[i + 1].clone();
            for &d in &p.above[i] {
                suffix_supply[i][d] += 1;
            }
        }
        Search {
            p,
            suffix_supply,
            need: p.deficit.clone(),
            raises: vec![0; voters],
            limit,
            best: None,
        }
    }

    fn run(&mut self, voter: usize, cost: usize) {
        let max_need = self.need.iter().copied().max().unwrap_or(0);
        if max_need == 0 {
            // Feasible; remaining voters stay put.
            if cost < self.limit {
                self.limit = cost;
                let mut sol = self.raises.clone();
                sol[voter..].iter_mut().for_each(|t| *t = 0);
                self.best = Some(sol);
            }
            return;
        }
        if cost + max_need >= self.limit || voter == self.p.above.len() {
            return;
        }
        let supply = &self.suffix_supply[voter];
        if self.need.iter().zip(supply).any(|(n, s)| n > s) {
            return;
        }
        let passed = &self.p.above[voter];
        // Raising past a rival that is no longer needed is wasted: the
        // same raise minus that last exchange is cheaper and as good.
        let useful: Vec<usize> = (1..=passed.len())
            .filter(|&t| self.need[passed[t - 1]] > 0)
            .collect();
        // Larger raises first: they reach feasibility sooner and tighten the bound.
        for &t in useful.iter().rev() {
            let saved = self.need.clone();
            for &d in &passed[..t] {
                self.need[d] = self.need[d].saturating_sub(1);
            }
            self.raises[voter] = t;
            self.run(voter + 1, cost + t);
            self.raises[voter] = 0;
            self.need = saved;
        }
        self.run(voter + 1, cost);
    }
}

/// Cheapest per-voter raises costing strictly less than `limit`, if any.
fn cheapest_raises(e: &Election, c: CandidateId, limit: usize) -> Option<Vec<usize>> {
    let problem = RaiseProblem::new(e, c);
    let mut search = Search::new(&problem, limit);
    search.run(0, 0);
    search.best
}

fn witness_for(e: &Election, c: CandidateId, raises: &[usize]) -> Vec<SwapStep> {
    let mut steps = Vec::new();
    for (voter, &t) in raises.iter().enumerate() {
        let pos = e.voters()[voter].position(c);
        steps.extend((0..t).map(|i| SwapStep {
            voter,
            position: pos - i,
        }));
    }
    steps
}

/// Minimum number of adjacent exchanges that make `c` a Condorcet winner.
pub fn carroll_score(e: &Election, c: CandidateId) -> Result<ScoreCertificate> {
    e.check_candidate(c)?;
    let raises = cheapest_raises(e, c, e.max_score() + 1).ok_or_else(|| {
        Error::Integrity("raising to the top of every ranking must succeed".into())
    })?;
    let witness = witness_for(e, c, &raises);
    Ok(ScoreCertificate {
        candidate: c,
        score: witness.len(),
        witness,
    })
}

/// Whether `c` can be made a Condorcet winner with at most `k` exchanges.
pub fn score_at_most(e: &Election, c: CandidateId, k: usize) -> Result<bool> {
    e.check_candidate(c)?;
    Ok(cheapest_raises(e, c, k.saturating_add(1)).is_some())
}

/// Scores of all candidates, in id order. Candidates are scored in parallel.
pub fn all_scores(e: &Election) -> Result<Vec<usize>> {
    (0..e.m())
        .into_par_iter()
        .map(|c| carroll_score(e, c).map(|cert| cert.score))
        .collect()
}

/// `c` ties-or-defeats `d` when `d`'s score is not less than `c`'s.
pub fn ties_or_defeats(e: &Election, c: CandidateId, d: CandidateId) -> Result<bool> {
    e.check_candidate(c)?;
    e.check_candidate(d)?;
    if c == d {
        return Err(Error::InvalidArguments("a candidate cannot face itself".into()));
    }
    Ok(carroll_score(e, d)?.score >= carroll_score(e, c)?.score)
}

/// Whether `c` ties-or-defeats every other candidate.
pub fn is_carroll_winner(e: &Election, c: CandidateId) -> Result<bool> {
    e.check_candidate(c)?;
    let own = carroll_score(e, c)?.score;
    // Nobody can score below the target once the target is a Condorcet winner.
    if own == 0 {
        return Ok(true);
    }
    for d in (0..e.m()).filter(|&d| d != c) {
        if score_at_most(e, d, own - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidates with minimum score, ascending by id. Never empty.
pub fn all_winners(e: &Election) -> Result<Vec<CandidateId>> {
    let scores = all_scores(e)?;
    let min = *scores.iter().min().expect("at least one candidate");
    Ok((0..e.m()).filter(|&c| scores[c] == min).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, oracle};
    use proptest::prelude::*;

    fn ids(e: &Election) -> [CandidateId; 3] {
        ["C", "D", "P"].map(|n| e.candidate_id(n).unwrap())
    }

    #[test]
    fn four_voter_scores() {
        let e = fixtures::four_voter();
        let [c, d, p] = ids(&e);
        assert_eq!(carroll_score(&e, p).unwrap().score, 0);
        assert_eq!(carroll_score(&e, c).unwrap().score, 3);
        assert_eq!(carroll_score(&e, d).unwrap().score, 3);
        assert_eq!(all_scores(&e).unwrap(), vec![3, 3, 0]);
        for cand in [c, d, p] {
            carroll_score(&e, cand).unwrap().verify(&e).unwrap();
        }
    }

    #[test]
    fn thresholds() {
        let e = fixtures::four_voter();
        let [c, _, _] = ids(&e);
        assert!(!score_at_most(&e, c, 2).unwrap());
        assert!(score_at_most(&e, c, 3).unwrap());
        assert!(score_at_most(&e, c, e.max_score()).unwrap());
    }

    #[test]
    fn ties_and_winners() {
        let e = fixtures::four_voter();
        let [c, d, p] = ids(&e);
        assert!(ties_or_defeats(&e, c, d).unwrap());
        assert!(ties_or_defeats(&e, d, c).unwrap());
        assert!(ties_or_defeats(&e, p, c).unwrap());
        assert!(!ties_or_defeats(&e, c, p).unwrap());
        assert!(matches!(ties_or_defeats(&e, c, c), Err(Error::InvalidArguments(_))));
        assert!(is_carroll_winner(&e, p).unwrap());
        assert!(!is_carroll_winner(&e, c).unwrap());
        assert_eq!(all_winners(&e).unwrap(), vec![p]);
    }

    #[test]
    fn single_candidate_and_clones() {
        let solo = Election::from_names(&["x"], &[&["x"]]).unwrap();
        assert_eq!(carroll_score(&solo, 0).unwrap().score, 0);
        assert!(is_carroll_winner(&solo, 0).unwrap());
        assert_eq!(all_winners(&solo).unwrap(), vec![0]);

        let split = Election::from_names(&["A", "B"], &[&["A", "B"], &["B", "A"]]).unwrap();
        assert_eq!(all_scores(&split).unwrap(), vec![1, 1]);
        assert_eq!(all_winners(&split).unwrap(), vec![0, 1]);
        assert!(ties_or_defeats(&split, 0, 1).unwrap());
        assert!(ties_or_defeats(&split, 1, 0).unwrap());
    }

    #[test]
    fn cycle_has_positive_scores() {
        let e = fixtures::three_voter_cycle();
        let scores = all_scores(&e).unwrap();
        assert!(scores.iter().all(|&s| s > 0));
        let raw: Vec<Vec<usize>> = e.voters().iter().map(|v| v.ranking().to_vec()).collect();
        for (c, &score) in scores.iter().enumerate() {
            assert_eq!(score, oracle::bfs_carroll_score(&raw, 3, c));
        }
    }

    fn arb_election() -> impl Strategy<Value = Election> {
        (1usize..=4, 1usize..=5).prop_flat_map(|(m, n)| {
            let ranking = Just((0..m).collect::<Vec<_>>()).prop_shuffle();
            proptest::collection::vec(ranking, n).prop_map(move |rankings| {
                let names: Vec<String> = (0..m).map(|i| format!("c{i}")).collect();
                Election::new(names, rankings).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn zero_iff_condorcet_winner(e in arb_election()) {
            for c in 0..e.m() {
                let s = carroll_score(&e, c).unwrap();
                prop_assert_eq!(s.score == 0, e.condorcet_winner() == Some(c));
                prop_assert!(s.score <= e.max_score());
                s.verify(&e).unwrap();
            }
        }

        #[test]
        fn threshold_is_monotone(e in arb_election(), k in 0usize..8) {
            for c in 0..e.m() {
                if score_at_most(&e, c, k).unwrap() {
                    prop_assert!(score_at_most(&e, c, k + 1).unwrap());
                }
            }
        }

        #[test]
        fn renaming_invariance(
            e in arb_election(),
            seed in any::<u64>(),
        ) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..e.m()).collect();
            perm.shuffle(&mut rng);
            let mut vperm: Vec<usize> = (0..e.voter_count()).collect();
            vperm.shuffle(&mut rng);
            let f = e.relabeled(&perm, &vperm).unwrap();
            let before = all_scores(&e).unwrap();
            let after = all_scores(&f).unwrap();
            for c in 0..e.m() {
                prop_assert_eq!(before[c], after[perm[c]]);
            }
        }

        #[test]
        fn winners_are_argmin(e in arb_election()) {
            let scores = all_scores(&e).unwrap();
            let winners = all_winners(&e).unwrap();
            prop_assert!(!winners.is_empty());
            for c in 0..e.m() {
                prop_assert_eq!(winners.contains(&c), is_carroll_winner(&e, c).unwrap());
                prop_assert_eq!(winners.contains(&c), scores[c] == *scores.iter().min().unwrap());
            }
        }
    }
}
