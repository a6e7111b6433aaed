//! Preference profiles and pairwise majority structure.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type CandidateId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub id: CandidateId,
    pub name: String,
}

/// A strict total order over all candidates, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferenceOrder {
    ranking: Vec<CandidateId>,
}

impl PreferenceOrder {
    pub fn ranking(&self) -> &[CandidateId] {
        &self.ranking
    }

    /// Position of `c`, `0` being the top.
    pub fn position(&self, c: CandidateId) -> usize {
        self.ranking
            .iter()
            .position(|&x| x == c)
            .expect("ranking covers every candidate")
    }

    pub fn prefers(&self, a: CandidateId, b: CandidateId) -> bool {
        self.position(a) < self.position(b)
    }
}

/// Candidates plus one strict ranking per voter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Election {
    candidates: Vec<Candidate>,
    voters: Vec<PreferenceOrder>,
}

impl Election {
    /// Builds an election from candidate names and rankings of candidate ids.
    pub fn new<S: Into<String>>(names: Vec<S>, rankings: Vec<Vec<CandidateId>>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidElection("no candidates".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidElection(format!("bad candidate name {name:?}")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidElection(format!("duplicate candidate {name}")));
            }
        }
        if rankings.is_empty() {
            return Err(Error::InvalidElection("no voters".into()));
        }
        let m = names.len();
        for (i, r) in rankings.iter().enumerate() {
            let mut hit = vec![false; m];
            let ok = r.len() == m && r.iter().all(|&c| c < m && !std::mem::replace(&mut hit[c], true));
            if !ok {
                return Err(Error::InvalidElection(format!(
                    "voter {i} does not rank every candidate exactly once"
                )));
            }
        }
        Ok(Election {
            candidates: names
                .into_iter()
                .enumerate()
                .map(|(id, name)| Candidate { id, name })
                .collect(),
            voters: rankings
                .into_iter()
                .map(|ranking| PreferenceOrder { ranking })
                .collect(),
        })
    }

    /// Convenience constructor from rankings of names.
    pub fn from_names(names: &[&str], rankings: &[&[&str]]) -> Result<Self> {
        let ids = rankings
            .iter()
            .map(|r| {
                r.iter()
                    .map(|name| {
                        names.iter().position(|n| n == name).ok_or_else(|| {
                            Error::InvalidElection(format!("unknown candidate {name}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Election::new(names.to_vec(), ids)
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn voters(&self) -> &[PreferenceOrder] {
        &self.voters
    }

    /// Number of candidates `m`.
    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    pub fn voter_count(&self) -> usize {
        self.voters.len()
    }

    pub fn name(&self, c: CandidateId) -> &str {
        &self.candidates[c].name
    }

    pub fn candidate_id(&self, name: &str) -> Option<CandidateId> {
        self.candidates.iter().position(|c| c.name == name)
    }

    pub(crate) fn check_candidate(&self, c: CandidateId) -> Result<()> {
        if c < self.m() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("candidate {c} of {}", self.m())))
        }
    }

    /// `|voters| * (m - 1)`: raising any candidate to the top of every
    /// ranking costs at most this much, so no score exceeds it.
    pub fn max_score(&self) -> usize {
        self.voter_count() * (self.m() - 1)
    }

    pub fn pairwise_tally(&self) -> PairwiseTally {
        let m = self.m();
        let mut counts = vec![vec![0usize; m]; m];
        for v in &self.voters {
            for (i, &a) in v.ranking.iter().enumerate() {
                for &b in &v.ranking[i + 1..] {
                    counts[a][b] += 1;
                }
            }
        }
        PairwiseTally {
            voters: self.voter_count(),
            counts,
        }
    }

    /// Strict majority: `2 * N[a][b] > |voters|`.
    pub fn defeats(&self, a: CandidateId, b: CandidateId) -> Result<bool> {
        self.check_candidate(a)?;
        self.check_candidate(b)?;
        if a == b {
            return Err(Error::InvalidArguments("a candidate cannot face itself".into()));
        }
        Ok(self.pairwise_tally().defeats(a, b))
    }

    pub fn condorcet_winner(&self) -> Option<CandidateId> {
        let tally = self.pairwise_tally();
        (0..self.m()).find(|&c| tally.beats_all(c))
    }

    /// Every ordered pair `(a, b)` where `a` defeats `b`.
    pub fn majority_relation(&self) -> Vec<(CandidateId, CandidateId)> {
        let tally = self.pairwise_tally();
        let m = self.m();
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && tally.defeats(a, b))
            .collect()
    }

    /// Moves `c` up `steps` places in one voter's ranking.
    pub fn apply_raise(&self, c: CandidateId, voter: usize, steps: usize) -> Result<Election> {
        self.check_candidate(c)?;
        let order = self
            .voters
            .get(voter)
            .ok_or_else(|| Error::OutOfRange(format!("voter {voter} of {}", self.voter_count())))?;
        let pos = order.position(c);
        if steps > pos {
            return Err(Error::OutOfRange(format!(
                "cannot raise {} by {steps}: it sits at depth {pos} for voter {voter}",
                self.name(c)
            )));
        }
        let mut next = self.clone();
        next.voters[voter].ranking[pos - steps..=pos].rotate_right(1);
        Ok(next)
    }

    /// Exchanges the candidates at `position - 1` and `position` of one voter.
    pub fn apply_swap(&self, step: SwapStep) -> Result<Election> {
        let SwapStep { voter, position } = step;
        if voter >= self.voter_count() || position == 0 || position >= self.m() {
            return Err(Error::OutOfRange(format!(
                "swap at voter {voter}, position {position}"
            )));
        }
        let mut next = self.clone();
        next.voters[voter].ranking.swap(position - 1, position);
        Ok(next)
    }

    /// Renames candidate `c` to `perm[c]` and reorders voters so that voter
    /// `i` becomes voter `voter_perm[i]`.
    pub fn relabeled(&self, perm: &[CandidateId], voter_perm: &[usize]) -> Result<Election> {
        let m = self.m();
        let is_perm = |p: &[usize], k: usize| {
            let mut hit = vec![false; k];
            p.len() == k && p.iter().all(|&x| x < k && !std::mem::replace(&mut hit[x], true))
        };
        if !is_perm(perm, m) || !is_perm(voter_perm, self.voter_count()) {
            return Err(Error::InvalidArguments("not a permutation".into()));
        }
        let mut names = vec![String::new(); m];
        for c in &self.candidates {
            names[perm[c.id]] = c.name.clone();
        }
        let mut rankings = vec![Vec::new(); self.voter_count()];
        for (i, v) in self.voters.iter().enumerate() {
            rankings[voter_perm[i]] = v.ranking.iter().map(|&c| perm[c]).collect();
        }
        Election::new(names, rankings)
    }
}

/// One adjacent exchange: in `voter`'s ranking, the candidate at `position`
/// trades places with the one directly above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwapStep {
    pub voter: usize,
    pub position: usize,
}

/// `N[a][b]`: number of voters ranking `a` above `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseTally {
    voters: usize,
    counts: Vec<Vec<usize>>,
}

impl PairwiseTally {
    pub fn get(&self, a: CandidateId, b: CandidateId) -> usize {
        self.counts[a][b]
    }

    pub fn voters(&self) -> usize {
        self.voters
    }

    pub fn defeats(&self, a: CandidateId, b: CandidateId) -> bool {
        2 * self.counts[a][b] > self.voters
    }

    pub fn beats_all(&self, c: CandidateId) -> bool {
        (0..self.counts.len()).all(|d| d == c || self.defeats(c, d))
    }

    /// Additional head-to-head wins `c` needs against `d` to defeat it.
    pub fn deficit(&self, c: CandidateId, d: CandidateId) -> usize {
        (self.voters / 2 + 1).saturating_sub(self.counts[c][d])
    }
}
