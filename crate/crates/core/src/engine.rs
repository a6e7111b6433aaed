//! One-round parallel query evaluation.
//!
//! A pipeline writes down every yes/no question it could need, hands the
//! whole batch over at once, and decides from the answer vector with
//! polynomial post-processing. No query depends on another's answer.
//!
//! Queries are self-contained text (kind + payload) so that batches can be
//! written out, replayed and audited:
//!
//! ```text
//! q score_at_most <k> <candidate> <names,comma,separated> <ranking;ranking;...>
//! q alpha_geq <k> <n> <u-v,u-v,...>
//! q mdg_geq <s> <n> <u-v,u-v,...>
//! a 1
//! a 0
//! a error <message>
//! ```
//!
//! Rankings are comma-separated names, most preferred first; graph
//! vertices are 1-based and `-` stands for an empty edge list.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::budget::StateBudget;
use crate::dodgson::score_at_most;
use crate::election::{CandidateId, Election};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::mdg_geq;
use crate::mis::alpha_geq;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueryKind {
    ScoreAtMost,
    AlphaGeq,
    MdgGeq,
}

impl fmt::Display for QueryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QueryKind::ScoreAtMost => "score_at_most",
            QueryKind::AlphaGeq => "alpha_geq",
            QueryKind::MdgGeq => "mdg_geq",
        })
    }
}

impl FromStr for QueryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "score_at_most" => Ok(QueryKind::ScoreAtMost),
            "alpha_geq" => Ok(QueryKind::AlphaGeq),
            "mdg_geq" => Ok(QueryKind::MdgGeq),
            _ => Err(Error::InvalidArguments(format!("unknown query kind {s:?}"))),
        }
    }
}

/// One yes/no question. The payload is only decoded at evaluation time, so
/// a malformed payload fails that query alone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Query {
    pub kind: QueryKind,
    pub payload: String,
}

fn encode_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    let edges = if edges.is_empty() { "-".to_string() } else { edges.join(",") };
    format!("{} {edges}", g.n())
}

fn decode_graph(n: &str, edges: &str) -> Result<Graph> {
    let bad = |what: &str| Error::InvalidArguments(format!("malformed graph payload: {what}"));
    let n: usize = n.parse().map_err(|_| bad("vertex count"))?;
    let mut g = Graph::new(n);
    if edges != "-" {
        for e in edges.split(',') {
            let (u, v) = e.split_once('-').ok_or_else(|| bad(e))?;
            let u: usize = u.parse().map_err(|_| bad(e))?;
            let v: usize = v.parse().map_err(|_| bad(e))?;
            if u == 0 || v == 0 {
                return Err(bad(e));
            }
            g.add_edge(u - 1, v - 1)?;
        }
    }
    Ok(g)
}

impl Query {
    /// Is `c`'s Dodgson score at most `k`?
    pub fn score_at_most(e: &Election, c: CandidateId, k: usize) -> Query {
        let names: Vec<&str> = e.candidates().iter().map(|x| x.name.as_str()).collect();
        let rankings: Vec<String> = e
            .voters()
            .iter()
            .map(|v| {
                v.ranking()
                    .iter()
                    .map(|&x| e.name(x))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        Query {
            kind: QueryKind::ScoreAtMost,
            payload: format!("{k} {} {} {}", e.name(c), names.join(","), rankings.join(";")),
        }
    }

    /// Is `α(g) >= k`?
    pub fn alpha_geq(g: &Graph, k: usize) -> Query {
        Query {
            kind: QueryKind::AlphaGeq,
            payload: format!("{k} {}", encode_graph(g)),
        }
    }

    /// Does some greedy run on `g` pick at least `s` vertices?
    pub fn mdg_geq(g: &Graph, s: usize) -> Query {
        Query {
            kind: QueryKind::MdgGeq,
            payload: format!("{s} {}", encode_graph(g)),
        }
    }

    /// Decodes the payload and answers the question exactly.
    pub fn evaluate(&self, budget: StateBudget) -> Result<bool> {
        let tokens: Vec<&str> = self.payload.split_whitespace().collect();
        let bad = || Error::InvalidArguments(format!("malformed {} payload", self.kind));
        let threshold: usize = tokens.first().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        match self.kind {
            QueryKind::ScoreAtMost => {
                let [_, cand, names, rankings] = tokens[..] else {
                    return Err(bad());
                };
                let names: Vec<&str> = names.split(',').collect();
                let rankings: Vec<Vec<&str>> =
                    rankings.split(';').map(|r| r.split(',').collect()).collect();
                let refs: Vec<&[&str]> = rankings.iter().map(Vec::as_slice).collect();
                let e = Election::from_names(&names, &refs)?;
                let c = e
                    .candidate_id(cand)
                    .ok_or_else(|| Error::InvalidArguments(format!("unknown candidate {cand}")))?;
                score_at_most(&e, c, threshold)
            }
            QueryKind::AlphaGeq | QueryKind::MdgGeq => {
                let [_, n, edges] = tokens[..] else {
                    return Err(bad());
                };
                let g = decode_graph(n, edges)?;
                if self.kind == QueryKind::AlphaGeq {
                    Ok(alpha_geq(&g, threshold))
                } else {
                    mdg_geq(&g, threshold, budget)
                }
            }
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q {} {}", self.kind, self.payload)
    }
}

/// One round of queries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryBatch {
    pub queries: Vec<Query>,
}

impl QueryBatch {
    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.queries.iter().map(|q| format!("{q}\n")).collect()
    }

    /// Parses `q <kind> <payload>` lines. Payloads are not validated here.
    pub fn parse(text: &str) -> Result<QueryBatch> {
        let mut queries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rest = line
                .strip_prefix("q ")
                .ok_or_else(|| Error::parse(idx + 1, "expected `q <kind> <payload>`"))?;
            let (kind, payload) = rest.trim().split_once(' ').unwrap_or((rest.trim(), ""));
            let kind = kind.parse().map_err(|e: Error| Error::parse(idx + 1, e.to_string()))?;
            queries.push(Query {
                kind,
                payload: payload.trim().to_string(),
            });
        }
        Ok(QueryBatch { queries })
    }
}

/// Answers aligned with the queries of a batch.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnswerVector {
    pub answers: Vec<Result<bool>>,
}

impl AnswerVector {
    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }

    /// The answers as plain booleans, or the first per-query error.
    pub fn bits(&self) -> Result<Vec<bool>> {
        self.answers.iter().cloned().collect()
    }

    pub fn to_text(&self) -> String {
        self.answers
            .iter()
            .map(|a| match a {
                Ok(true) => "a 1\n".to_string(),
                Ok(false) => "a 0\n".to_string(),
                Err(e) => format!("a error {e}\n"),
            })
            .collect()
    }
}

/// Answers every query of `batch` independently (in parallel).
pub fn evaluate_batch(batch: &QueryBatch, budget: StateBudget) -> AnswerVector {
    AnswerVector {
        answers: batch.queries.par_iter().map(|q| q.evaluate(budget)).collect(),
    }
}

/// Something that answers one batch of queries.
pub trait QueryOracle {
    fn answer(&self, batch: &QueryBatch) -> AnswerVector;
}

/// Answers queries with the exact solvers.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactOracle {
    pub budget: StateBudget,
}

impl QueryOracle for ExactOracle {
    fn answer(&self, batch: &QueryBatch) -> AnswerVector {
        evaluate_batch(batch, self.budget)
    }
}

/// Reads each candidate's score off a row of `score <= k` answers,
/// `k = 0, 1, ...`: the score is the first `k` answered yes.
pub fn scores_from_answers(rows: &[Vec<bool>]) -> Result<Vec<usize>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let first = row.iter().position(|&b| b).ok_or_else(|| {
                Error::Integrity(format!("row {i} never answers yes"))
            })?;
            if row[first..].iter().any(|&b| !b) {
                return Err(Error::Integrity(format!("row {i} is not monotone")));
            }
            Ok(first)
        })
        .collect()
}

/// Decides whether `c` is a Dodgson winner from a single batch of
/// `m * (max_score + 1)` threshold queries.
pub fn carroll_winner_pipeline(e: &Election, c: CandidateId) -> Result<bool> {
    carroll_winner_pipeline_with(&ExactOracle::default(), e, c)
}

pub fn carroll_winner_pipeline_with<O: QueryOracle + ?Sized>(
    oracle: &O,
    e: &Election,
    c: CandidateId,
) -> Result<bool> {
    if c >= e.m() {
        return Err(Error::OutOfRange(format!("candidate {c} of {}", e.m())));
    }
    let width = e.max_score() + 1;
    let batch = QueryBatch {
        queries: (0..e.m())
            .flat_map(|d| (0..width).map(move |k| (d, k)))
            .map(|(d, k)| Query::score_at_most(e, d, k))
            .collect(),
    };
    let bits = checked_answers(oracle, &batch)?;
    let rows: Vec<Vec<bool>> = bits.chunks(width).map(<[bool]>::to_vec).collect();
    let scores = scores_from_answers(&rows)?;
    Ok(scores.iter().all(|&s| s >= scores[c]))
}

/// Decides `g ∈ S_r` from a single batch: `α(g) >= k` for every `k` in
/// `1..=n`, and `mdg(g) >= ceil(k/r)` for the same `k`. `g` is outside
/// `S_r` iff some `k` has a yes to the first and a no to the second (the
/// coNP side is read off by negating the answer).
pub fn sr_pipeline(g: &Graph, r: Rational) -> Result<bool> {
    sr_pipeline_with(&ExactOracle::default(), g, r)
}

pub fn sr_pipeline_with<O: QueryOracle + ?Sized>(
    oracle: &O,
    g: &Graph,
    r: Rational,
) -> Result<bool> {
    let n = g.n();
    // mdg < k/r  <=>  mdg * num < k * den  <=>  not (mdg >= ceil(k * den / num))
    let greedy_threshold = |k: usize| (k as u128 * r.den() as u128).div_ceil(r.num() as u128) as usize;
    let mut queries: Vec<Query> = (1..=n).map(|k| Query::alpha_geq(g, k)).collect();
    queries.extend((1..=n).map(|k| Query::mdg_geq(g, greedy_threshold(k))));
    let bits = checked_answers(oracle, &QueryBatch { queries })?;
    let (alpha_rows, greedy_rows) = bits.split_at(n);
    let outside = (0..n).any(|i| alpha_rows[i] && !greedy_rows[i]);
    Ok(!outside)
}

fn checked_answers<O: QueryOracle + ?Sized>(oracle: &O, batch: &QueryBatch) -> Result<Vec<bool>> {
    let answers = oracle.answer(batch);
    if answers.len() != batch.len() {
        return Err(Error::Integrity(format!(
            "{} answers for {} queries",
            answers.len(),
            batch.len()
        )));
    }
    answers.bits()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dodgson::is_carroll_winner;
    use crate::fixtures;
    use std::cell::Cell;

    struct Counting {
        calls: Cell<usize>,
    }

    impl QueryOracle for Counting {
        fn answer(&self, batch: &QueryBatch) -> AnswerVector {
            self.calls.set(self.calls.get() + 1);
            evaluate_batch(batch, StateBudget::default())
        }
    }

    #[test]
    fn empty_batch() {
        let answers = evaluate_batch(&QueryBatch::default(), StateBudget::default());
        assert!(answers.is_empty());
    }

    #[test]
    fn score_threshold_batch() {
        let e = fixtures::four_voter();
        let c = e.candidate_id("C").unwrap();
        let batch = QueryBatch {
            queries: (0..4).map(|k| Query::score_at_most(&e, c, k)).collect(),
        };
        let bits = evaluate_batch(&batch, StateBudget::default()).bits().unwrap();
        assert_eq!(bits, vec![false, false, false, true]);
    }

    #[test]
    fn alpha_batch() {
        let k3 = Graph::complete(3);
        let batch = QueryBatch {
            queries: vec![Query::alpha_geq(&k3, 1), Query::alpha_geq(&k3, 2)],
        };
        assert_eq!(
            evaluate_batch(&batch, StateBudget::default()).bits().unwrap(),
            vec![true, false]
        );
    }

    #[test]
    fn malformed_payload_fails_alone() {
        let batch = QueryBatch::parse(
            "q alpha_geq 1 3 1-2,2-3\nq alpha_geq x\nq mdg_geq 2 2 1-1\nq score_at_most 0 Z A,B A,B\nq mdg_geq 2 2 -\n",
        )
        .unwrap();
        let answers = evaluate_batch(&batch, StateBudget::default());
        assert_eq!(answers.answers[0], Ok(true));
        assert!(answers.answers[1].is_err());
        assert!(answers.answers[2].is_err());
        assert!(answers.answers[3].is_err());
        assert_eq!(answers.answers[4], Ok(true));
        assert!(answers.to_text().contains("a error"));
        assert!(QueryBatch::parse("x alpha_geq 1").is_err());
        assert!(QueryBatch::parse("q nope 1").is_err());
    }

    #[test]
    fn batch_text_round_trip() {
        let e = fixtures::four_voter();
        let g = Graph::cycle(5);
        let batch = QueryBatch {
            queries: vec![
                Query::score_at_most(&e, 0, 2),
                Query::alpha_geq(&g, 2),
                Query::mdg_geq(&Graph::new(2), 1),
            ],
        };
        let parsed = QueryBatch::parse(&batch.to_text()).unwrap();
        assert_eq!(parsed, batch);
        assert_eq!(
            evaluate_batch(&parsed, StateBudget::default()).to_text(),
            "a 0\na 1\na 1\n"
        );
    }

    #[test]
    fn scores_from_rows() {
        assert_eq!(scores_from_answers(&[vec![true, true]]).unwrap(), vec![0]);
        assert_eq!(scores_from_answers(&[vec![false, false, true]]).unwrap(), vec![2]);
        assert!(matches!(
            scores_from_answers(&[vec![false, true, false]]),
            Err(Error::Integrity(_))
        ));
        assert!(matches!(scores_from_answers(&[vec![false]]), Err(Error::Integrity(_))));
    }

    #[test]
    fn four_voter_rows() {
        let e = fixtures::four_voter();
        let width = e.max_score() + 1;
        let rows: Vec<Vec<bool>> = ["P", "C", "D"]
            .iter()
            .map(|n| {
                let c = e.candidate_id(n).unwrap();
                (0..width)
                    .map(|k| Query::score_at_most(&e, c, k).evaluate(StateBudget::default()).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(scores_from_answers(&rows).unwrap(), vec![0, 3, 3]);
    }

    #[test]
    fn carroll_pipeline_single_round() {
        let e = fixtures::four_voter();
        for (name, expected) in [("P", true), ("C", false), ("D", false)] {
            let oracle = Counting { calls: Cell::new(0) };
            let c = e.candidate_id(name).unwrap();
            assert_eq!(carroll_winner_pipeline_with(&oracle, &e, c).unwrap(), expected);
            assert_eq!(expected, is_carroll_winner(&e, c).unwrap());
            assert_eq!(oracle.calls.get(), 1);
        }
        let solo = Election::from_names(&["x"], &[&["x"]]).unwrap();
        assert!(carroll_winner_pipeline(&solo, 0).unwrap());
    }

    #[test]
    fn sr_pipeline_examples() {
        let oracle = Counting { calls: Cell::new(0) };
        assert!(sr_pipeline_with(&oracle, &Graph::complete(4), Rational::ONE).unwrap());
        assert_eq!(oracle.calls.get(), 1);
        let gap = fixtures::smallest_greedy_gap();
        assert!(!sr_pipeline(&gap, Rational::ONE).unwrap());
        assert!(sr_pipeline(&gap, Rational::new(3, 2).unwrap()).unwrap());
        assert!(sr_pipeline(&Graph::edgeless(4), Rational::new(3, 2).unwrap()).unwrap());
        assert!(sr_pipeline(&Graph::new(0), Rational::ONE).unwrap());
    }

    #[test]
    fn shuffling_queries_permutes_answers() {
        let graphs = [Graph::cycle(5), Graph::star(3), Graph::complete(4)];
        let mut queries = Vec::new();
        for g in &graphs {
            for k in 0..5 {
                queries.push(Query::alpha_geq(g, k));
                queries.push(Query::mdg_geq(g, k));
            }
        }
        let forward = evaluate_batch(&QueryBatch { queries: queries.clone() }, StateBudget::default());
        queries.reverse();
        let mut backward = evaluate_batch(&QueryBatch { queries }, StateBudget::default());
        backward.answers.reverse();
        assert_eq!(forward, backward);
    }
}
