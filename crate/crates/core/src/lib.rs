//! Exact solvers and verification harnesses for Dodgson elections, the
//! minimum-degree greedy independent set heuristic, and the reduction from
//! independence-number equality to greedy optimality.

pub mod budget;
pub mod classes;
pub mod dodgson;
pub mod election;
pub mod engine;
pub mod fixtures;
pub mod format;
pub mod error;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod mis;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod selftest;

pub use budget::StateBudget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use greedy::{GreedyTrace, MdgOutcome, TieRule};
pub use rational::Rational;
pub use dodgson::ScoreCertificate;
pub use election::{Candidate, CandidateId, Election, PairwiseTally, PreferenceOrder, SwapStep};
