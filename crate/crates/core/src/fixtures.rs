//! Small named instances shared by tests, the self-test and the benchmarks.

use crate::election::Election;
use crate::graph::Graph;

/// Three voters whose pairwise majorities cycle: C beats D, D beats P, P beats C.
pub fn three_voter_cycle() -> Election {
    Election::from_names(
        &["C", "D", "P"],
        &[&["P", "C", "D"], &["D", "P", "C"], &["C", "D", "P"]],
    )
    .expect("valid profile")
}

/// Four voters with Condorcet winner P; C and D both need three exchanges.
pub fn four_voter() -> Election {
    Election::from_names(
        &["C", "D", "P"],
        &[
            &["C", "P", "D"],
            &["P", "C", "D"],
            &["P", "D", "C"],
            &["D", "P", "C"],
        ],
    )
    .expect("valid profile")
}

/// The four-voter profile in the election text format.
pub const FOUR_VOTER_TEXT: &str = "\
# Condorcet winner P; C and D score 3
C D P
C P D
P C D
P D C
D P C
";

/// The first graph, ordered by vertex count and then edge mask, on which
/// the best greedy run is smaller than the independence number (α = 3,
/// mdg = 2).
pub fn smallest_greedy_gap() -> Graph {
    crate::generate::graph_from_mask(7, 59325)
}
