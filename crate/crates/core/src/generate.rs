//! Graph families used by the exhaustive and sampled test corpora.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;

/// Number of vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes an edge mask: bit `i` selects the `i`-th pair `(u, v)`, `u < v`,
/// in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).expect("valid pair");
            }
            bit += 1;
        }
    }
    g
}

/// Every labelled graph on `n` vertices, in edge-mask order.
///
/// Panics for `n > 8`; the corpus is meant for exhaustive checks only.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pair_count(n);
    assert!(pairs <= 28, "exhaustive enumeration on {n} vertices is too large");
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask))
}

/// A random labelled graph with independent edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// One representative of every isomorphism class of trees on `n` vertices.
///
/// Grows trees leaf by leaf and deduplicates on a canonical encoding (the
/// smallest rooted AHU string over all roots).
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &layer {
            for parent in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((parent, size - 1));
                if seen.insert(tree_code(size, &grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|edges| Graph::from_edges(n, edges).expect("tree edges"))
        .collect()
}

fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n).map(|root| rooted_code(&adj, root, usize::MAX)).min().unwrap_or_default()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=9).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for t in free_trees(7) {
            assert_eq!(t.edge_count(), 6);
            assert_eq!(t.components_of(&t.vertices()).len(), 1);
        }
    }

    #[test]
    fn mask_decoding() {
        let g = graph_from_mask(3, 0b101);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(all_graphs(4).count(), 64);
    }
}
