//! Simple undirected graphs over dense vertex ids `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertices of one graph, stored as a bitset of width `n`.
pub type VertexSet = FixedBitSet;

/// An undirected simple graph. Adjacency is kept as one bitset per vertex so
/// that residual-graph searches can intersect neighbourhoods cheaply.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Parallel edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::OutOfRange(format!(
                "edge ({u}, {v}) on a graph with {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// The path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.insert_unchecked(u - 1, u);
        }
        g
    }

    /// The cycle on `n >= 3` vertices. Smaller `n` degrade to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert_unchecked(n - 1, 0);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.insert_unchecked(0, v);
        }
        g
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        if !self.adj[u].put(v) {
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Degree of `v` in the subgraph induced by `within`.
    #[inline]
    pub fn degree_in(&self, v: usize, within: &VertexSet) -> usize {
        self.adj[v].intersection_count(within)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn vertices(&self) -> VertexSet {
        let mut all = FixedBitSet::with_capacity(self.n());
        all.insert_range(..);
        all
    }

    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.ones().all(|v| self.adj[v].is_disjoint(set))
    }

    /// An independent set to which no further vertex can be added.
    pub fn is_maximal_independent(&self, set: &VertexSet) -> bool {
        self.is_independent(set)
            && (0..self.n()).all(|v| set.contains(v) || !self.adj[v].is_disjoint(set))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(v) {
                    g.insert_unchecked(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::new(offset + other.n());
        for (u, v) in self.edges() {
            g.insert_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_unchecked(u + offset, v + offset);
        }
        g
    }

    /// The subgraph induced by `keep`, relabelled densely in increasing id order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let ids: Vec<usize> = keep.ones().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(ids.len());
        for (i, &u) in ids.iter().enumerate() {
            for v in self.adj[u].ones() {
                if keep.contains(v) && index[v] > i {
                    g.insert_unchecked(i, index[v]);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArguments("not a permutation".into()));
        }
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.insert_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Splits `within` into the vertex sets of its connected components,
    /// ordered by smallest member.
    pub fn components_of(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.minimum() {
            let mut comp = self.empty_set();
            let mut frontier = self.empty_set();
            frontier.insert(start);
            unseen.set(start, false);
            while let Some(v) = frontier.minimum() {
                frontier.set(v, false);
                comp.insert(v);
                let mut next = self.adj[v].clone();
                next.intersect_with(&unseen);
                unseen.difference_with(&next);
                frontier.union_with(&next);
            }
            out.push(comp);
        }
        out
    }

    /// Checks the structural invariants: symmetric, loop-free, counted edges.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut twice = 0;
        for (u, nb) in self.adj.iter().enumerate() {
            if nb.len() != n {
                return Err(Error::InvalidGraph(format!("row {u} has width {}", nb.len())));
            }
            if nb.contains(u) {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            for v in nb.ones() {
                if !self.adj[v].contains(u) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge ({u}, {v})")));
                }
            }
            twice += nb.count_ones(..);
        }
        if twice != 2 * self.edge_count {
            return Err(Error::InvalidGraph("edge count out of sync".into()));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_have_expected_sizes() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(4).edge_count(), 3);
        assert_eq!(Graph::star(3).degree(0), 3);
        assert_eq!(Graph::cycle(2).edge_count(), 1);
        for g in [Graph::complete(4), Graph::cycle(7), Graph::star(2), Graph::new(0)] {
            g.validate().unwrap();
        }
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Graph::new(3);
        assert!(matches!(g.add_edge(1, 1), Err(Error::InvalidGraph(_))));
        assert!(matches!(g.add_edge(0, 3), Err(Error::OutOfRange(_))));
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_of_cycle5_is_cycle5_shaped() {
        let c = Graph::cycle(5).complement();
        assert_eq!(c.edge_count(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn components_split_disjoint_union() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(2)).disjoint_union(&Graph::new(1));
        let comps = g.components_of(&g.vertices());
        let sizes: Vec<usize> = comps.iter().map(|c| c.count_ones(..)).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
    }

    #[test]
    fn induced_relabels_densely() {
        let g = Graph::cycle(5);
        let mut keep = g.empty_set();
        keep.extend([0, 1, 3]);
        let h = g.induced(&keep);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn maximality_check() {
        let g = Graph::path(3);
        let mut s = g.empty_set();
        s.insert(0);
        assert!(g.is_independent(&s));
        assert!(!g.is_maximal_independent(&s));
        s.insert(2);
        assert!(g.is_maximal_independent(&s));
    }
}
