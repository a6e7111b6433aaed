//! Exact maximum independent sets and cliques.
//!
//! Branch and reduce: vertices of residual degree at most one are taken
//! greedily (always safe), the rest of the graph is split into connected
//! components, and each component is solved by branching on a vertex of
//! maximum degree. Component values are memoized on their vertex sets.

use std::collections::HashMap;

use crate::budget::StateBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Independence number `α(g)`.
pub fn alpha(g: &Graph) -> usize {
    MisSolver::new(g, StateBudget::UNLIMITED)
        .value(&g.vertices())
        .expect("unlimited budget")
}

/// `α(g)` with an explicit state budget.
pub fn alpha_bounded(g: &Graph, budget: StateBudget) -> Result<usize> {
    MisSolver::new(g, budget).value(&g.vertices())
}

/// A maximum independent set of `g`.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut solver = MisSolver::new(g, StateBudget::UNLIMITED);
    solver.witness(&g.vertices()).expect("unlimited budget")
}

/// `α(g) >= k`.
pub fn alpha_geq(g: &Graph, k: usize) -> bool {
    k == 0 || alpha(g) >= k
}

/// Clique number, computed as `α` of the complement.
pub fn max_clique(g: &Graph) -> usize {
    alpha(&g.complement())
}

/// Whether the clique number of `g` is odd. The empty graph is rejected.
pub fn odd_max_clique(g: &Graph) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::InvalidArguments(
            "clique parity of the empty graph is undefined".into(),
        ));
    }
    Ok(max_clique(g) % 2 == 1)
}

struct MisSolver<'g> {
    g: &'g Graph,
    memo: HashMap<VertexSet, usize>,
    budget: StateBudget,
}

impl<'g> MisSolver<'g> {
    fn new(g: &'g Graph, budget: StateBudget) -> Self {
        MisSolver {
            g,
            memo: HashMap::new(),
            budget,
        }
    }

    /// Applies the degree <= 1 rule until it no longer fires; returns the
    /// number of vertices taken (and records them in `taken`).
    fn reduce(&self, set: &mut VertexSet, mut taken: Option<&mut VertexSet>) -> usize {
        let mut count = 0;
        loop {
            let pick = set.ones().find(|&v| self.g.degree_in(v, set) <= 1);
            let Some(v) = pick else { break };
            set.set(v, false);
            set.difference_with(self.g.neighbors(v));
            if let Some(t) = taken.as_deref_mut() {
                t.insert(v);
            }
            count += 1;
        }
        count
    }

    fn value(&mut self, set: &VertexSet) -> Result<usize> {
        let mut s = set.clone();
        let mut total = self.reduce(&mut s, None);
        for comp in self.g.components_of(&s) {
            total += self.component_value(comp)?;
        }
        Ok(total)
    }

    fn component_value(&mut self, comp: VertexSet) -> Result<usize> {
        if let Some(&v) = self.memo.get(&comp) {
            return Ok(v);
        }
        if self.memo.len() >= self.budget.states() {
            return Err(Error::ResourceLimit {
                what: "alpha".into(),
                budget: self.budget.states(),
            });
        }
        let v = self.branch_vertex(&comp);
        let include = 1 + self.value(&self.without_closed(&comp, v))?;
        let mut rest = comp.clone();
        rest.set(v, false);
        // Excluding v cannot beat |comp| - 1; skip it when including already reaches that.
        let best = if include >= comp.count_ones(..) - 1 {
            include
        } else {
            include.max(self.value(&rest)?)
        };
        self.memo.insert(comp, best);
        Ok(best)
    }

    fn branch_vertex(&self, comp: &VertexSet) -> usize {
        comp.ones()
            .max_by_key(|&v| (self.g.degree_in(v, comp), std::cmp::Reverse(v)))
            .expect("nonempty component")
    }

    fn without_closed(&self, set: &VertexSet, v: usize) -> VertexSet {
        let mut s = set.clone();
        s.set(v, false);
        s.difference_with(self.g.neighbors(v));
        s
    }

    fn witness(&mut self, set: &VertexSet) -> Result<VertexSet> {
        let mut out = self.g.empty_set();
        let mut s = set.clone();
        self.reduce(&mut s, Some(&mut out));
        for comp in self.g.components_of(&s) {
            let target = self.component_value(comp.clone())?;
            let v = self.branch_vertex(&comp);
            let inc = self.without_closed(&comp, v);
            let sub = if 1 + self.value(&inc)? == target {
                out.insert(v);
                inc
            } else {
                let mut rest = comp;
                rest.set(v, false);
                rest
            };
            out.union_with(&self.witness(&sub)?);
        }
        Ok(out)
    }
}
