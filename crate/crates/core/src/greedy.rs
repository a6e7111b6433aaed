//! The minimum-degree greedy independent set heuristic (MDG).
//!
//! Each round picks a vertex of minimum degree in the residual graph, adds
//! it to the output and deletes it together with its neighbours. `mdg_max`
//! is the best output size over every way of breaking ties between
//! minimum-degree vertices.

use std::collections::HashMap;

use crate::budget::StateBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How `mdg_run` breaks ties between minimum-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieRule {
    #[default]
    LowestId,
    HighestId,
}

/// The vertices chosen by one greedy run, in selection order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyTrace {
    pub picks: Vec<usize>,
}

impl GreedyTrace {
    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    /// Re-runs the trace on `g`, checking that every pick is a
    /// minimum-degree vertex of the residual graph and that the residual is
    /// empty at the end. Returns the picked set.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet> {
        let mut residual = g.vertices();
        let mut out = g.empty_set();
        for (round, &v) in self.picks.iter().enumerate() {
            if v >= g.n() || !residual.contains(v) {
                return Err(Error::Integrity(format!(
                    "round {round}: vertex {v} is not in the residual graph"
                )));
            }
            let min = min_degree(g, &residual).expect("residual nonempty");
            let deg = g.degree_in(v, &residual);
            if deg != min {
                return Err(Error::Integrity(format!(
                    "round {round}: vertex {v} has degree {deg}, minimum is {min}"
                )));
            }
            out.insert(v);
            remove_closed(g, &mut residual, v);
        }
        if !residual.is_clear() {
            return Err(Error::Integrity(format!(
                "trace ends with {} residual vertices",
                residual.count_ones(..)
            )));
        }
        Ok(out)
    }
}

fn min_degree(g: &Graph, residual: &VertexSet) -> Option<usize> {
    residual.ones().map(|v| g.degree_in(v, residual)).min()
}

fn remove_closed(g: &Graph, residual: &mut VertexSet, v: usize) {
    residual.set(v, false);
    residual.difference_with(g.neighbors(v));
}

/// Vertices of minimum degree in the subgraph induced by `residual`, ascending.
pub fn min_degree_vertices(g: &Graph, residual: &VertexSet) -> Vec<usize> {
    let Some(min) = min_degree(g, residual) else {
        return Vec::new();
    };
    residual
        .ones()
        .filter(|&v| g.degree_in(v, residual) == min)
        .collect()
}

/// One deterministic greedy run.
pub fn mdg_run(g: &Graph, rule: TieRule) -> (VertexSet, GreedyTrace) {
    let mut residual = g.vertices();
    let mut out = g.empty_set();
    let mut trace = GreedyTrace::default();
    while !residual.is_clear() {
        let ties = min_degree_vertices(g, &residual);
        let v = match rule {
            TieRule::LowestId => ties[0],
            TieRule::HighestId => ties[ties.len() - 1],
        };
        out.insert(v);
        trace.picks.push(v);
        remove_closed(g, &mut residual, v);
    }
    (out, trace)
}

/// Result of the exhaustive tie-choice search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdgOutcome {
    pub value: usize,
    /// A trace achieving `value`.
    pub trace: GreedyTrace,
    /// Number of memoized component states the search created.
    pub states: usize,
}

/// `mdg(g)`: the largest greedy output over all tie-breaking sequences.
///
/// Greedy runs on a disjoint union interleave independently: restricted to
/// one component every run is a valid run of that component, and any pair
/// of component runs can be merged by always advancing the one whose next
/// pick has the smaller degree. So the search splits each residual graph
/// into components, memoizes each component on its vertex set, and only
/// branches over minimum-degree vertices inside a component.
pub fn mdg_max(g: &Graph, budget: StateBudget) -> Result<MdgOutcome> {
    let mut search = MdgSearch::new(g, budget);
    let all = g.vertices();
    let value = search.value(&all)?;
    let trace = GreedyTrace {
        picks: search.best_picks(&all)?,
    };
    Ok(MdgOutcome {
        value,
        trace,
        states: search.memo.len(),
    })
}

/// Whether some tie-breaking sequence yields at least `s` picks.
pub fn mdg_geq(g: &Graph, s: usize, budget: StateBudget) -> Result<bool> {
    if s == 0 {
        return Ok(true);
    }
    Ok(MdgSearch::new(g, budget).value(&g.vertices())? >= s)
}

struct MdgSearch<'g> {
    g: &'g Graph,
    memo: HashMap<VertexSet, usize>,
    budget: StateBudget,
}

impl<'g> MdgSearch<'g> {
    fn new(g: &'g Graph, budget: StateBudget) -> Self {
        MdgSearch {
            g,
            memo: HashMap::new(),
            budget,
        }
    }

    fn value(&mut self, set: &VertexSet) -> Result<usize> {
        let mut total = 0;
        for comp in self.g.components_of(set) {
            total += self.component_value(comp)?;
        }
        Ok(total)
    }

    fn component_value(&mut self, comp: VertexSet) -> Result<usize> {
        if comp.count_ones(..) == 1 {
            return Ok(1);
        }
        if let Some(&v) = self.memo.get(&comp) {
            return Ok(v);
        }
        if self.memo.len() >= self.budget.states() {
            return Err(Error::ResourceLimit {
                what: "mdg_max".into(),
                budget: self.budget.states(),
            });
        }
        let mut best = 0;
        for v in min_degree_vertices(self.g, &comp) {
            let mut rest = comp.clone();
            remove_closed(self.g, &mut rest, v);
            best = best.max(1 + self.value(&rest)?);
        }
        self.memo.insert(comp, best);
        Ok(best)
    }

    fn component_picks(&mut self, comp: VertexSet) -> Result<Vec<usize>> {
        let target = self.component_value(comp.clone())?;
        for v in min_degree_vertices(self.g, &comp) {
            let mut rest = comp.clone();
            remove_closed(self.g, &mut rest, v);
            if 1 + self.value(&rest)? == target {
                let mut picks = vec![v];
                picks.extend(self.best_picks(&rest)?);
                return Ok(picks);
            }
        }
        Err(Error::Integrity("memoized mdg value has no realizing pick".into()))
    }

    /// Optimal picks for a residual set, merging per-component traces by
    /// current degree so that the merged sequence is itself a greedy run.
    fn best_picks(&mut self, set: &VertexSet) -> Result<Vec<usize>> {
        let mut per_comp = Vec::new();
        for comp in self.g.components_of(set) {
            per_comp.push(self.component_picks(comp)?);
        }
        let mut cursor = vec![0usize; per_comp.len()];
        let mut residual = set.clone();
        let mut merged = Vec::new();
        loop {
            let next = per_comp
                .iter()
                .enumerate()
                .filter(|(i, picks)| cursor[*i] < picks.len())
                .min_by_key(|(i, picks)| self.g.degree_in(picks[cursor[*i]], &residual))
                .map(|(i, _)| i);
            let Some(i) = next else { break };
            let v = per_comp[i][cursor[i]];
            cursor[i] += 1;
            merged.push(v);
            remove_closed(self.g, &mut residual, v);
        }
        Ok(merged)
    }
}
