//! Line-oriented text formats for elections and graphs.
//!
//! Election: the first content line lists candidate names; every further
//! content line is one voter's ranking, most preferred first. `#` starts a
//! comment.
//!
//! Graph: DIMACS-like. `p <n> <m>` (an `edge` or `col` token after `p` is
//! tolerated), then `m` lines `e <u> <v>` with 1-based vertices; `c` lines
//! are comments.

use std::fmt::Write as _;

use crate::election::Election;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_election(text: &str) -> Result<Election> {
    let mut names: Option<(usize, Vec<&str>)> = None;
    let mut rankings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some((_, cands)) = &names else {
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = tokens.iter().find(|t| !seen.insert(**t)) {
                return Err(Error::parse(line_no, format!("duplicate candidate {dup}")));
            }
            names = Some((line_no, tokens));
            continue;
        };
        let mut used = vec![false; cands.len()];
        let mut ranking = Vec::with_capacity(cands.len());
        for t in &tokens {
            let id = cands
                .iter()
                .position(|c| c == t)
                .ok_or_else(|| Error::parse(line_no, format!("unknown candidate {t}")))?;
            if std::mem::replace(&mut used[id], true) {
                return Err(Error::parse(line_no, format!("candidate {t} ranked twice")));
            }
            ranking.push(id);
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::parse(
                line_no,
                format!("voter does not rank {}", cands[missing]),
            ));
        }
        rankings.push(ranking);
    }
    let Some((header_line, cands)) = names else {
        return Err(Error::parse(1, "missing candidate line"));
    };
    if rankings.is_empty() {
        return Err(Error::parse(header_line, "election has no voters"));
    }
    Election::new(cands, rankings).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn format_election(e: &Election) -> String {
    let mut out = String::new();
    let names: Vec<&str> = e.candidates().iter().map(|c| c.name.as_str()).collect();
    out.push_str(&names.join(" "));
    out.push('\n');
    for v in e.voters() {
        let r: Vec<&str> = v.ranking().iter().map(|&c| e.name(c)).collect();
        out.push_str(&r.join(" "));
        out.push('\n');
    }
    out
}

/// A parsed graph plus non-fatal diagnostics (collapsed duplicate edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut edge_lines = 0;
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(line_no, "second problem line"));
                }
                let nums: Vec<&str> = tokens[1..]
                    .iter()
                    .copied()
                    .filter(|t| *t != "edge" && *t != "col")
                    .collect();
                let [n, m] = nums[..] else {
                    return Err(Error::parse(line_no, "expected `p <n> <m>`"));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad vertex count {n:?}")))?;
                let m: usize = m
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad edge count {m:?}")))?;
                graph = Some((Graph::new(n), m));
            }
            Some("e") => {
                let Some((g, _)) = graph.as_mut() else {
                    return Err(Error::parse(line_no, "edge before problem line"));
                };
                let [_, u, v] = tokens[..] else {
                    return Err(Error::parse(line_no, "expected `e <u> <v>`"));
                };
                let endpoint = |t: &str| -> Result<usize> {
                    match t.parse::<usize>() {
                        Ok(x) if (1..=g.n()).contains(&x) => Ok(x - 1),
                        Ok(x) => Err(Error::parse(
                            line_no,
                            format!("vertex {x} out of range 1..={}", g.n()),
                        )),
                        Err(_) => Err(Error::parse(line_no, format!("bad vertex {t:?}"))),
                    }
                };
                let (u, v) = (endpoint(u)?, endpoint(v)?);
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                if !g.add_edge(u, v)? {
                    warnings.push(format!(
                        "line {line_no}: duplicate edge {} {} collapsed",
                        u + 1,
                        v + 1
                    ));
                }
                edge_lines += 1;
            }
            Some(other) => {
                return Err(Error::parse(line_no, format!("unknown line type {other:?}")));
            }
        }
    }
    let Some((graph, declared)) = graph else {
        return Err(Error::parse(1, "missing problem line"));
    };
    if edge_lines != declared {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("header declares {declared} edges, found {edge_lines}"),
        ));
    }
    Ok(ParsedGraph { graph, warnings })
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("write to string");
    }
    out
}
