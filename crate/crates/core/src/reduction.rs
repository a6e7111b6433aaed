//! Reduction from "do two graphs have the same independence number" to
//! "is the best greedy run optimal" (membership in `S_1`).
//!
//! Pipeline for a pair `(G, H)`:
//!
//! 1. [`pad_edges`] appends small cliques until both graphs have the same
//!    edge count `k`, shifting `α` equally on both sides.
//! 2. [`double_subdivision`] replaces every edge by a path of length three.
//!    The result has `α + k` and the greedy heuristic is optimal on it.
//! 3. [`pad_vertices`] appends one clique to each side so that both have
//!    the same vertex count `n`.
//! 4. [`s1_reduction`] takes two copies of each padded graph plus two
//!    independent sets of size `ℓ = 2n + 2` and fully joins the part pairs
//!    in [`JOIN_LIST`]. Every greedy run then collects one `G` copy, one `H`
//!    copy and one `ℓ`-set, while a maximum independent set can take both
//!    copies of the larger side plus `I2`:
//!
//!    `mdg(Ĝ) = α(G'') + α(H'') + ℓ` and `α(Ĝ) = 2·max(α(G''), α(H'')) + ℓ`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::budget::StateBudget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::mdg_max;
use crate::mis::{alpha, alpha_bounded};

/// `α(g) == α(h)`.
pub fn mis_eq(g: &Graph, h: &Graph) -> bool {
    alpha(g) == alpha(h)
}

fn with_clique(g: &Graph, size: usize) -> Graph {
    g.disjoint_union(&Graph::complete(size))
}

/// Output of [`pad_edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePadding {
    pub g: Graph,
    pub h: Graph,
    /// Common edge count.
    pub k: usize,
    /// Sizes of the cliques appended to each side, in order.
    pub g_cliques: Vec<usize>,
    pub h_cliques: Vec<usize>,
    /// Amount by which `α` grew on each side (one per clique).
    pub alpha_shift: usize,
}

/// Equalizes edge counts with disjoint cliques, each adding exactly one to
/// `α`. An even gap closes with `K3` on the lighter side and `K2` on the
/// heavier side per two edges. An odd gap first gets `K2` on the lighter
/// and `K4` on the heavier side, which flips its parity.
pub fn pad_edges(g: &Graph, h: &Graph) -> EdgePadding {
    let (eg, eh) = (g.edge_count(), h.edge_count());
    let mut light = Vec::new();
    let mut heavy = Vec::new();
    let mut gap = eg.abs_diff(eh);
    if gap % 2 == 1 {
        light.push(2);
        heavy.push(4);
        gap += 5;
    }
    for _ in 0..gap / 2 {
        light.push(3);
        heavy.push(2);
    }
    let (g_cliques, h_cliques) = if eg <= eh { (light, heavy) } else { (heavy, light) };
    let pad = |base: &Graph, cliques: &[usize]| {
        cliques.iter().fold(base.clone(), |acc, &s| with_clique(&acc, s))
    };
    let g2 = pad(g, &g_cliques);
    let h2 = pad(h, &h_cliques);
    debug_assert_eq!(g2.edge_count(), h2.edge_count());
    EdgePadding {
        k: g2.edge_count(),
        alpha_shift: g_cliques.len(),
        g: g2,
        h: h2,
        g_cliques,
        h_cliques,
    }
}

/// Replaces each edge `u - v` by a path `u - a - b - v` through two fresh
/// vertices. Edge `i` (lexicographic order) gets vertices `n + 2i` and
/// `n + 2i + 1`. The result has `n + 2k` vertices and `α(g) + k`.
pub fn double_subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Graph::new(n + 2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = n + 2 * i;
        let b = a + 1;
        for (x, y) in [(u, a), (a, b), (b, v)] {
            out.add_edge(x, y).expect("fresh edge");
        }
    }
    out
}

/// Output of [`pad_vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPadding {
    pub g: Graph,
    pub h: Graph,
    /// Common vertex count.
    pub n: usize,
    pub g_clique: usize,
    pub h_clique: usize,
}

/// Appends `K_{Δ+1}` to the smaller graph and `K_1` to the larger, `Δ`
/// being the vertex-count gap. Both sides gain exactly one in `α`, and the
/// greedy value of each grows by one as well.
pub fn pad_vertices(gp: &Graph, hp: &Graph) -> VertexPadding {
    let delta = gp.n().abs_diff(hp.n());
    let (g_clique, h_clique) = if gp.n() < hp.n() { (delta + 1, 1) } else { (1, delta + 1) };
    let g = with_clique(gp, g_clique);
    let h = with_clique(hp, h_clique);
    VertexPadding {
        n: g.n(),
        g,
        h,
        g_clique,
        h_clique,
    }
}

/// The six vertex blocks of the joined graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    G1,
    G2,
    H1,
    H2,
    I1,
    I2,
}

impl Part {
    pub const ALL: [Part; 6] = [Part::G1, Part::G2, Part::H1, Part::H2, Part::I1, Part::I2];
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Part::ALL
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::InvalidArguments(format!("unknown part {s:?}")))
    }
}

/// Part pairs that are completely joined.
pub const JOIN_LIST: [(Part, Part); 5] = [
    (Part::I1, Part::I2),
    (Part::I1, Part::G2),
    (Part::I1, Part::H2),
    (Part::G1, Part::H2),
    (Part::G2, Part::H1),
];

/// Layout of the joined graph: sizes, vertex ranges and joined pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartMap {
    pub k: usize,
    pub n: usize,
    pub ell: usize,
    pub parts: Vec<(Part, Range<usize>)>,
    pub joins: Vec<(Part, Part)>,
}

impl PartMap {
    pub fn range(&self, part: Part) -> Option<Range<usize>> {
        self.parts.iter().find(|(p, _)| *p == part).map(|(_, r)| r.clone())
    }

    fn part_of(&self, v: usize) -> Option<Part> {
        self.parts.iter().find(|(_, r)| r.contains(&v)).map(|(p, _)| *p)
    }

    fn joined(&self, a: Part, b: Part) -> bool {
        self.joins.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
    }

    /// Sidecar text: `part <P> <lo>..<hi>` with 1-based inclusive bounds and
    /// `join <P> <Q>` lines, after `k`, `n` and `ell` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "c reduction part map\nk {}\nn {}\nell {}\n",
            self.k, self.n, self.ell
        );
        for (p, r) in &self.parts {
            out.push_str(&format!("part {p} {}..{}\n", r.start + 1, r.end));
        }
        for (a, b) in &self.joins {
            out.push_str(&format!("join {a} {b}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<PartMap> {
        let mut k = None;
        let mut n = None;
        let mut ell = None;
        let mut parts = Vec::new();
        let mut joins = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("bad number {t:?}")))
            };
            let part = |t: &str| t.parse::<Part>().map_err(|e| Error::parse(line_no, e.to_string()));
            match tokens[..] {
                [] | ["c", ..] => {}
                ["k", v] => k = Some(num(v)?),
                ["n", v] => n = Some(num(v)?),
                ["ell", v] => ell = Some(num(v)?),
                ["part", p, range] => {
                    let (lo, hi) = range
                        .split_once("..")
                        .ok_or_else(|| Error::parse(line_no, "expected <lo>..<hi>"))?;
                    let (lo, hi) = (num(lo)?, num(hi)?);
                    if lo == 0 || hi + 1 < lo {
                        return Err(Error::parse(line_no, "empty or 0-based range"));
                    }
                    parts.push((part(p)?, lo - 1..hi));
                }
                ["join", a, b] => joins.push((part(a)?, part(b)?)),
                _ => return Err(Error::parse(line_no, format!("unrecognized line {line:?}"))),
            }
        }
        let missing = |what: &str| Error::parse(text.lines().count().max(1), format!("missing `{what}`"));
        Ok(PartMap {
            k: k.ok_or_else(|| missing("k"))?,
            n: n.ok_or_else(|| missing("n"))?,
            ell: ell.ok_or_else(|| missing("ell"))?,
            parts,
            joins,
        })
    }

    /// Checks that `ghat` has exactly the advertised layout: the six parts
    /// partition the vertices with the right sizes, every listed pair is
    /// fully joined and no other pair of parts shares an edge.
    pub fn check(&self, ghat: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Integrity(msg));
        if self.ell != 2 * self.n + 2 {
            return fail(format!("ell = {} but n = {}", self.ell, self.n));
        }
        let mut covered = vec![false; ghat.n()];
        for part in Part::ALL {
            let Some(r) = self.range(part) else {
                return fail(format!("part {part} missing"));
            };
            let want = if matches!(part, Part::I1 | Part::I2) { self.ell } else { self.n };
            if r.len() != want || r.end > ghat.n() {
                return fail(format!("part {part} has range {r:?}, expected size {want}"));
            }
            for v in r {
                if std::mem::replace(&mut covered[v], true) {
                    return fail(format!("vertex {} in two parts", v + 1));
                }
            }
        }
        if self.parts.len() != 6 || covered.iter().any(|c| !c) {
            return fail("parts do not partition the vertex set".into());
        }
        for (a, b) in &self.joins {
            let (ra, rb) = (self.range(*a).unwrap(), self.range(*b).unwrap());
            if a == b || ra.clone().any(|u| rb.clone().any(|v| !ghat.has_edge(u, v))) {
                return fail(format!("join {a} {b} is incomplete"));
            }
        }
        for (u, v) in ghat.edges() {
            let (pu, pv) = (self.part_of(u).unwrap(), self.part_of(v).unwrap());
            if pu != pv && !self.joined(pu, pv) {
                return fail(format!("edge {} {} joins {pu} and {pv}", u + 1, v + 1));
            }
            if pu == pv && matches!(pu, Part::I1 | Part::I2) {
                return fail(format!("edge {} {} inside {pu}", u + 1, v + 1));
            }
        }
        Ok(())
    }
}

/// Record of the intermediate graphs and gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub edge_padding: EdgePadding,
    /// `G'` and `H'`: the subdivided graphs.
    pub g_transformed: Graph,
    pub h_transformed: Graph,
    pub vertex_padding: VertexPadding,
}

impl Provenance {
    /// `G''`, the graph copied into `G1` and `G2`.
    pub fn g_final(&self) -> &Graph {
        &self.vertex_padding.g
    }

    /// `H''`, the graph copied into `H1` and `H2`.
    pub fn h_final(&self) -> &Graph {
        &self.vertex_padding.h
    }
}

/// The joined graph `Ĝ` with its layout and construction record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub ghat: Graph,
    pub map: PartMap,
    pub provenance: Provenance,
}

impl ReductionArtifact {
    pub fn ell(&self) -> usize {
        self.map.ell
    }

    pub fn k(&self) -> usize {
        self.map.k
    }

    pub fn n(&self) -> usize {
        self.map.n
    }

    /// Re-checks the layout, including that each copy induces the right graph.
    pub fn check_structure(&self) -> Result<()> {
        self.map.check(&self.ghat)?;
        let copies = [
            (Part::G1, self.provenance.g_final()),
            (Part::G2, self.provenance.g_final()),
            (Part::H1, self.provenance.h_final()),
            (Part::H2, self.provenance.h_final()),
        ];
        for (part, expected) in copies {
            let mut keep = self.ghat.empty_set();
            keep.extend(self.map.range(part).unwrap());
            if self.ghat.induced(&keep) != *expected {
                return Err(Error::Integrity(format!("part {part} is not a copy")));
            }
        }
        Ok(())
    }
}

/// Builds `Ĝ` from `(g, h)`; `Ĝ ∈ S_1` exactly when `α(g) = α(h)`.
pub fn s1_reduction(g: &Graph, h: &Graph) -> ReductionArtifact {
    let edge_padding = pad_edges(g, h);
    let g_transformed = double_subdivision(&edge_padding.g);
    let h_transformed = double_subdivision(&edge_padding.h);
    let vertex_padding = pad_vertices(&g_transformed, &h_transformed);
    let n = vertex_padding.n;
    let ell = 2 * n + 2;

    let sizes = [n, n, n, n, ell, ell];
    let mut parts = Vec::with_capacity(6);
    let mut start = 0;
    for (part, size) in Part::ALL.into_iter().zip(sizes) {
        parts.push((part, start..start + size));
        start += size;
    }
    let map = PartMap {
        k: edge_padding.k,
        n,
        ell,
        parts,
        joins: JOIN_LIST.to_vec(),
    };

    let mut ghat = Graph::new(start);
    let copies = [
        (Part::G1, &vertex_padding.g),
        (Part::G2, &vertex_padding.g),
        (Part::H1, &vertex_padding.h),
        (Part::H2, &vertex_padding.h),
    ];
    for (part, src) in copies {
        let offset = map.range(part).unwrap().start;
        for (u, v) in src.edges() {
            ghat.add_edge(u + offset, v + offset).expect("copy edge");
        }
    }
    for (a, b) in JOIN_LIST {
        for u in map.range(a).unwrap() {
            for v in map.range(b).unwrap() {
                ghat.add_edge(u, v).expect("join edge");
            }
        }
    }

    ReductionArtifact {
        ghat,
        map,
        provenance: Provenance {
            edge_padding,
            g_transformed,
            h_transformed,
            vertex_padding,
        },
    }
}

/// One named pass/fail line of a [`Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Exact values and checks for one reduction instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub alpha_g_final: usize,
    pub alpha_h_final: usize,
    pub alpha_ghat: usize,
    pub mdg_ghat: usize,
    pub ell: usize,
    pub n: usize,
    pub k: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `mdg(Ĝ) = α(Ĝ)`.
    pub fn ghat_in_s1(&self) -> bool {
        self.mdg_ghat == self.alpha_ghat
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "alpha(G) = {}\nalpha(H) = {}\nalpha(G'') = {}\nalpha(H'') = {}\n\
             k = {}\nn = {}\nell = {}\nalpha(Ghat) = {}\nmdg(Ghat) = {}\n",
            self.alpha_g,
            self.alpha_h,
            self.alpha_g_final,
            self.alpha_h_final,
            self.k,
            self.n,
            self.ell,
            self.alpha_ghat,
            self.mdg_ghat
        );
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("check {}: {verdict} ({})\n", c.name, c.detail));
        }
        out.push_str(&format!(
            "Ghat in S[1/1] = {}\n",
            if self.ghat_in_s1() { "yes" } else { "no" }
        ));
        out.push_str(&format!(
            "reduction: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn named<T>(what: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::ResourceLimit { budget, .. } => Error::ResourceLimit {
            what: what.to_string(),
            budget,
        },
        other => other,
    })
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

/// Builds the reduction for `(g, h)` and checks every stage with the exact
/// solvers. A budget overrun is reported as an error naming the
/// subcomputation, never as a failed or skipped check.
pub fn verify_reduction(g: &Graph, h: &Graph, budget: StateBudget) -> Result<Report> {
    let art = s1_reduction(g, h);
    let prov = &art.provenance;
    let ep = &prov.edge_padding;
    let a = |what: &str, x: &Graph| named(what, alpha_bounded(x, budget));
    let m = |what: &str, x: &Graph| named(what, mdg_max(x, budget).map(|o| o.value));

    let (alpha_g, alpha_h) = (a("alpha(G)", g)?, a("alpha(H)", h)?);
    let (alpha_gp, alpha_hp) = (a("alpha(G padded)", &ep.g)?, a("alpha(H padded)", &ep.h)?);
    let (alpha_gt, alpha_ht) = (
        a("alpha(G')", &prov.g_transformed)?,
        a("alpha(H')", &prov.h_transformed)?,
    );
    let (mdg_gt, mdg_ht) = (
        m("mdg(G')", &prov.g_transformed)?,
        m("mdg(H')", &prov.h_transformed)?,
    );
    let (alpha_gf, alpha_hf) = (a("alpha(G'')", prov.g_final())?, a("alpha(H'')", prov.h_final())?);
    let (mdg_gf, mdg_hf) = (m("mdg(G'')", prov.g_final())?, m("mdg(H'')", prov.h_final())?);
    let (alpha_ghat, mdg_ghat) = rayon::join(|| a("alpha(Ghat)", &art.ghat), || m("mdg(Ghat)", &art.ghat));
    let (alpha_ghat, mdg_ghat) = (alpha_ghat?, mdg_ghat?);

    let k = art.k();
    let ell = art.ell();
    let mut checks = vec![
        check(
            "edge padding",
            ep.g.edge_count() == k
                && ep.h.edge_count() == k
                && alpha_gp == alpha_g + ep.alpha_shift
                && alpha_hp == alpha_h + ep.alpha_shift,
            format!("k = {k}, alpha shift {}", ep.alpha_shift),
        ),
        check(
            "transform greedy-optimal",
            mdg_gt == alpha_gt && mdg_ht == alpha_ht,
            format!("mdg/alpha G' {mdg_gt}/{alpha_gt}, H' {mdg_ht}/{alpha_ht}"),
        ),
        check(
            "transform alpha shift",
            alpha_gt == alpha_gp + k
                && alpha_ht == alpha_hp + k
                && prov.g_transformed.n() == ep.g.n() + 2 * k
                && prov.h_transformed.n() == ep.h.n() + 2 * k,
            format!("alpha G' {alpha_gt}, H' {alpha_ht}"),
        ),
        check(
            "vertex padding",
            alpha_gf == alpha_gt + 1
                && alpha_hf == alpha_ht + 1
                && mdg_gf == alpha_gf
                && mdg_hf == alpha_hf
                && prov.g_final().n() == art.n()
                && prov.h_final().n() == art.n(),
            format!("n = {}", art.n()),
        ),
    ];
    let structure = art.check_structure();
    checks.push(check(
        "structure",
        structure.is_ok(),
        match &structure {
            Ok(()) => format!("ell = {ell}, {} vertices", art.ghat.n()),
            Err(e) => e.to_string(),
        },
    ));
    let mdg_expected = alpha_gf + alpha_hf + ell;
    checks.push(check(
        "mdg equality",
        mdg_ghat == mdg_expected,
        format!("{mdg_ghat} = {alpha_gf} + {alpha_hf} + {ell}"),
    ));
    let alpha_expected = 2 * alpha_gf.max(alpha_hf) + ell;
    checks.push(check(
        "alpha equality",
        alpha_ghat == alpha_expected,
        format!("{alpha_ghat} = 2 * {} + {ell}", alpha_gf.max(alpha_hf)),
    ));
    let in_s1 = mdg_ghat == alpha_ghat;
    checks.push(check(
        "iff",
        in_s1 == (alpha_g == alpha_h),
        format!(
            "Ghat {} S1, alpha(G) {} alpha(H)",
            if in_s1 { "in" } else { "not in" },
            if alpha_g == alpha_h { "=" } else { "!=" }
        ),
    ));

    Ok(Report {
        alpha_g,
        alpha_h,
        alpha_g_final: alpha_gf,
        alpha_h_final: alpha_hf,
        alpha_ghat,
        mdg_ghat,
        ell,
        n: art.n(),
        k,
        checks,
    })
}
