//! Matching number and quasi-regularizability by exhaustive branching.

use crate::dompoly::Cap;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Order limit for the matching branch search.
pub const MATCHING_CAP: usize = 32;

/// Order limit for the independent-set enumeration.
pub const QUASI_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    /// Witness edges `(u, v)` with `u < v`, pairwise disjoint.
    pub edges: Vec<(usize, usize)>,
}

struct MatchSearch<'a> {
    g: &'a Graph,
    best: Vec<(usize, usize)>,
    current: Vec<(usize, usize)>,
}

impl MatchSearch<'_> {
    fn run(&mut self, avail: u64) {
        let g = self.g;
        let deg = |v: usize, avail: u64| (g.neighbors(v).bits() & avail).count_ones();
        // Vertices with no available neighbour can no longer be matched.
        let avail = VertexSet(avail).iter().filter(|&v| deg(v, avail) > 0).fold(0u64, |m, v| m | 1 << v);
        if self.current.len() + (avail.count_ones() / 2) as usize <= self.best.len() {
            return;
        }
        let Some((v, deg_v)) = VertexSet(avail).iter().map(|v| (v, deg(v, avail))).min_by_key(|&(v, d)| (d, v)) else {
            self.best = self.current.clone();
            return;
        };

        // Match v with each available neighbour, highest remaining degree first.
        let mut partners: Vec<(u32, usize)> = VertexSet(self.g.neighbors(v).bits() & avail)
            .iter()
            .map(|u| ((self.g.neighbors(u).bits() & avail).count_ones(), u))
            .collect();
        partners.sort_by(|a, b| b.cmp(a));
        for (_, u) in partners {
            self.current.push((v.min(u), v.max(u)));
            self.run(avail & !(1 << v) & !(1 << u));
            self.current.pop();
        }
        // A degree-one vertex is always matched in some maximum matching.
        if deg_v > 1 {
            self.run(avail & !(1 << v));
        }
    }
}

/// Maximum matching by branch and bound. Branches on a vertex of least
/// remaining degree, trying partners of highest degree first.
pub fn matching_number(g: &Graph) -> Result<MatchingResult> {
    Cap(MATCHING_CAP).check(g.order())?;
    let mut search = MatchSearch { g, best: Vec::new(), current: Vec::new() };
    search.run(g.vertices().bits());
    let mut edges = search.best;
    edges.sort();
    Ok(MatchingResult { size: edges.len(), edges })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiResult {
    pub ok: bool,
    /// An independent set with `|S| > |N(S)|`, of largest excess, when one exists.
    pub witness: Option<VertexSet>,
}

struct BergeSearch<'a> {
    g: &'a Graph,
    best_excess: i64,
    witness: Option<VertexSet>,
}

impl BergeSearch<'_> {
    /// `set` is independent; `nbhd = N(set)`; `cand` are later vertices that
    /// could still join.
    fn run(&mut self, set: u64, nbhd: u64, cand: u64) {
        let excess = set.count_ones() as i64 - nbhd.count_ones() as i64;
        if excess > self.best_excess {
            self.best_excess = excess;
            self.witness = Some(VertexSet(set));
        }
        // Adding vertices never shrinks N(S), so |S| can grow by at most |cand|.
        if excess + cand.count_ones() as i64 <= self.best_excess {
            return;
        }
        let Some(v) = VertexSet(cand).first() else { return };
        let rest = cand & !(1 << v);
        let nv = self.g.neighbors(v).bits();
        self.run(set | 1 << v, nbhd | nv, rest & !nv);
        self.run(set, nbhd, rest);
    }
}

/// Berge's criterion: every independent set `S` has `|S| <= |N(S)|`.
pub fn is_quasi_regularizable(g: &Graph) -> Result<QuasiResult> {
    Cap(QUASI_CAP).check(g.order())?;
    let mut search = BergeSearch { g, best_excess: 0, witness: None };
    search.run(0, 0, g.vertices().bits());
    Ok(QuasiResult { ok: search.witness.is_none(), witness: search.witness })
}

/// Every edge subset, for cross-checking on tiny graphs.
pub fn matching_number_brute(g: &Graph) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 24, "brute force needs at most 24 edges");
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let mut used = 0u64;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let m = 1u64 << u | 1u64 << v;
                    if used & m != 0 {
                        return None;
                    }
                    used |= m;
                }
            }
            Some(mask.count_ones() as usize)
        })
        .max()
        .unwrap_or(0)
}

/// Checks a witness independently of the search.
pub fn is_berge_violation(g: &Graph, s: VertexSet) -> bool {
    let independent = s.iter().all(|v| g.neighbors(v).intersection(s).is_empty());
    independent && s.len() > g.open_neighborhood_of(s).len()
}

pub fn check_matching(g: &Graph, m: &MatchingResult) -> Result<()> {
    let mut used = 0u64;
    for &(u, v) in &m.edges {
        if !g.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mask = 1u64 << u | 1u64 << v;
        assert_eq!(used & mask, 0, "matching edges overlap");
        used |= mask;
    }
    Ok(())
}
