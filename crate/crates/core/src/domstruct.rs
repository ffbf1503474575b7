//! Critical vertices, private neighbours and the counting identities that
//! relate them to the domination polynomial.
//!
//! For a dominating set `S`:
//!
//! * `a(S)`: members whose removal breaks domination,
//! * `a1(S)`: critical members with a private neighbour outside `S`,
//! * `a2(S)`: critical members whose only private neighbour is themselves,
//! * `N1(S)` / `N2(S)`: non-members dominated exactly once / at least twice.

use num_bigint::BigInt;

use crate::dompoly::{count_dominating_sets, domination_polynomial, for_each_dominating_set, is_dominating, Cap, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DomSetStats {
    pub s: VertexSet,
    pub a: VertexSet,
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub n1: VertexSet,
    pub n2: VertexSet,
}

/// Vertices dominated at least once and at least twice by `s`.
#[inline]
fn coverage(g: &Graph, s: VertexSet) -> (u64, u64) {
    let (mut once, mut twice) = (0u64, 0u64);
    for v in s {
        let c = g.closed_neighbors(v).bits();
        twice |= once & c;
        once |= c;
    }
    (once, twice)
}

/// `Priv(S, v) = { u in N[v] : N[u] ∩ S = {v} }`.
pub fn private_neighbors(g: &Graph, s: VertexSet, v: usize) -> Result<VertexSet> {
    if !s.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let (once, twice) = coverage(g, s);
    Ok(VertexSet(g.closed_neighbors(v).bits() & once & !twice))
}

/// Mask-only decomposition; `s` must be dominating.
pub(crate) fn stats_unchecked(g: &Graph, s: VertexSet) -> DomSetStats {
    let (once, twice) = coverage(g, s);
    let exactly_once = once & !twice;
    let outside = g.vertices().bits() & !s.bits();
    let (mut a, mut a1) = (0u64, 0u64);
    for v in s {
        let private = g.closed_neighbors(v).bits() & exactly_once;
        if private != 0 {
            a |= 1 << v;
            if private & outside != 0 {
                a1 |= 1 << v;
            }
        }
    }
    DomSetStats {
        s,
        a: VertexSet(a),
        a1: VertexSet(a1),
        a2: VertexSet(a & !a1),
        n1: VertexSet(outside & exactly_once),
        n2: VertexSet(outside & twice),
    }
}

pub fn dom_set_stats(g: &Graph, s: VertexSet) -> Result<DomSetStats> {
    if !is_dominating(g, s) {
        return Err(Error::NotDominating);
    }
    Ok(stats_unchecked(g, s))
}

/// `|p_v(G)|`: subsets of `V - N[v]` that dominate `G - v`.
pub fn count_pv(g: &Graph, v: usize, cap: Cap) -> Result<u64> {
    cap.check(g.order())?;
    let pool = g.vertices().difference(g.closed_neighborhood(v)?).bits();
    let target = g.vertices().without(v).bits();
    let closed: Vec<u64> = (0..g.order()).map(|u| g.closed_neighbors(u).bits()).collect();
    let mut count = 0u64;
    // Walk every submask of `pool`, including the empty set.
    let mut sub = pool;
    loop {
        let reach = VertexSet(sub).iter().fold(0u64, |acc, u| acc | closed[u]);
        if reach & target == target {
            count += 1;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & pool;
    }
    Ok(count)
}

/// Both sides of an exact counting identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn new(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        IdentityCheck { lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Σ_S |a(S)|` against `2 D'(G,1) - n D(G,1)`.
pub fn verify_sum_critical(g: &Graph, cap: Cap) -> Result<IdentityCheck> {
    let mut lhs = 0u64;
    for_each_dominating_set(g, cap, |s| lhs += stats_unchecked(g, s).a.len() as u64)?;
    let p = domination_polynomial(g, cap)?;
    let rhs = BigInt::from(2u32) * BigInt::from(p.derivative_one()) - BigInt::from(g.order()) * BigInt::from(p.eval_one());
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `Σ_S |N1(S)|` against `Σ_e (D(G,1) - D(G-e,1))`.
pub fn verify_edge_identity(g: &Graph, cap: Cap) -> Result<IdentityCheck> {
    let mut lhs = 0u64;
    for_each_dominating_set(g, cap, |s| lhs += stats_unchecked(g, s).n1.len() as u64)?;
    let total = count_dominating_sets(g, cap)?;
    let mut rhs = 0u64;
    for (u, v) in g.edges() {
        rhs += total - count_dominating_sets(&g.delete_edge(u, v)?, cap)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `D(G,1) - D(G-e,1)` against `|p_u(G-e)| + |p_v(G-e)| - |p_u(G)| - |p_v(G)|`.
pub fn verify_edge_removal(g: &Graph, u: usize, v: usize, cap: Cap) -> Result<IdentityCheck> {
    let h = g.delete_edge(u, v)?;
    let lhs = count_dominating_sets(g, cap)? as i128 - count_dominating_sets(&h, cap)? as i128;
    let pv = |graph: &Graph, w: usize| count_pv(graph, w, cap).map(|c| c as i128);
    let rhs = pv(&h, u)? + pv(&h, v)? - pv(g, u)? - pv(g, v)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `Σ_S |a2(S)|` against `Σ_v |p_v(G)|`.
pub fn verify_a2_pv(g: &Graph, cap: Cap) -> Result<IdentityCheck> {
    let mut lhs = 0u64;
    for_each_dominating_set(g, cap, |s| lhs += stats_unchecked(g, s).a2.len() as u64)?;
    let mut rhs = 0u64;
    for v in 0..g.order() {
        rhs += count_pv(g, v, cap)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Graded sizes of the complex `{ A : V - A dominating }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexProfile {
    /// `sizes[k]` = number of members of cardinality `k`, for `k = 0..=n`.
    pub sizes: Vec<u64>,
    /// Average member cardinality.
    pub av: Rational,
    /// `sizes[k] >= sizes[n-k]` for every `k <= n/2`, and `av <= n/2`.
    pub holds: bool,
}

/// Enumerates the complement complex directly (one domination test per
/// subset), so it shares nothing with the polynomial sweep.
pub fn complement_complex_profile(g: &Graph, cap: Cap) -> Result<ComplexProfile> {
    let n = g.order();
    cap.check(n)?;
    let full = g.vertices().bits();
    let mut sizes = vec![0u64; n + 1];
    for a in 0..=full {
        if is_dominating(g, VertexSet(full & !a)) {
            sizes[a.count_ones() as usize] += 1;
        }
    }
    let total: u64 = sizes.iter().sum();
    let weighted: u64 = sizes.iter().enumerate().map(|(k, c)| k as u64 * c).sum();
    let av = Rational::new(weighted.into(), total.into());
    let half = Rational::new(BigInt::from(n), BigInt::from(2));
    let holds = (0..=n / 2).all(|k| sizes[k] >= sizes[n - k]) && av <= half;
    Ok(ComplexProfile { sizes, av, holds })
}

/// `|a1(S)| <= |N1(S)|` over every dominating set; returns the first
/// counterexample if any.
pub fn check_a1_n1(g: &Graph, cap: Cap) -> Result<Option<VertexSet>> {
    let mut bad = None;
    for_each_dominating_set(g, cap, |s| {
        let st = stats_unchecked(g, s);
        if bad.is_none() && st.a1.len() > st.n1.len() {
            bad = Some(s);
        }
    })?;
    Ok(bad)
}

/// Critical-vertex characterization: `v in a(S)` iff `Priv(S, v)` is
/// nonempty, checked against the definition `S - v` not dominating.
pub fn check_critical_characterization(g: &Graph, cap: Cap) -> Result<bool> {
    let mut ok = true;
    for_each_dominating_set(g, cap, |s| {
        let st = stats_unchecked(g, s);
        for v in s {
            let by_def = !is_dominating(g, s.without(v));
            ok &= by_def == st.a.contains(v);
        }
    })?;
    Ok(ok)
}
