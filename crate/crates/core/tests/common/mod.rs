//! Naive reference implementations for cross-checking. Every function here
//! tests each subset directly and shares no code with the library's sweep.

#![allow(dead_code)]

use domavd::dompoly::ratio;
use domavd::{Graph, Rational};

/// Closed neighbourhood masks, rebuilt from the edge list.
pub fn closed_masks(g: &Graph) -> Vec<u64> {
    let mut m: Vec<u64> = (0..g.order()).map(|v| 1u64 << v).collect();
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

/// `d_k` for every `k`, by testing all `2^n` subsets.
pub fn naive_counts(g: &Graph) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 22, "naive oracle is exponential");
    let closed = closed_masks(g);
    let full = (1u64 << n) - 1;
    let mut counts = vec![0u64; n + 1];
    for s in 0..=full {
        let mut cov = 0u64;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            cov |= closed[v];
            bits &= bits - 1;
        }
        if cov == full {
            counts[s.count_ones() as usize] += 1;
        }
    }
    counts
}

pub fn naive_avd(g: &Graph) -> Rational {
    let c = naive_counts(g);
    let total: u64 = c.iter().sum();
    let weighted: u64 = c.iter().enumerate().map(|(k, x)| k as u64 * x).sum();
    ratio(weighted, total)
}

/// Least `|S|` such that every closed neighbourhood meets `S` at least
/// `times` times.
pub fn naive_min_cover(g: &Graph, times: u32) -> Option<usize> {
    let n = g.order();
    let closed = closed_masks(g);
    (0u64..1 << n)
        .filter(|&s| closed.iter().all(|&c| (c & s).count_ones() >= times))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
