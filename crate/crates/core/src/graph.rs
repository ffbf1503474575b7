//! Small simple graphs stored as one adjacency bit mask per vertex.
//!
//! Every graph has between 1 and [`MAX_ORDER`] vertices so that a vertex
//! subset always fits in a single `u64`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest supported order; vertex sets are single-word masks.
pub const MAX_ORDER: usize = 62;

/// A set of vertices of some ambient graph, as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Named graph families with closed-form domination polynomials or
/// recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Empty,
    Star,
    Path,
    Cycle,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "complete" => Ok(Family::Complete),
            "empty" => Ok(Family::Empty),
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::NoSuchVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph directly from adjacency masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let full = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::NoSuchVertex { vertex: 63 - (row & !full).leading_zeros() as usize, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn family(kind: Family, n: usize) -> Result<Self> {
        check_order(n)?;
        let edges: Vec<(usize, usize)> = match kind {
            Family::Complete => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
            Family::Empty => Vec::new(),
            Family::Star => {
                if n < 2 {
                    return Err(Error::StarTooSmall(n));
                }
                (1..n).map(|j| (0, j)).collect()
            }
            Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
            Family::Cycle => {
                if n < 3 {
                    return Err(Error::CycleTooSmall(n));
                }
                (1..n).map(|i| (i - 1, i)).chain(std::iter::once((n - 1, 0))).collect()
            }
        };
        Graph::from_edges(n, edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::family(Family::Complete, n)
    }

    /// `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Self> {
        Graph::family(Family::Star, n)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::family(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::family(Family::Cycle, n)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    /// Closed neighbourhood with bounds checking.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_neighbors(v))
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.neighbors(v)))
    }

    /// `N(S)`: vertices adjacent to some member of `S` (may intersect `S`).
    pub fn open_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|&r| r != 0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v)))
            .collect()
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.open_neighborhood_of(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced by `s`, with vertices relabelled to `0..|s|` in
    /// increasing order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        let keep: Vec<usize> = s.intersection(self.vertices()).iter().collect();
        check_order(keep.len())?;
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(u, v))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph { n: keep.len(), adj })
    }

    /// `G - v`; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// `G - uv`; labels are preserved.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Block-diagonal union; vertex `i` of `other` becomes `i + self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let shift = self.n;
        let adj = self.adj.iter().copied().chain(other.adj.iter().map(|&r| r << shift)).collect();
        Ok(Graph { n, adj })
    }

    /// Attaches `counts[v]` new pendant vertices to each vertex `v`. New
    /// leaves are numbered after the existing vertices, in vertex order.
    pub fn add_leaves(&self, counts: &[usize]) -> Result<Graph> {
        if counts.len() != self.n {
            return Err(Error::LeafCountLength { expected: self.n, got: counts.len() });
        }
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| !(1..=2).contains(&c)) {
            return Err(Error::InvalidLeafCount { vertex, count });
        }
        let n = self.n + counts.iter().sum::<usize>();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut edges = self.edges();
        let mut next = self.n;
        for (v, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                edges.push((v, next));
                next += 1;
            }
        }
        Graph::from_edges(n, edges)
    }

    /// The labelled tree with the given Prüfer sequence on `seq.len() + 2`
    /// vertices.
    pub fn from_pruefer(seq: &[usize]) -> Result<Graph> {
        let n = seq.len() + 2;
        check_order(n)?;
        if let Some(&label) = seq.iter().find(|&&l| l >= n) {
            return Err(Error::PrueferLabel { label, n });
        }
        let mut degree = vec![1usize; n];
        for &l in seq {
            degree[l] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &l in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a tree always has a leaf");
            edges.push((leaf, l));
            degree[leaf] = 0;
            degree[l] -= 1;
        }
        let mut rest = (0..n).filter(|&v| degree[v] == 1);
        let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
        edges.push((u, v));
        Graph::from_edges(n, edges)
    }

    /// Erdős-Rényi `G(n, p)`. The generator is ChaCha8 seeded with
    /// `seed`; one Bernoulli draw is consumed per vertex pair `(i, j)`,
    /// `i < j`, in lexicographic order.
    pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Graph::random_gnp_with(n, p, &mut rng)
    }

    /// As [`Graph::random_gnp`] but drawing from a caller-owned stream.
    pub fn random_gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Probability(p.to_string()));
        }
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { vertex: v, n: self.n })
        }
    }
}

/// Number of labelled graphs on `n` vertices, `2^{n(n-1)/2}`.
pub fn labelled_graph_count(n: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "too many labelled graphs to index");
    1 << pairs
}

/// The labelled graph whose edge set is `mask` over the pairs `(i, j)`,
/// `i < j`, in lexicographic order.
pub fn labelled_graph(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut b = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            b += 1;
        }
    }
    Graph { n, adj }
}

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labelled_graph_count(n)).map(move |mask| labelled_graph(n, mask))
}

/// The `idx`-th Prüfer sequence of length `n - 2` over `0..n` in
/// lexicographic order.
pub fn pruefer_sequence(n: usize, mut idx: u64) -> Vec<usize> {
    let mut seq = vec![0usize; n.saturating_sub(2)];
    for slot in seq.iter_mut().rev() {
        *slot = (idx % n as u64) as usize;
        idx /= n as u64;
    }
    seq
}

/// Number of labelled trees on `n` vertices, `n^{n-2}`.
pub fn labelled_tree_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// Every Prüfer sequence of length `n - 2` over `0..n`, in lexicographic
/// order, paired with its tree.
pub fn labelled_trees(n: usize) -> impl Iterator<Item = (Vec<usize>, Graph)> {
    assert!((2..=MAX_ORDER).contains(&n));
    (0..labelled_tree_count(n)).map(move |idx| {
        let seq = pruefer_sequence(n, idx);
        let t = Graph::from_pruefer(&seq).expect("labels in range");
        (seq, t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.size(), 3);
        let s4 = Graph::star(4).unwrap();
        assert_eq!(s4.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(s4.min_degree(), 1);
        assert_eq!(s4.degree(0).unwrap(), 3);
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.has_edge(4, 0));
        assert_eq!(Graph::cycle(2), Err(Error::CycleTooSmall(2)));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(63).is_err());
    }

    #[test]
    fn unions() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&k2).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (4, 2, 2));
        let e = Graph::empty(2).unwrap().disjoint_union(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e, Graph::empty(5).unwrap());
        let h = g.disjoint_union(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(h.order(), 7);
        assert_eq!(h.components().len(), 3);
        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(Error::OrderOutOfRange(80)));
    }

    #[test]
    fn leaves() {
        let k2 = Graph::complete(2).unwrap();
        let t = k2.add_leaves(&[1, 1]).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.order(), 4);
        assert_eq!(t.degrees(), vec![2, 2, 1, 1]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.add_leaves(&[2]).unwrap(), Graph::star(3).unwrap());
        assert!(matches!(k2.add_leaves(&[0, 1]), Err(Error::InvalidLeafCount { vertex: 0, count: 0 })));
        assert!(Graph::empty(32).unwrap().add_leaves(&[1; 32]).is_err());
    }

    #[test]
    fn structure_queries() {
        let s = Graph::star(4).unwrap();
        assert_eq!(s.closed_neighborhood(1).unwrap(), VertexSet::from_vertices([0, 1]));
        assert!(s.closed_neighborhood(4).is_err());
        assert!(s.is_isolate_free());
        assert!(!Graph::empty(3).unwrap().is_isolate_free());

        // v1..v6 as 0..5; v4 = 3 is the hub, v5v6 = 4-5.
        let f5 = Graph::from_edges(6, [(0, 3), (1, 3), (2, 3), (4, 3), (5, 3), (4, 5)]).unwrap();
        let minus = f5.delete_vertex(3).unwrap();
        let mut sizes: Vec<usize> = minus.components().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 2]);

        let c5 = Graph::cycle(5).unwrap();
        let p = c5.delete_edge(4, 0).unwrap();
        assert_eq!(p, Graph::path(5).unwrap());
        assert!(c5.delete_edge(0, 2).is_err());
        assert!(c5.delete_vertex(9).is_err());
    }

    #[test]
    fn delete_vertex_compacts_labels() {
        let p4 = Graph::path(4).unwrap();
        let g = p4.delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn gnp_extremes_and_reproducibility() {
        for seed in 0..5 {
            assert_eq!(Graph::random_gnp(9, 0.0, seed).unwrap(), Graph::empty(9).unwrap());
            assert_eq!(Graph::random_gnp(9, 1.0, seed).unwrap(), Graph::complete(9).unwrap());
        }
        let a = Graph::random_gnp(20, 0.5, 42).unwrap();
        let b = Graph::random_gnp(20, 0.5, 42).unwrap();
        assert_eq!(a, b);
        // Bin(190, 1/2): mean 95, sd ~6.9.
        assert!((60..=130).contains(&a.size()), "{}", a.size());
        assert!(Graph::random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn pruefer() {
        assert_eq!(Graph::from_pruefer(&[]).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(Graph::from_pruefer(&[0, 0]).unwrap(), Graph::star(4).unwrap());
        assert_eq!(Graph::from_pruefer(&[0, 4]), Err(Error::PrueferLabel { label: 4, n: 4 }));

        let trees: Vec<Graph> = labelled_trees(4).map(|(_, t)| t).collect();
        assert_eq!(trees.len(), 16);
        assert!(trees.iter().all(|t| t.is_tree()));
        let stars = trees.iter().filter(|t| t.max_degree() == 3).count();
        let paths = trees.iter().filter(|t| t.max_degree() == 2).count();
        assert_eq!((stars, paths), (4, 12));
        let distinct: std::collections::HashSet<_> = trees.into_iter().collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn labelled_graph_counts() {
        assert_eq!(labelled_graphs(4).count(), 64);
        assert_eq!(labelled_graphs(1).count(), 1);
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }
}
