//! Exact domination polynomials by exhaustive subset sweep, and the
//! average order of dominating sets as an exact rational.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph, VertexSet};

pub type Rational = BigRational;

/// `num / den` as a reduced rational.
pub fn ratio<A: Into<BigInt>, B: Into<BigInt>>(num: A, den: B) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Largest order the exhaustive sweeps accept unless told otherwise.
pub const DEFAULT_CAP: usize = 24;

/// Upper bound on the order of graphs handed to the exponential sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub usize);

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}

impl Cap {
    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::CapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Exact coefficients `d_0..d_n` of a domination polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DomPolynomial {
    coeffs: Vec<BigUint>,
}

impl DomPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::zero());
        }
        DomPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        DomPolynomial::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `d_k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_term(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn multiply(&self, other: &DomPolynomial) -> DomPolynomial {
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DomPolynomial::new(out)
    }

    /// `D(1) = Σ d_k`, the number of dominating sets.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `D'(1) = Σ k d_k`.
    pub fn derivative_one(&self) -> BigUint {
        self.coeffs.iter().enumerate().map(|(k, c)| c * BigUint::from(k)).sum()
    }

    /// `D'(1) / D(1)`; `None` for the zero polynomial.
    pub fn log_derivative_at_one(&self) -> Option<Rational> {
        let d = self.eval_one();
        (!d.is_zero()).then(|| Rational::new(self.derivative_one().into(), d.into()))
    }

    /// Comma-separated coefficients, lowest degree first.
    pub fn to_csv(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for DomPolynomial {
    /// Highest degree first, e.g. `x^6+6x^5+12x^4+10x^3+5x^2+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let unit = c.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DomPolynomial({self})")
    }
}

/// Binomial coefficients `C(n, k)` for `n <= 64`, all of which fit in `u64`.
pub(crate) fn binomial_table() -> &'static [[u64; 65]; 65] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<Box<[[u64; 65]; 65]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u64; 65]; 65]);
        for n in 0..65 {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].wrapping_add(if k < n { t[n - 1][k] } else { 0 });
            }
        }
        t
    })
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        binomial_table()[n][k]
    }
}

/// Shared state of the include/exclude sweep over vertices `0..n`.
///
/// `settled[i]` holds the vertices whose closed neighbourhood lies inside
/// `0..i`; once vertex `i` is reached those must already be covered.
pub(crate) struct Sweep {
    n: usize,
    full: u64,
    closed: Vec<u64>,
    settled: Vec<u64>,
}

impl Sweep {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.order();
        let closed: Vec<u64> = (0..n).map(|v| g.closed_neighbors(v).bits()).collect();
        let settled = (0..=n)
            .map(|i| {
                (0..n)
                    .filter(|&u| 64 - closed[u].leading_zeros() as usize <= i)
                    .fold(0u64, |acc, u| acc | 1 << u)
            })
            .collect();
        Sweep { n, full: VertexSet::full(n).bits(), closed, settled }
    }

    /// Adds to `counts[k]` the number of dominating sets of size `k`.
    fn count(&self, i: usize, covered: u64, size: usize, counts: &mut [u64]) {
        if covered == self.full {
            // Every extension by the remaining vertices still dominates.
            let rest = self.n - i;
            let row = &binomial_table()[rest];
            for (j, c) in row.iter().take(rest + 1).enumerate() {
                counts[size + j] += c;
            }
            return;
        }
        if i == self.n || self.settled[i] & !covered != 0 {
            return;
        }
        self.count(i + 1, covered | self.closed[i], size + 1, counts);
        self.count(i + 1, covered, size, counts);
    }

    fn visit<F: FnMut(VertexSet)>(&self, i: usize, set: u64, covered: u64, f: &mut F) {
        if self.settled[i] & !covered != 0 {
            return;
        }
        if i == self.n {
            f(VertexSet(set));
            return;
        }
        self.visit(i + 1, set | 1 << i, covered | self.closed[i], f);
        self.visit(i + 1, set, covered, f);
    }
}

/// Number of dominating sets of each size, `counts[k] = d_k`.
pub fn dominating_set_counts(g: &Graph, cap: Cap) -> Result<Vec<u64>> {
    cap.check(g.order())?;
    let mut counts = vec![0u64; g.order() + 1];
    Sweep::new(g).count(0, 0, 0, &mut counts);
    Ok(counts)
}

/// Calls `f` once for every dominating set, in no particular order.
pub fn for_each_dominating_set<F: FnMut(VertexSet)>(g: &Graph, cap: Cap, mut f: F) -> Result<()> {
    cap.check(g.order())?;
    Sweep::new(g).visit(0, 0, 0, &mut f);
    Ok(())
}

/// `D(G, 1)` as a machine integer (at most `2^62`).
pub fn count_dominating_sets(g: &Graph, cap: Cap) -> Result<u64> {
    Ok(dominating_set_counts(g, cap)?.iter().sum())
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

pub fn domination_polynomial(g: &Graph, cap: Cap) -> Result<DomPolynomial> {
    Ok(DomPolynomial::from_u64s(&dominating_set_counts(g, cap)?))
}

/// Expanded closed forms: `(1+x)^n - 1` for `K_n`, `x(1+x)^{n-1} + x^{n-1}`
/// for `K_{1,n-1}`, and `x^n` for the edgeless graph.
pub fn poly_closed_form(kind: Family, n: usize) -> Result<DomPolynomial> {
    let binom_row = |m: usize| -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for k in 1..=m {
            let next = &row[k - 1] * BigUint::from(m - k + 1) / BigUint::from(k);
            row.push(next);
        }
        row
    };
    match kind {
        Family::Complete => {
            if n < 1 {
                return Err(Error::OrderOutOfRange(n));
            }
            let mut c = binom_row(n);
            c[0] = BigUint::zero();
            Ok(DomPolynomial::new(c))
        }
        Family::Star => {
            if n < 2 {
                return Err(Error::StarTooSmall(n));
            }
            let mut c = vec![BigUint::zero()];
            c.extend(binom_row(n - 1));
            c[n - 1] += 1u32;
            Ok(DomPolynomial::new(c))
        }
        Family::Empty => {
            let mut c = vec![BigUint::zero(); n + 1];
            c[n] = BigUint::one();
            Ok(DomPolynomial::new(c))
        }
        Family::Path | Family::Cycle => crate::recurrence::family_poly(kind, n),
    }
}

/// `avd(K_n) = n 2^{n-1} / (2^n - 1)`.
pub fn avd_complete(n: usize) -> Rational {
    assert!(n >= 1);
    let p = BigInt::one() << (n - 1);
    ratio(BigInt::from(n) * &p, (p << 1) - 1)
}

/// `avd(K_{1,n-1}) = ((n+1) 2^{n-2} + n - 1) / (2^{n-1} + 1)`.
pub fn avd_star(n: usize) -> Rational {
    assert!(n >= 2);
    let num = (BigInt::from(n + 1) << (n - 2)) + BigInt::from(n - 1);
    ratio(num, (BigInt::one() << (n - 1)) + 1)
}

/// Closed-form `avd` for a connected graph that is complete or a star.
fn closed_form_avd(h: &Graph) -> Option<Rational> {
    let n = h.order();
    if h.is_complete() {
        return Some(avd_complete(n));
    }
    let degs = h.degrees();
    let centres = degs.iter().filter(|&&d| d == n - 1).count();
    if n >= 3 && h.size() == n - 1 && centres == 1 {
        return Some(avd_star(n));
    }
    None
}

/// Exact `avd(G) = D'(G,1)/D(G,1)`, summed over connected components. The
/// cap applies to each component that has no closed form.
pub fn avd(g: &Graph, cap: Cap) -> Result<Rational> {
    let mut total = Rational::zero();
    for comp in g.components() {
        let h = g.induced(comp)?;
        total += match closed_form_avd(&h) {
            Some(r) => r,
            None => domination_polynomial(&h, cap)?
                .log_derivative_at_one()
                .expect("every graph has a dominating set"),
        };
    }
    Ok(total)
}

/// `avd` straight from the full polynomial, with no component split.
pub fn avd_direct(g: &Graph, cap: Cap) -> Result<Rational> {
    Ok(domination_polynomial(g, cap)?.log_derivative_at_one().expect("V(G) dominates"))
}

/// `avd(G) / n`.
pub fn navd(g: &Graph, cap: Cap) -> Result<Rational> {
    Ok(avd(g, cap)? / BigInt::from(g.order()))
}

/// Domination number.
pub fn gamma(g: &Graph, cap: Cap) -> Result<usize> {
    cap.check(g.order())?;
    let sweep = Sweep::new(g);
    let mut best = g.order();
    min_dominating(&sweep, 0, 0, 0, &mut best);
    Ok(best)
}

fn min_dominating(sw: &Sweep, i: usize, covered: u64, size: usize, best: &mut usize) {
    if size >= *best || sw.settled[i] & !covered != 0 {
        return;
    }
    if covered == sw.full {
        *best = size;
        return;
    }
    if i == sw.n {
        return;
    }
    min_dominating(sw, i + 1, covered | sw.closed[i], size + 1, best);
    min_dominating(sw, i + 1, covered, size, best);
}

/// Double domination number: least `|S|` with `|N[v] ∩ S| >= 2` for every
/// vertex. `None` when some vertex is isolated.
pub fn gamma_x2(g: &Graph, cap: Cap) -> Result<Option<usize>> {
    cap.check(g.order())?;
    if !g.is_isolate_free() {
        return Ok(None);
    }
    let sweep = Sweep::new(g);
    let mut best = g.order();
    min_double(&sweep, 0, 0, 0, 0, &mut best);
    Ok(Some(best))
}

fn min_double(sw: &Sweep, i: usize, once: u64, twice: u64, size: usize, best: &mut usize) {
    if size >= *best || sw.settled[i] & !twice != 0 {
        return;
    }
    if twice == sw.full {
        *best = size;
        return;
    }
    if i == sw.n {
        return;
    }
    let c = sw.closed[i];
    min_double(sw, i + 1, once | c, twice | (once & c), size + 1, best);
    min_double(sw, i + 1, once, twice, size, best);
}

/// Stringifies a rational as `p/q`, or `p` when integral.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labelled_graphs;

    fn six_vertex_example() -> Graph {
        Graph::from_edges(6, [(0, 3), (1, 3), (2, 3), (4, 3), (5, 3), (4, 5)]).unwrap()
    }

    /// Brute force over all 2^n subsets, independent of the sweep.
    fn oracle_counts(g: &Graph) -> Vec<u64> {
        let n = g.order();
        let mut c = vec![0u64; n + 1];
        for s in 0..1u64 << n {
            if is_dominating(g, VertexSet(s)) {
                c[s.count_ones() as usize] += 1;
            }
        }
        c
    }

    #[test]
    fn dominating_examples() {
        let star = Graph::star(5).unwrap();
        assert!(is_dominating(&star, VertexSet::singleton(0)));
        let p5 = Graph::path(5).unwrap();
        assert!(is_dominating(&p5, VertexSet::from_vertices([1, 2, 4])));
        assert!(!is_dominating(&p5, VertexSet::singleton(0)));
    }

    #[test]
    fn reference_polynomials() {
        let p5 = domination_polynomial(&Graph::path(5).unwrap(), Cap::default()).unwrap();
        assert_eq!(p5.to_string(), "x^5+5x^4+8x^3+3x^2");
        let f5 = domination_polynomial(&six_vertex_example(), Cap::default()).unwrap();
        assert_eq!(f5.to_string(), "x^6+6x^5+12x^4+10x^3+5x^2+x");
        assert_eq!(f5.to_csv(), "0,1,5,10,12,6,1");
        for n in 1..=10 {
            let brute = domination_polynomial(&Graph::complete(n).unwrap(), Cap::default()).unwrap();
            assert_eq!(brute, poly_closed_form(Family::Complete, n).unwrap());
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(poly_closed_form(Family::Complete, 3).unwrap(), DomPolynomial::from_u64s(&[0, 3, 3, 1]));
        assert_eq!(poly_closed_form(Family::Star, 4).unwrap(), DomPolynomial::from_u64s(&[0, 1, 3, 4, 1]));
        assert_eq!(poly_closed_form(Family::Star, 2).unwrap(), DomPolynomial::from_u64s(&[0, 2, 1]));
        for n in 2..=12 {
            let brute = domination_polynomial(&Graph::star(n).unwrap(), Cap::default()).unwrap();
            assert_eq!(brute, poly_closed_form(Family::Star, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let k2 = DomPolynomial::from_u64s(&[0, 2, 1]);
        assert_eq!(k2.multiply(&k2), DomPolynomial::from_u64s(&[0, 0, 4, 4, 1]));
        let p5 = DomPolynomial::from_u64s(&[0, 0, 3, 8, 5, 1]);
        assert_eq!(p5.eval_one(), BigUint::from(17u32));
        assert_eq!(p5.derivative_one(), BigUint::from(55u32));
        assert_eq!(DomPolynomial::from_u64s(&[0]).to_string(), "0");
        assert_eq!(DomPolynomial::from_u64s(&[0]).log_derivative_at_one(), None);
    }

    #[test]
    fn avd_examples() {
        let cap = Cap::default();
        assert_eq!(avd(&Graph::complete(3).unwrap(), cap).unwrap(), ratio(12, 7));
        assert_eq!(avd(&six_vertex_example(), cap).unwrap(), ratio(25, 7));
        for n in 1..=8 {
            assert_eq!(avd(&Graph::empty(n).unwrap(), cap).unwrap(), ratio(n as i64, 1));
        }
        assert_eq!(navd(&Graph::empty(1).unwrap(), cap).unwrap(), ratio(1, 1));
        assert_eq!(navd(&Graph::empty(7).unwrap(), cap).unwrap(), ratio(1, 1));
        assert_eq!(navd(&Graph::cycle(5).unwrap(), cap).unwrap(), ratio(13, 21));
        assert_eq!(fmt_rational(&ratio(25, 7)), "25/7");
        assert_eq!(fmt_rational(&ratio(4, 2)), "2");
    }

    #[test]
    fn c5_polynomial_matches_hand_count() {
        let c5 = domination_polynomial(&Graph::cycle(5).unwrap(), Cap::default()).unwrap();
        assert_eq!(c5, DomPolynomial::from_u64s(&[0, 0, 5, 10, 5, 1]));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(25).unwrap();
        assert_eq!(domination_polynomial(&g, Cap::default()), Err(Error::CapExceeded { n: 25, cap: 24 }));
        assert!(domination_polynomial(&g, Cap(25)).is_ok());
        // Components with closed forms bypass the cap.
        let many = Graph::complete(30).unwrap().disjoint_union(&Graph::empty(30).unwrap()).unwrap();
        assert_eq!(avd(&many, Cap(4)).unwrap(), avd_complete(30) + ratio(30, 1));
        assert!(avd(&Graph::path(30).unwrap(), Cap::default()).is_err());
    }

    #[test]
    fn gamma_values() {
        let cap = Cap::default();
        assert_eq!(gamma(&Graph::star(6).unwrap(), cap).unwrap(), 1);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(gamma(&p4, cap).unwrap(), 2);
        assert_eq!(gamma_x2(&p4, cap).unwrap(), Some(4));
        // Spider: path a-b-c with two leaves on c.
        let t5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(gamma(&t5, cap).unwrap(), 2);
        assert_eq!(gamma_x2(&t5, cap).unwrap(), Some(5));
        assert_eq!(gamma_x2(&Graph::empty(3).unwrap(), cap).unwrap(), None);
        assert_eq!(gamma_x2(&Graph::complete(5).unwrap(), cap).unwrap(), Some(2));
    }

    #[test]
    fn sweep_matches_oracle_on_small_graphs() {
        for n in 1..=5 {
            for g in labelled_graphs(n) {
                let counts = dominating_set_counts(&g, Cap::default()).unwrap();
                assert_eq!(counts, oracle_counts(&g), "{g:?}");
                let mut seen = vec![0u64; n + 1];
                for_each_dominating_set(&g, Cap::default(), |s| seen[s.len()] += 1).unwrap();
                assert_eq!(seen, counts);
                let gamma_oracle = counts.iter().position(|&c| c > 0).unwrap();
                assert_eq!(gamma(&g, Cap::default()).unwrap(), gamma_oracle);
            }
        }
    }

    #[test]
    fn gamma_x2_matches_oracle() {
        for g in labelled_graphs(5) {
            let n = g.order();
            let oracle = (0..1u64 << n)
                .filter(|&s| (0..n).all(|v| (g.closed_neighbors(v).bits() & s).count_ones() >= 2))
                .map(|s| s.count_ones() as usize)
                .min();
            assert_eq!(gamma_x2(&g, Cap::default()).unwrap(), oracle, "{g:?}");
        }
    }

    #[test]
    fn leaf_attachment_construction() {
        let cap = Cap::default();
        let g = Graph::path(2).unwrap().add_leaves(&[1, 2]).unwrap();
        let h = Graph::complete(2).unwrap().disjoint_union(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(domination_polynomial(&g, cap).unwrap(), domination_polynomial(&h, cap).unwrap());
    }
}
