//! Path and cycle domination polynomials via the three-term recurrence
//! `D(G_n, x) = x (D(G_{n-1}, x) + D(G_{n-2}, x) + D(G_{n-3}, x))`, and the
//! limiting normalized average it implies.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::dompoly::{domination_polynomial, Cap, DomPolynomial, Rational};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

/// Largest index the recurrence will be driven to.
pub const SEQUENCE_GUARD: usize = 5000;

/// Sliding window over the last three polynomials of a family.
#[derive(Clone, Debug)]
pub struct RecurrenceState {
    window: [DomPolynomial; 3],
    index: usize,
}

impl RecurrenceState {
    pub fn path() -> Self {
        RecurrenceState {
            window: [
                DomPolynomial::from_u64s(&[0, 1]),
                DomPolynomial::from_u64s(&[0, 2, 1]),
                DomPolynomial::from_u64s(&[0, 1, 3, 1]),
            ],
            index: 3,
        }
    }

    /// Seeds from brute-force polynomials of `C_3`, `C_4`, `C_5`.
    pub fn cycle() -> Self {
        let base = |n| domination_polynomial(&Graph::cycle(n).expect("n >= 3"), Cap::default()).expect("tiny");
        RecurrenceState { window: [base(3), base(4), base(5)], index: 5 }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Polynomial of the current (largest) index.
    pub fn current(&self) -> &DomPolynomial {
        &self.window[2]
    }

    pub fn step(&mut self) {
        let len = self.window[2].coeffs().len() + 1;
        let mut next = vec![BigUint::zero(); len];
        for p in &self.window {
            for (k, c) in p.coeffs().iter().enumerate() {
                next[k + 1] += c;
            }
        }
        let next = DomPolynomial::new(next);
        self.window.rotate_left(1);
        self.window[2] = next;
        self.index += 1;
        debug_assert_eq!(self.window[2].degree(), self.index);
    }

    fn polynomial_at(mut self, n: usize) -> DomPolynomial {
        let first = self.index - 2;
        if n < self.index {
            return self.window[n - first].clone();
        }
        while self.index < n {
            self.step();
        }
        self.window[2].clone()
    }
}

pub fn path_poly(n: usize) -> Result<DomPolynomial> {
    if n < 1 {
        return Err(Error::FamilyIndex { n, min: 1 });
    }
    if n > SEQUENCE_GUARD {
        return Err(Error::SequenceGuard { n, guard: SEQUENCE_GUARD });
    }
    Ok(RecurrenceState::path().polynomial_at(n))
}

pub fn cycle_poly(n: usize) -> Result<DomPolynomial> {
    if n < 3 {
        return Err(Error::FamilyIndex { n, min: 3 });
    }
    if n > SEQUENCE_GUARD {
        return Err(Error::SequenceGuard { n, guard: SEQUENCE_GUARD });
    }
    Ok(RecurrenceState::cycle().polynomial_at(n))
}

pub(crate) fn family_poly(kind: Family, n: usize) -> Result<DomPolynomial> {
    match kind {
        Family::Path => path_poly(n),
        Family::Cycle => cycle_poly(n),
        _ => unreachable!("only paths and cycles follow the recurrence"),
    }
}

/// Exact `avd(G_n)/n` for `n` from the family's first index up to `n_max`.
///
/// Only `D(1)` and `D'(1)` are carried: differentiating the recurrence at
/// `x = 1` gives `D_n(1) = Σ D_{n-i}(1)` and `D_n'(1) = Σ (D_{n-i}(1) +
/// D_{n-i}'(1))`, which needs O(1) big integers per step instead of a
/// whole coefficient vector.
pub fn navd_sequence(kind: Family, n_max: usize) -> Result<Vec<(usize, Rational)>> {
    if n_max > SEQUENCE_GUARD {
        return Err(Error::SequenceGuard { n: n_max, guard: SEQUENCE_GUARD });
    }
    let state = match kind {
        Family::Path => RecurrenceState::path(),
        Family::Cycle => RecurrenceState::cycle(),
        _ => return Err(Error::FamilyIndex { n: n_max, min: 0 }),
    };
    let first = state.index - 2;
    let mut vals: Vec<(BigInt, BigInt)> = state
        .window
        .iter()
        .map(|p| (BigInt::from(p.eval_one()), BigInt::from(p.derivative_one())))
        .collect();
    let mut out = Vec::new();
    for n in first..=n_max {
        let i = n - first;
        if i >= 3 {
            let (mut d, mut dp) = (BigInt::zero(), BigInt::zero());
            for (a, b) in &vals[i - 3..i] {
                d += a;
                dp += a + b;
            }
            vals.push((d, dp));
        }
        let (d, dp) = &vals[i];
        out.push((n, Rational::new(dp.clone(), d * BigInt::from(n))));
    }
    Ok(out)
}

/// Dominant root of the characteristic cubic at `x = 1` and the limit of
/// the normalized average for paths and cycles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TribonacciLimit {
    /// Real root of `t^3 - t^2 - t - 1`.
    pub lambda1: f64,
    /// `d lambda1 / dx` at `x = 1` for `t^3 - x t^2 - x t - x`.
    pub lambda1_prime: f64,
    /// `lambda1_prime / lambda1`.
    pub r: f64,
}

/// The unique root greater than 1 of `t^3 - x t^2 - x t - x` for `x > 0`,
/// by safeguarded Newton iteration on a bracketing interval.
pub fn dominant_root(x: f64) -> f64 {
    let f = |t: f64| ((t - x) * t - x) * t - x;
    let df = |t: f64| (3.0 * t - 2.0 * x) * t - x;
    // f(0) = -x < 0 and f(1 + 3x) > 0.
    let (mut lo, mut hi) = (0.0f64, 1.0 + 3.0 * x);
    let mut t = hi;
    for _ in 0..200 {
        let (ft, dft) = (f(t), df(t));
        if ft == 0.0 {
            return t;
        }
        if ft < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let newton = t - ft / dft;
        let next = if dft > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - t).abs() <= 1e-16 * t.abs() {
            return next;
        }
        t = next;
    }
    t
}

pub fn tribonacci_limit() -> TribonacciLimit {
    let lambda1 = dominant_root(1.0);
    // Implicit differentiation of t^3 - x t^2 - x t - x = 0 at x = 1.
    let lambda1_prime = (lambda1 * lambda1 + lambda1 + 1.0) / (3.0 * lambda1 * lambda1 - 2.0 * lambda1 - 1.0);
    TribonacciLimit { lambda1, lambda1_prime, r: lambda1_prime / lambda1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dompoly::{ratio, rational_to_f64};

    #[test]
    fn base_and_small_polys() {
        assert_eq!(path_poly(5).unwrap().to_string(), "x^5+5x^4+8x^3+3x^2");
        assert_eq!(path_poly(4).unwrap(), DomPolynomial::from_u64s(&[0, 0, 4, 4, 1]));
        assert_eq!(path_poly(1).unwrap().to_string(), "x");
        assert_eq!(cycle_poly(5).unwrap(), DomPolynomial::from_u64s(&[0, 0, 5, 10, 5, 1]));
        assert!(path_poly(0).is_err());
        assert!(cycle_poly(2).is_err());
        assert!(path_poly(SEQUENCE_GUARD + 1).is_err());
    }

    #[test]
    fn oracle_equivalence() {
        for n in 1..=14 {
            let brute = domination_polynomial(&Graph::path(n).unwrap(), Cap::default()).unwrap();
            assert_eq!(path_poly(n).unwrap(), brute, "P{n}");
        }
        for n in 3..=14 {
            let brute = domination_polynomial(&Graph::cycle(n).unwrap(), Cap::default()).unwrap();
            assert_eq!(cycle_poly(n).unwrap(), brute, "C{n}");
        }
    }

    #[test]
    fn sequences() {
        let path = navd_sequence(Family::Path, 40).unwrap();
        assert_eq!(path[4], (5, ratio(11, 17)));
        let cyc = navd_sequence(Family::Cycle, 40).unwrap();
        assert_eq!(cyc[0].0, 3);
        assert_eq!(cyc[2], (5, ratio(13, 21)));
        // Scalar recurrence agrees with the full polynomials.
        let mut st = RecurrenceState::path();
        for (n, v) in path.iter().skip(3) {
            if *n > st.index() {
                st.step();
            }
            let p = st.current();
            assert_eq!(p.log_derivative_at_one().unwrap() / BigInt::from(*n), *v);
        }
        assert!(navd_sequence(Family::Path, SEQUENCE_GUARD + 1).is_err());
        assert!(navd_sequence(Family::Star, 10).is_err());
    }

    #[test]
    fn limit_values() {
        let lim = tribonacci_limit();
        assert!((lim.lambda1 - 1.83929).abs() < 5e-6);
        assert!((lim.r - 0.618419922).abs() < 5e-10);
        let l = lim.lambda1;
        assert!((l * l * l - l * l - l - 1.0).abs() < 1e-12);
        // |λ2| = |λ3| and λ1 λ2 λ3 = x = 1.
        assert!(((1.0 / l).sqrt() - 0.73735).abs() < 5e-6);
    }

    #[test]
    fn finite_difference_derivative() {
        // Independent bisection so the check does not reuse the Newton path.
        let bisect = |x: f64| {
            let f = |t: f64| t * t * t - x * t * t - x * t - x;
            let (mut lo, mut hi) = (1.0f64, 3.0f64);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(mid) < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        let h = 1e-6;
        let fd = (bisect(1.0 + h) - bisect(1.0 - h)) / (2.0 * h);
        assert!((fd - tribonacci_limit().lambda1_prime).abs() < 1e-6);
    }

    #[test]
    fn path_converges() {
        let r = tribonacci_limit().r;
        let seq = navd_sequence(Family::Path, 1024).unwrap();
        let at = |n: usize| (rational_to_f64(&seq[n - 1].1) - r).abs();
        assert!(at(1000) < 1e-2);
        for n in [256, 512, 1024] {
            assert!(at(n) < at(n / 2) + 1e-12, "n = {n}");
        }
    }
}
