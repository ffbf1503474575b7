//! Closed-form bounds on `avd(G)` and a per-graph report that checks each
//! applicable bound against the exact value.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::dompoly::{avd, fmt_rational, ratio, Cap, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{is_quasi_regularizable, matching_number};

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// `n 2^{n-1} / (2^n - 1)`, attained only by `K_n`.
pub fn lower_bound_complete(n: usize) -> Rational {
    assert!(n >= 1, "order must be positive");
    ratio(BigInt::from(n) * pow2(n - 1), pow2(n) - 1)
}

/// `(2n(2^δ - 1) + n) / (3(2^δ - 1) + 1)` for isolate-free graphs.
pub fn upper_bound_mindeg(n: usize, delta: usize) -> Result<Rational> {
    if delta < 1 {
        return Err(Error::MinDegreeTooSmall(delta));
    }
    let m = pow2(delta) - 1;
    let n = BigInt::from(n);
    Ok(ratio(BigInt::from(2) * &n * &m + &n, BigInt::from(3) * m + 1))
}

/// `3n/4`.
pub fn upper_bound_three_quarters(n: usize) -> Rational {
    ratio(3 * n as i64, 4)
}

/// `n/2 + Σ_v deg(v) / (2^{deg(v)+1} - 2)`.
pub fn upper_bound_degsum(g: &Graph) -> Result<Rational> {
    if !g.is_isolate_free() {
        return Err(Error::IsolatedVertex);
    }
    let mut total = ratio(g.order() as i64, 2);
    for d in g.degrees() {
        total += ratio(d as i64, pow2(d + 1) - 2);
    }
    Ok(total)
}

/// `(n/2)(1 + δ/(2^δ - 1))`.
pub fn upper_bound_cor(n: usize, delta: usize) -> Result<Rational> {
    if delta < 1 {
        return Err(Error::MinDegreeTooSmall(delta));
    }
    Ok(ratio(n as i64, 2) * (Rational::one() + ratio(delta as i64, pow2(delta) - 1)))
}

/// `δ >= 2 log2(n)`, tested exactly as `2^δ >= n^2`. When it holds the
/// bound from [`upper_bound_cor`] is at most `(n+1)/2`.
pub fn cor_half_applies(n: usize, delta: usize) -> bool {
    pow2(delta) >= BigInt::from(n) * BigInt::from(n)
}

/// `n - 2ν/3`.
pub fn upper_bound_matching(n: usize, nu: usize) -> Result<Rational> {
    if 2 * nu > n {
        return Err(Error::MatchingTooLarge { nu, n });
    }
    Ok(ratio(3 * n as i64 - 2 * nu as i64, 3))
}

/// `2n/3`.
pub fn upper_bound_quasi(n: usize) -> Rational {
    ratio(2 * n as i64, 3)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub delta: usize,
    pub avd: Rational,
    pub lower_kn: Rational,
    /// `avd == lower_kn`.
    pub lower_tight: bool,
    /// Bounds that need `δ >= 1`; `None` otherwise.
    pub upper_mindeg: Option<Rational>,
    pub upper_34: Option<Rational>,
    pub upper_degsum: Option<Rational>,
    pub upper_cor: Option<Rational>,
    pub cor_half: bool,
    pub quasi_applicable: bool,
    pub upper_quasi: Option<Rational>,
    pub nu: usize,
    pub upper_matching: Rational,
    /// One entry per bound the exact value breaks. Always empty for a
    /// correct implementation.
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub const CSV_HEADER: &'static str =
        "n,delta,avd,lower_kn,upper_mindeg,upper_34,upper_degsum,upper_cor,cor_half,quasi,upper_quasi,nu,upper_matching,violations";

    pub fn to_csv_row(&self) -> String {
        let opt = |r: &Option<Rational>| r.as_ref().map(fmt_rational).unwrap_or_default();
        [
            self.n.to_string(),
            self.delta.to_string(),
            fmt_rational(&self.avd),
            fmt_rational(&self.lower_kn),
            opt(&self.upper_mindeg),
            opt(&self.upper_34),
            opt(&self.upper_degsum),
            opt(&self.upper_cor),
            self.cor_half.to_string(),
            self.quasi_applicable.to_string(),
            opt(&self.upper_quasi),
            self.nu.to_string(),
            fmt_rational(&self.upper_matching),
            self.violations.join(";"),
        ]
        .join(",")
    }

    pub fn to_json(&self) -> Value {
        let opt = |r: &Option<Rational>| r.as_ref().map(fmt_rational);
        json!({
            "n": self.n,
            "delta": self.delta,
            "avd": fmt_rational(&self.avd),
            "lower_kn": fmt_rational(&self.lower_kn),
            "lower_tight": self.lower_tight,
            "upper_mindeg": opt(&self.upper_mindeg),
            "upper_34": opt(&self.upper_34),
            "upper_degsum": opt(&self.upper_degsum),
            "upper_cor": opt(&self.upper_cor),
            "cor_half": self.cor_half,
            "quasi": self.quasi_applicable,
            "upper_quasi": opt(&self.upper_quasi),
            "nu": self.nu,
            "upper_matching": fmt_rational(&self.upper_matching),
            "violations": self.violations,
        })
    }
}

/// Evaluates every bound that applies to `g` and compares it with the exact
/// `avd(g)`.
pub fn bounds_report(g: &Graph, cap: Cap) -> Result<BoundsReport> {
    let exact = avd(g, cap)?;
    bounds_report_with_avd(g, exact)
}

pub(crate) fn bounds_report_with_avd(g: &Graph, exact: Rational) -> Result<BoundsReport> {
    let n = g.order();
    let delta = g.min_degree();
    let mut violations = Vec::new();
    let mut upper = |name: &str, bound: &Rational| {
        if exact > *bound {
            violations.push(format!("{name}: avd {} > {}", fmt_rational(&exact), fmt_rational(bound)));
        }
    };

    let lower_kn = lower_bound_complete(n);
    let isolate_free = delta >= 1;
    let upper_mindeg = isolate_free.then(|| upper_bound_mindeg(n, delta)).transpose()?;
    let upper_34 = isolate_free.then(|| upper_bound_three_quarters(n));
    let upper_degsum = isolate_free.then(|| upper_bound_degsum(g)).transpose()?;
    let upper_cor = isolate_free.then(|| upper_bound_cor(n, delta)).transpose()?;
    let cor_half = isolate_free && cor_half_applies(n, delta);
    let quasi_applicable = is_quasi_regularizable(g)?.ok;
    let upper_quasi = quasi_applicable.then(|| upper_bound_quasi(n));
    let nu = matching_number(g)?.size;
    let upper_matching = upper_bound_matching(n, nu)?;

    for (name, b) in [
        ("mindeg", &upper_mindeg),
        ("3n/4", &upper_34),
        ("degsum", &upper_degsum),
        ("cor", &upper_cor),
        ("quasi", &upper_quasi),
    ] {
        if let Some(b) = b {
            upper(name, b);
        }
    }
    if cor_half {
        upper("cor-half", &ratio(n as i64 + 1, 2));
    }
    upper("matching", &upper_matching);
    let lower_tight = exact == lower_kn;
    if exact < lower_kn {
        violations.push(format!("lower: avd {} < {}", fmt_rational(&exact), fmt_rational(&lower_kn)));
    }
    if lower_tight && !g.is_complete() {
        violations.push("lower: equality off K_n".to_string());
    }

    Ok(BoundsReport {
        n,
        delta,
        avd: exact,
        lower_kn,
        lower_tight,
        upper_mindeg,
        upper_34,
        upper_degsum,
        upper_cor,
        cor_half,
        quasi_applicable,
        upper_quasi,
        nu,
        upper_matching,
        violations,
    })
}

/// Per-`δ` values of the two minimum-degree bounds for order `n`, as
/// `(δ, upper_bound_mindeg, upper_bound_cor)`.
pub fn mindeg_curve(n: usize) -> Vec<(usize, Rational, Rational)> {
    (1..n)
        .map(|d| (d, upper_bound_mindeg(n, d).expect("d >= 1"), upper_bound_cor(n, d).expect("d >= 1")))
        .collect()
}
