mod common;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rayon::prelude::*;

use domavd::bounds::{bounds_report, lower_bound_complete, upper_bound_quasi, upper_bound_three_quarters};
use domavd::dompoly::{avd, avd_direct, domination_polynomial, fmt_rational, ratio};
use domavd::domstruct::{
    check_a1_n1, check_critical_characterization, complement_complex_profile, verify_a2_pv, verify_edge_identity,
    verify_edge_removal, verify_sum_critical,
};
use domavd::experiments::{random_experiment, ScanRecord};
use domavd::graph::labelled_graphs;
use domavd::invariants::{is_quasi_regularizable, matching_number, matching_number_brute};
use domavd::{from_graph6, to_graph6, Cap, Graph, Rational};

use common::{binom, naive_avd, naive_counts};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[b] {
                        edges.push((i, j));
                    }
                    b += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn cap() -> Cap {
    Cap::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn structure_is_consistent(g in arb_graph(12)) {
        let n = g.order();
        for v in 0..n {
            prop_assert!(!g.neighbors(v).contains(v));
            for u in g.neighbors(v) {
                prop_assert!(g.neighbors(u).contains(v));
            }
        }
        let comps = g.components();
        let mut seen = 0u64;
        for c in &comps {
            prop_assert_eq!(seen & c.bits(), 0);
            seen |= c.bits();
        }
        prop_assert_eq!(seen, g.vertices().bits());
        prop_assert_eq!(g.is_isolate_free(), g.min_degree() >= 1);
        for (u, v) in g.edges() {
            prop_assert_eq!(&g.delete_edge(u, v).unwrap().add_edge(u, v).unwrap(), &g);
        }
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
    }

    #[test]
    fn avd_routes_agree(g in arb_graph(10), h in arb_graph(6)) {
        let a = avd(&g, cap()).unwrap();
        prop_assert_eq!(&a, &avd_direct(&g, cap()).unwrap());
        prop_assert_eq!(&a, &naive_avd(&g));
        let union = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(avd_direct(&union, cap()).unwrap(), a + avd(&h, cap()).unwrap());
    }

    #[test]
    fn top_coefficients_are_binomial(g in arb_graph(11)) {
        let n = g.order();
        let p = domination_polynomial(&g, cap()).unwrap();
        for k in 0..=g.min_degree() {
            prop_assert_eq!(p.coeff(n - k), BigUint::from(binom(n as u64, k as u64)));
        }
        for k in 0..=n / 2 {
            prop_assert!(p.coeff(n - k) >= p.coeff(k));
        }
        let naive = naive_counts(&g);
        for (k, c) in naive.iter().enumerate() {
            prop_assert_eq!(p.coeff(k), BigUint::from(*c));
        }
    }

    #[test]
    fn leaf_attachment_matches_matching_union(counts in prop::collection::vec(1usize..=2, 1..6)) {
        // Each vertex of a path gets one or two pendant leaves; the result
        // has the same polynomial as k K_2 plus l K_(1,2).
        let base = Graph::path(counts.len()).unwrap();
        let g = base.add_leaves(&counts).unwrap();
        let singles = counts.iter().filter(|&&c| c == 1).count();
        let doubles = counts.len() - singles;
        let mut parts: Vec<Graph> = Vec::new();
        parts.extend(std::iter::repeat_n(Graph::complete(2).unwrap(), singles));
        parts.extend(std::iter::repeat_n(Graph::star(3).unwrap(), doubles));
        let h = parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.disjoint_union(p).unwrap());
        prop_assert_eq!(domination_polynomial(&g, cap()).unwrap(), domination_polynomial(&h, cap()).unwrap());
    }

    #[test]
    fn identities_hold(g in arb_graph(8)) {
        prop_assert!(verify_sum_critical(&g, cap()).unwrap().ok());
        prop_assert!(verify_edge_identity(&g, cap()).unwrap().ok());
        prop_assert!(verify_a2_pv(&g, cap()).unwrap().ok());
        for (u, v) in g.edges() {
            prop_assert!(verify_edge_removal(&g, u, v, cap()).unwrap().ok());
        }
        prop_assert!(check_critical_characterization(&g, cap()).unwrap());
        prop_assert_eq!(check_a1_n1(&g, cap()).unwrap(), None);
        prop_assert!(complement_complex_profile(&g, cap()).unwrap().holds);
    }

    #[test]
    fn matching_properties(g in arb_graph(8)) {
        let m = matching_number(&g).unwrap();
        prop_assert!(2 * m.size <= g.order());
        if g.size() <= 24 {
            prop_assert_eq!(m.size, matching_number_brute(&g));
        }
        if 2 * m.size == g.order() {
            prop_assert!(is_quasi_regularizable(&g).unwrap().ok);
        }
    }

    #[test]
    fn scan_record_flags(g in arb_graph(9)) {
        let r = ScanRecord::compute(&g, cap()).unwrap();
        let n = g.order();
        prop_assert_eq!(r.conjecture_2n3_ok, !r.isolate_free || r.avd <= upper_bound_quasi(n));
        prop_assert!(r.navd > ratio(1, 2) && r.navd <= ratio(1, 1));
        prop_assert_eq!(&r.navd, &(r.avd.clone() / BigInt::from(n)));
        prop_assert!(r.violations().is_empty(), "{:?}", r.violations());
    }
}

#[test]
fn labelled_n7_lower_and_upper_bounds() {
    // K_n is the unique minimizer and 3n/4 holds for isolate-free graphs.
    let n = 7;
    let lower = lower_bound_complete(n);
    let three_q = upper_bound_three_quarters(n);
    let graphs: Vec<Graph> = labelled_graphs(n).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let a = avd(g, cap()).unwrap();
            let ok = (a > lower || (a == lower && g.is_complete()))
                && (!g.is_isolate_free() || a <= three_q);
            (!ok).then(|| format!("{} {}", to_graph6(g), fmt_rational(&a)))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn labelled_n7_a2_identity() {
    let graphs: Vec<Graph> = labelled_graphs(7).collect();
    assert!(graphs.par_iter().all(|g| verify_a2_pv(g, cap()).unwrap().ok()));
}

#[test]
fn labelled_n7_bound_sandwich() {
    let graphs: Vec<Graph> = labelled_graphs(7).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let r = bounds_report(g, cap()).unwrap();
            (!r.violations.is_empty()).then(|| format!("{}: {:?}", to_graph6(g), r.violations))
        })
        .collect();
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(5)]);
}

#[test]
fn random_bound_sandwich() {
    let graphs: Vec<Graph> = (0..1000u64)
        .map(|seed| {
            let n = 8 + (seed % 9) as usize;
            let p = 0.1 + 0.8 * ((seed * 53 % 97) as f64 / 97.0);
            Graph::random_gnp(n, p, 90_000 + seed).unwrap()
        })
        .collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let r = bounds_report(g, cap()).unwrap();
            let quasi_ok = !r.quasi_applicable || r.avd <= upper_bound_quasi(g.order());
            (!r.violations.is_empty() || !quasi_ok).then(|| to_graph6(g))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn random_experiment_extremes() {
    let k = random_experiment(9, 1.0, 4, 11, cap()).unwrap();
    let kn: Rational = ratio(1u64 << 8, (1u64 << 9) - 1);
    assert!(k.trials.iter().all(|t| t.navd == kn && t.delta == 8));
    let e = random_experiment(10, 0.0, 4, 11, cap()).unwrap();
    assert!(e.trials.iter().all(|t| t.navd == ratio(1, 1) && t.delta == 0));
}
