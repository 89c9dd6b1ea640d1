use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use specfac::families::{self, Family};
use specfac::spectral::{self, a_alpha, quotient, Partition, SymMatrix};
use specfac::Graph;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.5), 0.0..0.99f64]
}

fn nalgebra_radius(m: &SymMatrix) -> f64 {
    let n = m.dim();
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    SymmetricEigen::new(dm)
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn agrees_with_reference_solver(g in arb_graph(1, 40), alpha in arb_alpha()) {
        let m = a_alpha(&g, alpha).unwrap();
        let ours = spectral::spectral_radius(&g, alpha).unwrap();
        let reference = nalgebra_radius(&m);
        prop_assert!((ours - reference).abs() <= 1e-9 * (1.0 + reference), "{ours} vs {reference}");
    }

    #[test]
    fn trace_and_gershgorin(g in arb_graph(1, 40), alpha in arb_alpha()) {
        let m = a_alpha(&g, alpha).unwrap();
        let ev = m.eigenvalues();
        let trace = alpha * 2.0 * g.edge_count() as f64;
        prop_assert!((ev.iter().sum::<f64>() - trace).abs() <= 1e-9 * (1.0 + trace));
        let rho = ev.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(rho <= g.max_degree() as f64 + 1e-9);
        // the average degree is a lower bound for every alpha
        let avg = 2.0 * g.edge_count() as f64 / g.order() as f64;
        prop_assert!(rho >= avg - 1e-9);
    }

    #[test]
    fn relabel_invariant(
        (g, perm) in arb_graph(1, 30).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
        alpha in arb_alpha(),
    ) {
        let a = spectral::spectral_radius(&g, alpha).unwrap();
        let b = spectral::spectral_radius(&g.permuted(&perm).unwrap(), alpha).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a));
    }

    #[test]
    fn adding_an_edge_to_a_connected_graph_raises_rho(
        g in arb_graph(3, 25).prop_filter("connected, not complete", |g| {
            let n = g.order();
            g.is_connected() && g.edge_count() < n * (n - 1) / 2
        }),
        pick in any::<prop::sample::Index>(),
        alpha in arb_alpha(),
    ) {
        let missing: Vec<_> = g.complement().edges().collect();
        let (u, v) = missing[pick.index(missing.len())];
        let before = spectral::spectral_radius(&g, alpha).unwrap();
        let after = spectral::spectral_radius(&g.with_edge(u, v).unwrap(), alpha).unwrap();
        prop_assert!(after > before + 1e-12, "{before} -> {after}");
    }

    #[test]
    fn singleton_quotient_is_the_matrix(g in arb_graph(1, 12), alpha in arb_alpha()) {
        let q = quotient(&g, alpha, &Partition::singletons(g.order())).unwrap();
        prop_assert!(q.is_equitable());
        let rho = spectral::spectral_radius(&g, alpha).unwrap();
        prop_assert!((q.largest_eigenvalue().unwrap() - rho).abs() <= 1e-8 * (1.0 + rho));
    }
}

#[test]
fn complete_graph_radius() {
    for n in 1..=40 {
        for alpha in [0.0, 0.3, 0.75, 0.9] {
            let rho = spectral::spectral_radius(&Graph::complete(n).unwrap(), alpha).unwrap();
            assert!((rho - (n as f64 - 1.0)).abs() < 1e-10, "K{n} alpha={alpha}: {rho}");
        }
    }
}

#[test]
fn path_radius_at_alpha_zero() {
    for n in 2..=40 {
        let rho = spectral::spectral_radius(&Graph::path(n).unwrap(), 0.0).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((rho - expected).abs() < 1e-10);
    }
}

#[test]
fn star_radius_matches_closed_form() {
    // A_alpha(K_{1,k}) has largest eigenvalue
    // (alpha(k+1) + sqrt(alpha^2 (k+1)^2 + 4k(1-2alpha))) / 2.
    for k in 1..=30 {
        for alpha in [0.0, 0.2, 0.5, 0.8] {
            let kf = k as f64;
            let disc = alpha * alpha * (kf + 1.0).powi(2) + 4.0 * kf * (1.0 - 2.0 * alpha);
            let expected = (alpha * (kf + 1.0) + disc.sqrt()) / 2.0;
            let rho = spectral::spectral_radius(&Graph::star(k).unwrap(), alpha).unwrap();
            assert!((rho - expected).abs() < 1e-10, "k={k} alpha={alpha}: {rho} vs {expected}");
        }
    }
}

#[test]
fn family_quotients_match_full_spectrum() {
    for family in Family::ALL {
        for n in [14, 17, 20] {
            let s = if family.needs_s() { Some(2) } else { None };
            let inst = match families::build(family, n, s) {
                Ok(i) => i,
                Err(_) => continue,
            };
            for alpha in [0.0, 0.5, 0.85] {
                let q = quotient(&inst.graph, alpha, &inst.partition).unwrap();
                assert!(q.is_equitable(), "{family} n={n}");
                let rho = spectral::spectral_radius(&inst.graph, alpha).unwrap();
                let lq = q.largest_eigenvalue().unwrap();
                assert!((lq - rho).abs() < 1e-8, "{family} n={n} alpha={alpha}: {lq} vs {rho}");
            }
        }
    }
}

#[test]
fn rejects_alpha_outside_unit_interval() {
    let g = Graph::complete(3).unwrap();
    assert!(spectral::spectral_radius(&g, 1.0).is_err());
    assert!(spectral::spectral_radius(&g, -0.1).is_err());
    assert!(spectral::spectral_radius(&g, f64::NAN).is_err());
}
