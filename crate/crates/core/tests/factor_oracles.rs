use std::collections::HashMap;

use proptest::prelude::*;
use specfac::factor::{self, Limits, ViolationKind};
use specfac::families;
use specfac::harness::rng::{splitmix, trial_graph, uniform01};
use specfac::thresholds::CaseId;
use specfac::{enumerate, Graph};

/// Bitmask DP: can `mask` be tiled by vertex sets spanning a `P_2` or `P_3`?
fn tileable(g: &Graph, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if mask == 0 {
        return true;
    }
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let nbrs: Vec<usize> = (0..64).filter(|&u| rest >> u & 1 == 1 && g.has_edge(u, v)).collect();
    let mut ok = false;
    'outer: for &u in &nbrs {
        let after = rest & !(1u64 << u);
        if tileable(g, after, memo) {
            ok = true;
            break;
        }
        // path v-u-w or u-v-w
        for w in 0..64 {
            if after >> w & 1 == 1
                && (g.has_edge(u, w) || g.has_edge(v, w))
                && tileable(g, after & !(1u64 << w), memo)
            {
                ok = true;
                break 'outer;
            }
        }
    }
    memo.insert(mask, ok);
    ok
}

fn dp_has_factor(g: &Graph) -> bool {
    tileable(g, g.vertices().bits(), &mut HashMap::new())
}

/// Is the spanning subgraph with edge set `chosen` a union of paths, each on
/// at least two vertices?
fn is_path_factor(n: usize, edges: &[(usize, usize)], chosen: u32) -> bool {
    let mut deg = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (k, &(u, v)) in edges.iter().enumerate() {
        if chosen >> k & 1 == 0 {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    deg.iter().all(|&d| (1..=2).contains(&d))
}

/// Being covered, straight from the definition: every edge lies in some
/// spanning subgraph whose components are paths on at least two vertices.
fn brute_covered(g: &Graph) -> bool {
    let edges: Vec<_> = g.edges().collect();
    let mut used = 0u32;
    let mut any = false;
    for chosen in 0..1u32 << edges.len() {
        if is_path_factor(g.order(), &edges, chosen) {
            any = true;
            used |= chosen;
        }
    }
    any && used.count_ones() as usize == edges.len()
}

#[test]
fn deficiency_matches_dp_on_random_graphs() {
    let mut rng = splitmix(99);
    for t in 0..10_000u64 {
        let n = 9 + (uniform01(&mut rng) * 4.0) as usize;
        let p = 0.1 + 0.4 * uniform01(&mut rng);
        let g = trial_graph(n, p, t).unwrap();
        let crit = factor::deficiency_check(&g).unwrap().is_pass();
        assert_eq!(crit, dp_has_factor(&g), "{}", specfac::graph6::encode(&g));
    }
}

#[test]
fn structural_matches_direct_on_random_connected_graphs() {
    let mut rng = splitmix(5);
    let mut checked = 0;
    let mut covered = 0;
    while checked < 1000 {
        let n = 8 + (uniform01(&mut rng) * 3.0) as usize;
        let p = 0.25 + 0.5 * uniform01(&mut rng);
        let g = trial_graph(n, p, checked as u64 + 1000 * n as u64).unwrap();
        if !g.is_connected() {
            continue;
        }
        let s = factor::is_covered_structural(&g).unwrap().is_pass();
        let d = factor::is_covered_direct(&g).unwrap();
        assert_eq!(s, d, "{}", specfac::graph6::encode(&g));
        covered += s as usize;
        checked += 1;
    }
    assert!(covered > 0 && covered < checked);
}

#[test]
fn direct_matches_brute_force_small() {
    for n in 2..=6 {
        for g in enumerate::labeled_connected(n).unwrap() {
            assert_eq!(factor::is_covered_direct(&g).unwrap(), brute_covered(&g), "{g:?}");
        }
    }
}

#[test]
#[ignore = "exhaustive labelled order 8, several minutes"]
fn labelled_order_eight() {
    for g in enumerate::labeled_connected(8).unwrap() {
        assert_eq!(
            factor::deficiency_check(&g).unwrap().is_pass(),
            factor::find_p2_factor(&g).unwrap().is_some()
        );
    }
}

#[test]
fn case_graphs_have_their_defining_deficiency() {
    let limits = Limits {
        subset_scan: 26,
        ..Limits::DEFAULT
    };
    for n in 5..=26 {
        for case in [CaseId::B1, CaseId::B2, CaseId::B3, CaseId::B4] {
            for s in 1..=9 {
                let Ok(inst) = families::case_graph(case, n, s) else { continue };
                let g = &inst.graph;
                let cut = inst.cut_set().unwrap();
                let expected = match case {
                    CaseId::B1 | CaseId::B4 => 2 * s,
                    _ => 2 * s - 1,
                };
                assert_eq!(g.isolated_after_deleting(cut), expected, "{case} n={n} s={s}");
                assert_eq!(cut.len(), s);
                let v = factor::is_covered_structural_with(g, &limits).unwrap();
                let v = v.violation().unwrap_or_else(|| panic!("{case} n={n} s={s} covered"));
                assert!(v.isolated > v.bound);
            }
        }
    }
}

#[test]
fn witnesses_are_valid_and_covered_implies_factor() {
    for n in 2..=6 {
        for g in enumerate::labeled_connected(n).unwrap() {
            if let Some(w) = factor::find_p2_factor(&g).unwrap() {
                w.validate(&g).unwrap();
            }
            if factor::is_covered_structural(&g).unwrap().is_pass() {
                assert!(factor::has_p2_factor(&g).unwrap());
                for (u, v) in g.edges() {
                    let w = factor::factor_containing_edge(&g, u, v).unwrap().unwrap();
                    w.validate(&g).unwrap();
                    assert!(w.uses_edge(u, v));
                }
            }
        }
    }
}

#[test]
fn order_limits_are_enforced() {
    let g = Graph::complete(27).unwrap();
    assert!(factor::deficiency_check(&g).is_err());
    assert!(factor::is_covered_direct(&Graph::complete(13).unwrap()).is_err());
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_edges_keeps_a_factor(g in arb_graph(14), pick in any::<prop::sample::Index>()) {
        let missing: Vec<_> = g.complement().edges().collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        if factor::has_p2_factor(&g).unwrap() {
            prop_assert!(factor::has_p2_factor(&g.with_edge(u, v).unwrap()).unwrap());
        }
    }

    #[test]
    fn search_witness_is_valid(g in arb_graph(16)) {
        let found = factor::find_p2_factor(&g).unwrap();
        prop_assert_eq!(found.is_some(), factor::deficiency_check(&g).unwrap().is_pass());
        if let Some(w) = found {
            prop_assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn reported_violation_is_real(g in arb_graph(14).prop_filter("connected", Graph::is_connected)) {
        if let Some(v) = factor::is_covered_structural(&g).unwrap().violation() {
            let k = v.s.len();
            prop_assert_eq!(g.isolated_after_deleting(v.s), v.isolated);
            prop_assert!(v.isolated > v.bound);
            let s_has_edge = v.s.iter().any(|x| !g.neighbors(x).intersection(v.s).is_empty());
            match v.kind {
                ViolationKind::Deficiency => prop_assert_eq!(v.bound, 2 * k),
                ViolationKind::NontrivialComponent => {
                    prop_assert!(k > 0);
                    prop_assert_eq!(v.bound, 2 * k - 1);
                    let rest = g.induced_delete(v.s).unwrap();
                    prop_assert!(rest.edge_count() > 0);
                }
                ViolationKind::NonIndependentS => {
                    prop_assert!(s_has_edge);
                    prop_assert_eq!(v.bound, 2 * k - 2);
                }
            }
        }
    }
}
