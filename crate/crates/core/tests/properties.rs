mod common;

use circalt::altitude::{circular_altitude_exact, colour_sorted_ordering, DEFAULT_BUDGET};
use circalt::circular_colouring::circular_chromatic_number;
use circalt::graph_core::{chromatic_number, clique_number, dsatur_colouring, girth};
use circalt::orderings::{longest_monotonic_cycle, verify_monotonic_cycle, CircularOrdering};
use circalt::search::{anneal_min_max_cycle, AnnealConfig};
use circalt::Graph;
use common::*;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_with_ordering(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn altitude(g: &Graph) -> usize {
    circular_altitude_exact(g, DEFAULT_BUDGET).value.unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycle_dp_matches_enumeration((g, order) in graph_with_ordering(7)) {
        let o = CircularOrdering::new(order.clone()).unwrap();
        let w = longest_monotonic_cycle(&g, &o);
        prop_assert_eq!(w.length, brute_longest_cycle(&g, &order, &simple_cycles(&g)));
        prop_assert!(verify_monotonic_cycle(&g, &o, &w.vertices));
    }

    #[test]
    fn rotation_and_reversal_invariance((g, order) in graph_with_ordering(8), k in 0usize..8) {
        let o = CircularOrdering::new(order).unwrap();
        let v = longest_monotonic_cycle(&g, &o).length;
        prop_assert_eq!(longest_monotonic_cycle(&g, &o.rotated(k)).length, v);
        prop_assert_eq!(longest_monotonic_cycle(&g, &o.reversed()).length, v);
    }

    #[test]
    fn exact_altitude_matches_brute_force(g in graph(6)) {
        prop_assert_eq!(altitude(&g), brute_altitude(&g));
    }

    #[test]
    fn sandwich_and_circular_chromatic(g in graph(7)) {
        let a = altitude(&g);
        let chi = chromatic_number(&g).count;
        prop_assert!(clique_number(&g) <= a || !g.has_edge() && a == 1);
        prop_assert!(a <= chi.max(1));
        let cc = circular_chromatic_number(&g);
        prop_assert!(a <= cc.value.floor());
        if a > 2 {
            if let Some(girth) = girth(&g).finite() {
                prop_assert!(a >= girth);
                prop_assert!(cc.value.p as usize >= girth * cc.value.q as usize);
            }
        }
    }

    #[test]
    fn circular_chromatic_matches_brute_force(g in graph(5)) {
        let cc = circular_chromatic_number(&g).value;
        prop_assert_eq!((cc.p as usize, cc.q as usize), brute_circular_chromatic(&g));
    }

    #[test]
    fn subgraphs_do_not_raise_altitude(g in graph(7), drop_edge in any::<prop::sample::Index>(), drop_vertex in any::<prop::sample::Index>()) {
        let a = altitude(&g);
        let edges = g.edges();
        if !edges.is_empty() {
            let (x, y) = edges[drop_edge.index(edges.len())];
            let mut h = g.clone();
            h.remove_edge(x, y);
            prop_assert!(altitude(&h) <= a);
        }
        if g.n() >= 2 {
            let gone = drop_vertex.index(g.n());
            let keep: Vec<usize> = (0..g.n()).filter(|&v| v != gone).collect();
            prop_assert!(altitude(&g.induced(&keep)) <= a);
        }
    }

    #[test]
    fn colour_classes_bound_cycles(g in graph(9)) {
        let c = dsatur_colouring(&g);
        let o = colour_sorted_ordering(&c.colours);
        prop_assert!(longest_monotonic_cycle(&g, &o).length <= c.count.max(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn linear_altitude_is_chromatic_number(g in graph(6)) {
        let best = permutations(g.n())
            .iter()
            .map(|p| brute_longest_path(&g, p))
            .min()
            .unwrap();
        prop_assert_eq!(best, brute_chromatic(&g));
        prop_assert_eq!(circalt::altitude::linear_altitude(&g), best);
    }

    #[test]
    fn annealer_is_deterministic_and_never_beats_the_truth(g in graph(7), seed in any::<u64>()) {
        prop_assume!(g.n() >= 3);
        let cfg = AnnealConfig::new(seed, 2, 500);
        let r = anneal_min_max_cycle(&g, &cfg).unwrap();
        prop_assert_eq!(&r, &anneal_min_max_cycle(&g, &cfg).unwrap());
        prop_assert!(r.best_value >= altitude(&g));
        let floor = circalt::altitude::trivial_lower_bound(&g);
        prop_assert!(r.best_value >= floor);
        prop_assert_eq!(longest_monotonic_cycle(&g, &r.best_ordering).length, r.best_value);
    }
}
