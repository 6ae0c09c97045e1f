mod common;

use circalt::graph_core::{chromatic_number, Graph};
use circalt::mycielski::iterated_mycielskian;
use circalt::named;
use circalt::orderings::longest_monotonic_cycle;
use circalt::powerful::{
    base_ordering, build_powerful_ordering, inherited_ordering, lemma_report, verify_powerful,
    PowerfulOrdering,
};
use common::check_all_paths;

fn powerful(g: &Graph, r: usize) -> PowerfulOrdering {
    build_powerful_ordering(g, &chromatic_number(g).colours, r).unwrap()
}

#[test]
fn paths_in_grotzsch_ordering() {
    let po = powerful(&named::complete(2), 2);
    assert!(check_all_paths(&po) > 11);
    assert!(lemma_report(&po).all());
}

#[test]
fn paths_in_m2c7_ordering() {
    let po = powerful(&named::cycle(7), 2);
    assert_eq!(po.graph.n(), 31);
    assert!(check_all_paths(&po) > 31);
    let w = longest_monotonic_cycle(&po.graph.graph, &po.ordering.close());
    assert!(w.length <= 4);
}

#[test]
fn paths_in_deeper_orderings() {
    for (g, r) in [
        (named::cycle(5), 3),
        (named::complete(3), 3),
        (named::complete(4), 2),
    ] {
        check_all_paths(&powerful(&g, r));
    }
}

#[test]
fn inheritance_preserves_powerfulness() {
    let po = powerful(&named::complete(2), 2);
    let (sub, o) = inherited_ordering(&po.graph, &po.ordering).unwrap();
    assert_eq!(sub.n(), 5);
    assert!(verify_powerful(&sub, &o).all());
    let (base, o0) = inherited_ordering(&sub, &o).unwrap();
    assert_eq!(base.n(), 2);
    assert!(verify_powerful(&base, &o0).all());
}

#[test]
fn full_inheritance_recovers_colour_order() {
    let g = named::cycle(7);
    let c = chromatic_number(&g).colours;
    let po = build_powerful_ordering(&g, &c, 3).unwrap();
    let lin = base_ordering(&po.graph, &po.ordering);
    let mut expected: Vec<usize> = (0..7).collect();
    expected.sort_by_key(|&v| (po.base_colouring[v], v));
    assert_eq!(lin.as_slice(), expected.as_slice());
}

#[test]
fn mycielskian_matches_textbook_construction() {
    for base in [
        named::complete(2),
        named::complete(3),
        named::cycle(5),
        named::petersen(),
    ] {
        let ours = iterated_mycielskian(&base, 1).unwrap().graph;
        let theirs = common::textbook_mycielskian(&base);
        assert_eq!(ours.edge_count(), theirs.edge_count());
        assert_eq!(common::degrees(&ours), common::degrees(&theirs));
    }
}
