mod common;

use magicdist_core::automorphism::canonical_form;
use magicdist_core::construct::{self, construct, Family};
use magicdist_core::graph6::{parse_graph6, to_graph6};
use magicdist_core::Graph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn assert_simple(g: &Graph) {
    for u in 1..=g.order() {
        assert!(!g.adjacent(u, u));
        for v in 1..=g.order() {
            assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = to_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn canonical_form_ignores_vertex_order((g, perm) in graph_and_perm(9)) {
        let h = g.relabeled(&perm);
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
        // and the canonical form describes the same graph up to isomorphism
        let c = parse_graph6(&canonical_form(&g)).unwrap();
        prop_assert_eq!(c.edge_count(), g.edge_count());
        let mut a = c.degrees();
        let mut b = g.degrees();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn parsed_graphs_are_simple(g in graph_strategy(12)) {
        assert_simple(&parse_graph6(&to_graph6(&g)).unwrap());
    }
}

#[test]
fn canonical_form_separates_small_classes() {
    // number of unlabelled graphs on n vertices
    for (n, classes) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
        let forms: std::collections::BTreeSet<String> =
            common::all_graphs(n).map(|g| canonical_form(&g)).collect();
        assert_eq!(forms.len(), classes, "n = {n}");
    }
}

#[test]
fn constructors_are_simple() {
    let families = [
        "path:5",
        "cycle:6",
        "complete:5",
        "star:4",
        "empty:3",
        "knm:8",
        "singular:10",
        "ndm",
        "cone:knm:6",
        "union:path:3+cycle:4",
    ];
    for spec in families {
        let g = construct(&spec.parse::<Family>().unwrap()).unwrap();
        assert_simple(&g);
        assert_eq!(
            spec.parse::<Family>()
                .unwrap()
                .to_string()
                .parse::<Family>()
                .unwrap(),
            spec.parse().unwrap()
        );
    }
}

#[test]
fn singular_even_is_knm() {
    for n in (4..=12).step_by(2) {
        let s = construct::singular_even(n).unwrap();
        assert_eq!(s.regular_degree(), Some(n - 2));
        let k = construct::complete_minus_matching(n).unwrap();
        assert_eq!(canonical_form(&s), canonical_form(&k));
    }
}

#[test]
fn figure_graph_shape() {
    let g = construct::fig_ndm();
    assert_eq!(g.order(), 11);
    assert_eq!(g.edge_count(), 28);
    let seven: Vec<usize> = (1..=11).filter(|&v| g.degree(v) == 7).collect();
    assert_eq!(seven, [7]);
}
