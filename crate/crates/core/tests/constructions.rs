mod common;

use common::*;
use mforge_core::constructions::{
    graph_from_block_tree, graph_from_low_high_tree, horned, phi_labelling, plus_construction, plus_min_degree,
    tight_regular_example, HornedKind, LowHighTree,
};
use mforge_core::{block_tree, Graph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn labelling_is_root_independent(t in arb_low_high(20)) {
        let roots: Vec<usize> = (0..t.n()).filter(|&v| t.high[v]).collect();
        let first = phi_labelling(&t, roots[0]).unwrap();
        first.check(&t).unwrap();
        prop_assert!(first.phi.iter().all(|&p| p >= 4));
        prop_assert!(first.d >= 8);
        for &r in &roots[1..] {
            let l = phi_labelling(&t, r).unwrap();
            prop_assert_eq!(l.blue_count(), first.blue_count());
            prop_assert_eq!(l.red_count(), first.red_count());
            prop_assert_eq!(&l.phi, &first.phi);
            prop_assert_eq!(l.d, first.d);
        }
        let low = (0..t.n()).find(|&v| !t.high[v]).unwrap();
        prop_assert!(phi_labelling(&t, low).is_err());
    }

    #[test]
    fn low_high_realisation(t in arb_low_high(11)) {
        let built = graph_from_low_high_tree(&t).unwrap();
        let g = &built.graph;
        prop_assert!(g.is_regular(built.d));
        prop_assert!(8 <= built.d && built.d <= 4 * t.edges.len());
        let lows = t.high.iter().filter(|&&h| !h).count();
        prop_assert_eq!(g.n(), t.n() - lows + lows * (built.d + 1));
        let bt = block_tree(g).unwrap();
        prop_assert!(bt.shape().isomorphic(&t.shape()));
        for v in 0..t.n() {
            if let Some(h) = built.hub[v] {
                prop_assert!(bt.cut_vertices().any(|c| c == h));
            }
        }
    }

    #[test]
    fn block_tree_realisation(t in arb_block_tree(9)) {
        let built = graph_from_block_tree(&t).unwrap();
        let g = &built.graph;
        prop_assert_eq!(g.min_degree(), built.d);
        prop_assert!(built.d <= 8 * t.edges.len());
        let extra: Vec<usize> = built.bag_vertex.iter().flatten().copied().collect();
        for v in 0..g.n() {
            if extra.contains(&v) {
                prop_assert!(g.degree(v) >= built.d);
            } else {
                prop_assert_eq!(g.degree(v), built.d);
            }
        }
        prop_assert!(block_tree(g).unwrap().shape().isomorphic(&t));
    }
}

#[test]
fn figure_trees() {
    let example = LowHighTree::binary(2).unwrap();
    let l = phi_labelling(&example, 0).unwrap();
    assert_eq!((l.leaf_count(), l.red_count(), l.d), (4, 2, 20));
    let built = graph_from_low_high_tree(&example).unwrap();
    assert!(built.graph.is_regular(20));
    let tree = LowHighTree::binary(3).unwrap();
    let l = phi_labelling(&tree, 0).unwrap();
    assert_eq!((l.leaf_count(), l.red_count(), l.d), (8, 6, 44));
}

#[test]
fn star_and_path_labels() {
    for s in 2..6 {
        let t = LowHighTree::star(s).unwrap();
        let l = phi_labelling(&t, 0).unwrap();
        assert_eq!(l.d, 4 * s);
        assert!(l.phi.iter().all(|&p| p == 4));
        assert!(l.blue.iter().all(|&b| b));
    }
    let t = LowHighTree::path(2).unwrap();
    let l = phi_labelling(&t, 1).unwrap();
    assert_eq!(l.d, 10);
    assert_eq!(l.phi, [4, 6, 6, 4]);
}

#[test]
fn horned_invariants_up_to_ten() {
    for d in 4..=10 {
        let h = horned(HornedKind::Single { d }).unwrap();
        assert_eq!(h.graph.n(), d + 2);
        for a in (4..=d).step_by(2) {
            let b = d + 2 - a;
            if b >= 4 && b % 2 == 0 {
                let h = horned(HornedKind::Double { d, a, b }).unwrap();
                assert_eq!(h.graph.n(), d + 3);
                h.validate().unwrap();
            }
        }
    }
}

#[test]
fn plus_constructions() {
    assert_eq!(plus_min_degree(&Graph::complete(4)), Graph::complete(5));
    let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
    let k1222 = Graph::complete_multipartite(&[1, 2, 2, 2]).unwrap();
    assert!(mforge_core::canon::isomorphic(&plus_min_degree(&k222), &k1222));
    assert_eq!(plus_construction(&k222, 0), k222);
    let two = plus_construction(&k222, 2);
    assert_eq!((two.n(), two.m()), (8, 12 + 12));
    for k in [1, 4, 7] {
        let g = tight_regular_example(k).unwrap();
        assert_eq!(g.n(), 4 * (k + 2) / 3);
        assert!(g.is_regular(k + 1));
    }
    assert!(mforge_core::canon::isomorphic(&tight_regular_example(1).unwrap(), &Graph::cycle(4).unwrap()));
    assert!(tight_regular_example(3).is_err());
}
