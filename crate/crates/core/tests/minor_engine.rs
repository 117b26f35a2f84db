mod common;

use common::*;
use mforge_core::constructions::{petersen, tight_regular_example};
use mforge_core::minor::{contraction_minors, down_parameter, has_minor, is_member, is_minimal_obstruction, ExhaustiveOracle};
use mforge_core::params::evaluate;
use mforge_core::search::{enumerate_graphs, Filters};
use mforge_core::{Budget, Graph, ParamKind};
use proptest::prelude::*;
use std::collections::HashSet;

fn b() -> Budget {
    Budget::default()
}

fn arb_param() -> impl Strategy<Value = ParamKind> {
    proptest::sample::select(ParamKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn negative_verdicts_recheck(g in arb_graph(1, 8), f in arb_param(), k in 0usize..4) {
        let r = is_member(&g, f, k, &b()).unwrap();
        prop_assert_eq!(r.verdict, r.witness.is_none());
        r.recheck(&g, &b()).unwrap();
        let mut oracle = ExhaustiveOracle::new(b());
        if g.n() <= 7 {
            prop_assert_eq!(r.verdict, oracle.down(&g, f).unwrap() <= k);
        }
    }

    #[test]
    fn has_minor_matches_minor_closure(g in arb_graph(1, 6), h in arb_graph(1, 5)) {
        let minors = all_minors(&g);
        let expect = minors.contains_key(&(h.n(), brute_key(&h)));
        let got = has_minor(&g, &h, &b()).unwrap();
        prop_assert_eq!(got.is_some(), expect);
        if let Some(parts) = got {
            parts.validate_minor(&g, &h).unwrap();
        }
    }

    #[test]
    fn contraction_minor_classes(g in arb_graph(1, 7).prop_filter("connected", |g| g.is_connected())) {
        let found = contraction_minors(&g, &b()).unwrap();
        for w in &found {
            w.parts.validate_contraction(&g, &w.graph).unwrap();
        }
        let keys: HashSet<(usize, u64)> = found.iter().map(|w| (w.graph.n(), brute_key(&w.graph))).collect();
        prop_assert_eq!(keys.len(), found.len());
        prop_assert_eq!(keys, brute_contraction_minors(&g));
    }
}

#[test]
fn contraction_minors_of_k4() {
    let found = contraction_minors(&Graph::complete(4), &b()).unwrap();
    let sizes: Vec<usize> = found.iter().map(|w| w.graph.n()).collect();
    assert_eq!(sizes, [1, 2, 3]);
    assert_eq!(brute_contraction_minors(&Graph::complete(4)).len(), 3);
}

// the obstruction test agrees with the definition evaluated by the
// exhaustive oracle: f(G) >= k+1 and every one-step minor has ∇f <= k
#[test]
fn obstruction_test_matches_definition() {
    let mut oracle = ExhaustiveOracle::new(b());
    for n in 1..=6 {
        for g in enumerate_graphs(n, &Filters::default(), &b()).unwrap() {
            for f in ParamKind::ALL {
                for k in 0..=4 {
                    let r = is_minimal_obstruction(&g, f, k, &b()).unwrap();
                    r.recheck(&g, &b()).unwrap();
                    let mut expect = evaluate(&g, f, &b()).unwrap() > k;
                    let edges: Vec<(usize, usize)> = g.edges().collect();
                    for &(u, v) in &edges {
                        expect &= oracle.down(&g.delete_edge(u, v).unwrap(), f).unwrap() <= k;
                        expect &= oracle.down(&g.contract_edge(u, v).unwrap(), f).unwrap() <= k;
                    }
                    for v in 0..n {
                        expect &= oracle.down(&g.delete_vertex(v).unwrap(), f).unwrap() <= k;
                    }
                    assert_eq!(r.verdict, expect, "{g:?} {f} k={k} {:?}", r.failed);
                }
            }
        }
    }
}

#[test]
fn named_minor_facts() {
    assert!(has_minor(&petersen(), &Graph::complete(5), &b()).unwrap().is_some());
    assert!(has_minor(&Graph::complete(4), &Graph::complete(4), &b()).unwrap().is_some());
    let tight = tight_regular_example(4).unwrap();
    let parts = has_minor(&tight, &Graph::complete(6), &b()).unwrap().unwrap();
    parts.validate_minor(&tight, &Graph::complete(6)).unwrap();
    assert_eq!(down_parameter(&tight, ParamKind::MinDegree, &b()).unwrap(), 5);
    let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
    assert_eq!(down_parameter(&tree, ParamKind::MinDegree, &b()).unwrap(), 1);
    let c5 = Graph::cycle(5).unwrap();
    let r = is_member(&c5, ParamKind::MinDegree, 1, &b()).unwrap();
    assert!(!r.verdict);
    assert_eq!(r.witness.unwrap().graph, Graph::complete(3));
}
