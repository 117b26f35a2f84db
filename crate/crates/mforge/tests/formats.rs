use mforge::dot::to_dot;
use mforge::graph6::{decode, encode};
use mforge_core::search::{enumerate_graphs, Filters};
use mforge_core::{Budget, Graph};
use proptest::prelude::*;

// reference strings produced by an independent graph6 writer
#[test]
fn reference_encodings() {
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ],
    )
    .unwrap();
    let star = Graph::from_edges(8, &(1..8).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
    let cases = [
        (Graph::new(0), "?"),
        (Graph::new(1), "@"),
        (Graph::complete(2), "A_"),
        (Graph::complete(4), "C~"),
        (Graph::complete(5), "D~{"),
        (Graph::path(4), "Ch"),
        (petersen, "IheA@GUAo"),
        (star, "GsaCC?"),
        (Graph::cycle(63).unwrap(), "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????o?????????G"),
    ];
    for (g, s) in cases {
        assert_eq!(encode(&g), s);
        assert_eq!(decode(s).unwrap(), g);
    }
    assert!(encode(&Graph::new(62)).starts_with('}'));
    assert!(encode(&Graph::new(63)).starts_with("~??~"));
}

#[test]
fn round_trip_all_small_classes() {
    let b = Budget::default();
    for n in 0..=8 {
        for g in enumerate_graphs(n, &Filters::default(), &b).unwrap() {
            let s = encode(&g);
            assert_eq!(decode(&s).unwrap(), g);
            let rev: Vec<usize> = (0..n).rev().collect();
            let h = g.permuted(&rev);
            assert_eq!(decode(&encode(&h)).unwrap(), h);
        }
    }
}

#[test]
fn malformed_input() {
    for (s, offset) in [
        ("", 0),
        ("C", 1),
        ("C~~", 2),
        ("C}\x7f", 2),
        ("~?", 2),
        ("D~", 2),
        ("A`", 1),
    ] {
        let e = decode(s).unwrap_err();
        assert_eq!(e.offset, offset, "{s:?}: {e}");
        assert!(e.to_string().contains(&format!("byte {offset}")));
    }
}

#[test]
fn dot_lists_every_vertex_and_edge() {
    let d = to_dot(&Graph::cycle(4).unwrap());
    assert!(d.starts_with("graph G {"));
    assert_eq!(d.matches(" -- ").count(), 4);
    assert!(d.contains("  3;\n"));
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=40).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut g = Graph::new(n);
                let mut i = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[i] {
                            g.add_edge(u, v);
                        }
                        i += 1;
                    }
                }
                g
            },
        )
    })
}

proptest! {
    #[test]
    fn random_round_trip(g in arb_graph()) {
        let s = encode(&g);
        prop_assert!(s.bytes().all(|c| (63..=126).contains(&c)));
        prop_assert_eq!(s.len(), 1 + (g.n() * g.n().saturating_sub(1) / 2).div_ceil(6));
        prop_assert_eq!(decode(&s).unwrap(), g);
    }
}
