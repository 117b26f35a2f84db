use mforge_core::canon::isomorphic;
use mforge_core::minor::{has_minor, is_minimal_obstruction};
use mforge_core::search::{obstruction_search, regular_family_sweep, SearchSpec};
use mforge_core::{Budget, Graph, ParamKind};

fn b() -> Budget {
    Budget::default()
}

fn check_outcome(spec: &SearchSpec) -> Vec<Graph> {
    let out = obstruction_search(spec, &b()).unwrap();
    assert_eq!(out.complete_up_to, spec.max_order);
    let obs = out.obstructions;
    for (i, g) in obs.iter().enumerate() {
        let r = is_minimal_obstruction(g, spec.f, spec.k, &b()).unwrap();
        assert!(r.verdict);
        for h in &obs[i + 1..] {
            let (small, big) = if g.n() <= h.n() { (g, h) } else { (h, g) };
            assert!(has_minor(big, small, &b()).unwrap().is_none(), "{small:?} is a minor of {big:?}");
        }
    }
    assert_eq!(obstruction_search(spec, &b()).unwrap().obstructions, obs);
    obs
}

#[test]
fn obstruction_sets_are_antichains() {
    for f in ParamKind::ALL {
        for k in 0..=3 {
            check_outcome(&SearchSpec::new(f, k, 7));
        }
    }
}

#[test]
fn min_degree_three() {
    let obs = check_outcome(&SearchSpec::new(ParamKind::MinDegree, 3, 7));
    assert_eq!(obs.len(), 2);
    assert!(obs.iter().any(|g| isomorphic(g, &Graph::complete(5))));
    assert!(obs.iter().any(|g| isomorphic(g, &Graph::complete_multipartite(&[2, 2, 2]).unwrap())));
}

#[test]
fn regular_sweeps() {
    let r = regular_family_sweep(3, &b()).unwrap();
    assert!(r.holds());
    assert!(r.tight.is_none());
    let r = regular_family_sweep(4, &b()).unwrap();
    assert_eq!(r.orders, [(6, 1, 1), (7, 0, 0)]);
    assert!(r.holds());
}

#[test]
fn zero_order_rejected() {
    assert!(obstruction_search(&SearchSpec::new(ParamKind::MinDegree, 1, 0), &b()).is_err());
}
