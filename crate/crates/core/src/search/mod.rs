//! Isomorph-free enumeration and bounded-order obstruction search.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::budget::Budget;
use crate::canon::{canonical_form, canonical_graph, canonical_labeling};
use crate::constructions::tight_regular_example;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{has_minor, is_minimal_obstruction, MinorWitness};
use crate::params::ParamKind;

/// Restrictions on the enumerated graphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub regular: Option<usize>,
    pub min_degree: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        if g.n() == 0 {
            return *self == Filters::default();
        }
        (!self.connected || g.is_connected())
            && self.regular.is_none_or(|r| g.is_regular(r))
            && self.min_degree.is_none_or(|d| g.min_degree() >= d)
    }

    /// Whether an intermediate graph on `n` vertices can still grow into an
    /// accepted graph on `target` vertices. Removing a vertex lowers every
    /// degree by at most one, so degree bounds pass to the parents.
    fn viable(&self, g: &Graph, target: usize) -> bool {
        let slack = target - g.n();
        if g.n() == 0 {
            return true;
        }
        let lower = self.min_degree.into_iter().chain(self.regular).max();
        if lower.is_some_and(|d| g.min_degree() + slack < d) {
            return false;
        }
        !self.regular.is_some_and(|r| g.max_degree() > r)
    }
}

/// All children of `parent` (one new vertex, joined to any subset) that are
/// canonical augmentations: the new vertex lies in the automorphism orbit of
/// the vertex with the highest canonical label. Isomorphic children of the
/// same parent are reported once. Every graph on `n + 1` vertices arises from
/// exactly one isomorphism class of parents this way.
pub fn canonical_children(parent: &Graph) -> Vec<Graph> {
    let n = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << n) {
        let nbrs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let child = parent.with_vertex(&nbrs);
        let lab = canonical_labeling(&child);
        let last = lab.perm.iter().position(|&p| p == n).expect("a vertex gets the top label");
        let orbits = lab.orbits();
        if orbits[last] != orbits[n] {
            continue;
        }
        if seen.insert(lab.form.clone()) {
            out.push(child.permuted(&lab.perm));
        }
    }
    out
}

fn check_order(n: usize, budget: &Budget) -> Result<()> {
    if n > budget.enumerate_max_n || n > 63 {
        return Err(Error::budget(
            "enumeration order",
            budget.enumerate_max_n.min(63),
            format!("asked for graphs on {n} vertices"),
        ));
    }
    Ok(())
}

/// One canonically labelled representative of every isomorphism class of
/// graphs on `n` vertices passing `filters`, sorted by canonical form.
pub fn enumerate_graphs(n: usize, filters: &Filters, budget: &Budget) -> Result<Vec<Graph>> {
    check_order(n, budget)?;
    let mut level = vec![Graph::new(0)];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &level {
            for c in canonical_children(p) {
                if filters.viable(&c, n) {
                    next.push(c);
                }
            }
            if next.len() > budget.max_states {
                return Err(Error::budget("enumerated graphs", budget.max_states, format!("while building order {}", p.n() + 1)));
            }
        }
        level = next;
    }
    level.retain(|g| filters.accepts(g));
    sort_canonically(&mut level);
    Ok(level)
}

/// Sorts graphs by canonical form and replaces each by its canonical copy.
pub fn sort_canonically(gs: &mut Vec<Graph>) {
    let mut keyed: Vec<_> = gs.drain(..).map(|g| (canonical_form(&g), canonical_graph(&g))).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    gs.extend(keyed.into_iter().map(|(_, g)| g));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub f: ParamKind,
    pub k: usize,
    pub max_order: usize,
    pub filters: Filters,
}

impl SearchSpec {
    pub fn new(f: ParamKind, k: usize, max_order: usize) -> Self {
        SearchSpec {
            f,
            k,
            max_order,
            filters: Filters::default(),
        }
    }

    /// The user filters strengthened by conditions every obstruction meets:
    /// it is connected, and for minimum degree and connectivity it has
    /// minimum degree at least `k+1`.
    pub fn candidate_filters(&self) -> Filters {
        let mut f = self.filters;
        f.connected = true;
        if matches!(self.f, ParamKind::MinDegree | ParamKind::Connectivity) {
            f.min_degree = Some(f.min_degree.unwrap_or(0).max(self.k + 1));
        }
        f
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub spec: SearchSpec,
    /// Canonically sorted.
    pub obstructions: Vec<Graph>,
    /// Every obstruction with at most this many vertices (and passing the
    /// filters) is listed.
    pub complete_up_to: usize,
    pub candidates: usize,
}

/// Candidates on exactly `n` vertices for a search.
pub fn obstruction_candidates(spec: &SearchSpec, n: usize, budget: &Budget) -> Result<Vec<Graph>> {
    let mut gs = enumerate_graphs(n, &spec.candidate_filters(), budget)?;
    if spec.f == ParamKind::MinDegree {
        // high-degree vertices must be pairwise nonadjacent
        let t = spec.k + 1;
        gs.retain(|g| g.min_degree() == t && g.edges().all(|(u, v)| g.degree(u) == t || g.degree(v) == t));
    }
    Ok(gs)
}

/// All minimal forbidden minors of `X_{f,k}` with at most `max_order`
/// vertices passing the filters.
pub fn obstruction_search(spec: &SearchSpec, budget: &Budget) -> Result<SearchOutcome> {
    if spec.max_order == 0 {
        return Err(Error::pre("max_order must be at least 1"));
    }
    let mut found = Vec::new();
    let mut candidates = 0;
    for n in 1..=spec.max_order {
        for g in obstruction_candidates(spec, n, budget)? {
            candidates += 1;
            if is_minimal_obstruction(&g, spec.f, spec.k, budget)?.verdict {
                found.push(g);
            }
        }
    }
    sort_canonically(&mut found);
    Ok(SearchOutcome {
        spec: *spec,
        obstructions: found,
        complete_up_to: spec.max_order,
        candidates,
    })
}

#[derive(Clone, Debug)]
pub struct RegularSweep {
    pub k: usize,
    /// `(n, graphs, members)` for every order `n < 4(k+2)/3`.
    pub orders: Vec<(usize, usize, usize)>,
    /// The regular graphs that failed membership (should be none).
    pub failures: Vec<Graph>,
    /// For `k = 1 mod 3`: the tight example, whether it is a member, and a
    /// `K_{k+2}` minor of it.
    pub tight: Option<(Graph, bool, Option<MinorWitness>)>,
}

impl RegularSweep {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.tight.as_ref().is_none_or(|(_, member, w)| !member && w.is_some())
    }
}

/// Enumerates every `(k+1)`-regular graph with fewer than `4(k+2)/3`
/// vertices and verifies each is in `D̂_k`; for `k = 1 mod 3` also checks
/// that the tight example on `4(k+2)/3` vertices is not.
pub fn regular_family_sweep(k: usize, budget: &Budget) -> Result<RegularSweep> {
    let filters = Filters {
        connected: false,
        regular: Some(k + 1),
        min_degree: None,
    };
    let mut orders = Vec::new();
    let mut failures = Vec::new();
    let mut n = k + 2;
    while 3 * n < 4 * (k + 2) {
        let gs = enumerate_graphs(n, &filters, budget)?;
        let mut members = 0;
        for g in &gs {
            if is_minimal_obstruction(g, ParamKind::MinDegree, k, budget)?.verdict {
                members += 1;
            } else {
                failures.push(g.clone());
            }
        }
        orders.push((n, gs.len(), members));
        n += 1;
    }
    let tight = if k % 3 == 1 {
        let g = tight_regular_example(k)?;
        let member = is_minimal_obstruction(&g, ParamKind::MinDegree, k, budget)?.verdict;
        let target = Graph::complete(k + 2);
        let w = has_minor(&g, &target, budget)?.map(|parts| MinorWitness { graph: target, parts });
        Some((g, member, w))
    } else {
        None
    };
    Ok(RegularSweep {
        k,
        orders,
        failures,
        tight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_counts() {
        let none = Filters::default();
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n, &none, &b()).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
        let connected = Filters {
            connected: true,
            ..Filters::default()
        };
        let c: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, &connected, &b()).unwrap().len()).collect();
        assert_eq!(c, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn cubic_on_six() {
        let f = Filters {
            regular: Some(3),
            ..Filters::default()
        };
        let gs = enumerate_graphs(6, &f, &b()).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.iter().any(|g| isomorphic(g, &Graph::complete_multipartite(&[3, 3]).unwrap())));
    }

    #[test]
    fn small_obstruction_sets() {
        let out = obstruction_search(&SearchSpec::new(ParamKind::MinDegree, 0, 4), &b()).unwrap();
        assert_eq!(out.obstructions, [Graph::complete(2)]);
        let out = obstruction_search(&SearchSpec::new(ParamKind::MinDegree, 1, 5), &b()).unwrap();
        assert_eq!(out.obstructions, [Graph::complete(3)]);
        let out = obstruction_search(&SearchSpec::new(ParamKind::Treewidth, 1, 5), &b()).unwrap();
        assert_eq!(out.obstructions, [Graph::complete(3)]);
    }

    #[test]
    fn regular_sweep_small() {
        let r = regular_family_sweep(2, &b()).unwrap();
        assert_eq!(r.orders, [(4, 1, 1), (5, 0, 0)]);
        assert!(r.holds());
        assert!(enumerate_graphs(11, &Filters::default(), &b()).is_err());
    }
}
