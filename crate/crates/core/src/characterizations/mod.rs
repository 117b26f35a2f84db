//! Closed-form predicates and constructive procedures, checked against the
//! search-based ground truth.

mod appendix;

use alloc::format;
use alloc::vec::Vec;

pub use appendix::{find_4_connected_minor, find_k5_or_k222, HjTarget};

use crate::bits::{bit, ones};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::is_minimal_obstruction;
use crate::params::ParamKind;

/// Whether the complete multipartite graph with the given part sizes is a
/// minimal forbidden minor of `X_{f,k}`, read off the part sizes.
///
/// For minimum degree and connectivity the obstructions are
/// `K_{a,b,...,b}` with `p >= 2` parts of size `b >= a`,
/// `k + 1 = a + (p-1)b`, and `a = b` when `p = 2`; for `k = 0` the only one
/// is `K_2`. For treewidth and pathwidth they are `K_{k+2}` and, for odd
/// `k >= 3`, `K_{2,...,2}` with `(k+3)/2` parts.
pub fn cmg_obstruction_predicate(shape: &[usize], f: ParamKind, k: usize) -> bool {
    if shape.is_empty() || shape.contains(&0) {
        return false;
    }
    let mut parts = shape.to_vec();
    parts.sort_unstable();
    match f {
        ParamKind::MinDegree | ParamKind::Connectivity => {
            if k == 0 {
                return parts == [1, 1];
            }
            let (a, rest) = (parts[0], &parts[1..]);
            let p = rest.len();
            if p < 2 {
                return false;
            }
            let b = rest[0];
            rest.iter().all(|&x| x == b) && k + 1 == a + (p - 1) * b && (p != 2 || a == b)
        }
        ParamKind::Treewidth | ParamKind::Pathwidth => {
            let complete = parts.len() == k + 2 && parts.iter().all(|&x| x == 1);
            let twos = k >= 3 && k % 2 == 1 && parts.len() == (k + 3) / 2 && parts.iter().all(|&x| x == 2);
            complete || twos
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallRegularReport {
    pub k: usize,
    pub n: usize,
    pub regular: bool,
    /// `(k+1)`-regular with `3n < 4(k+2)`.
    pub applies: bool,
    /// Fewest triangles through any edge (none for edgeless graphs).
    pub min_edge_triangles: Option<usize>,
    /// Connected, `(k+1)`-regular and every edge in at least `2n-2k-5`
    /// triangles.
    pub triangle_condition: bool,
    /// Ground-truth obstruction verdict, computed when the hypothesis holds.
    pub member: Option<bool>,
}

/// Tests the small-regular sufficient condition and, when it applies,
/// confirms membership of `D̂_k` by search.
pub fn small_regular_check(g: &Graph, k: usize, budget: &Budget) -> Result<SmallRegularReport> {
    let n = g.n();
    let regular = n > 0 && g.is_regular(k + 1);
    let applies = regular && 3 * n < 4 * (k + 2);
    let min_edge_triangles = g.edges().map(|(u, v)| g.common_neighbors(u, v)).min();
    let need = (2 * n).saturating_sub(2 * k + 5);
    let triangle_condition = regular && g.is_connected() && min_edge_triangles.is_none_or(|t| t >= need);
    let member = if applies {
        Some(is_minimal_obstruction(g, ParamKind::MinDegree, k, budget)?.verdict)
    } else {
        None
    };
    Ok(SmallRegularReport {
        k,
        n,
        regular,
        applies,
        min_edge_triangles,
        triangle_condition,
        member,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddVertexReport {
    /// `G + v(S)` is in `D̂_{k+1}`.
    pub extended_is_obstruction: bool,
    /// `S` is exactly the set of vertices of degree `k+1`.
    pub s_is_low_set: bool,
}

impl AddVertexReport {
    pub fn agree(&self) -> bool {
        self.extended_is_obstruction == self.s_is_low_set
    }
}

/// Adds a vertex adjacent to `s` to a graph `g` of `D̂_k` and evaluates both
/// sides of the add-vertex equivalence independently.
pub fn add_vertex_characterisation(g: &Graph, s: &[usize], k: usize, budget: &Budget) -> Result<AddVertexReport> {
    if !is_minimal_obstruction(g, ParamKind::MinDegree, k, budget)?.verdict {
        return Err(Error::pre(format!("graph is not a minimal obstruction for min degree {k}")));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::pre(format!("vertex {v} out of range")));
    }
    let smask = s.iter().fold(0u64, |m, &v| m | bit(v));
    let low = (0..g.n()).filter(|&v| g.degree(v) == k + 1).fold(0u64, |m, v| m | bit(v));
    let ext = g.with_vertex(&ones(smask).collect::<Vec<_>>());
    Ok(AddVertexReport {
        extended_is_obstruction: is_minimal_obstruction(&ext, ParamKind::MinDegree, k + 1, budget)?.verdict,
        s_is_low_set: smask == low,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VidaReport {
    /// `δ(G) - 1`.
    pub k: usize,
    /// Number of vertices above minimum degree.
    pub p: usize,
    /// `3|L| < 4(k+2-p)`, where `L` is the minimum-degree set.
    pub few_lows: bool,
    pub highs_independent: bool,
    pub highs_dominate_lows: bool,
}

impl VidaReport {
    pub fn holds(&self) -> bool {
        self.few_lows && self.highs_independent && self.highs_dominate_lows
    }
}

/// The hypotheses of the dominating-vertices sufficient condition for
/// membership of `D̂_k` with `k = δ(G) - 1`. Fails on graphs with no edges.
pub fn vida_conditions(g: &Graph) -> Result<VidaReport> {
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(Error::pre("needs minimum degree at least 1"));
    }
    let delta = g.min_degree();
    let k = delta - 1;
    let lows: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    let highs: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > delta).collect();
    let p = highs.len();
    Ok(VidaReport {
        k,
        p,
        few_lows: k + 2 > p && 3 * lows.len() < 4 * (k + 2 - p),
        highs_independent: highs.iter().all(|&x| highs.iter().all(|&y| !g.has_edge(x, y))),
        highs_dominate_lows: highs.iter().all(|&x| lows.iter().all(|&y| g.has_edge(x, y))),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    /// At least `k+2` vertices of degree `k+1`.
    pub many_lows: bool,
    /// Every edge has a common neighbour of degree `k+1`.
    pub common_neighbour: bool,
    /// Every connected induced subgraph `H` with `2 <= |H| <= 5` and at most
    /// `(k+1)(|H|-1)/2` edges has an outside vertex `x` with at least
    /// `deg(x) - k + 1` neighbours in `H`.
    pub sparse_subgraph: bool,
    /// Every clique of 2 to `k+1` vertices has an outside vertex adjacent to
    /// two of its vertices.
    pub clique_neighbour: bool,
}

impl AuditReport {
    pub fn all(&self) -> bool {
        self.many_lows && self.common_neighbour && self.sparse_subgraph && self.clique_neighbour
    }
}

/// Checks the structural properties every graph of `D̂_k` must have. The
/// graph is first verified to be in `D̂_k`.
pub fn audit_obstruction_properties(g: &Graph, k: usize, budget: &Budget) -> Result<AuditReport> {
    if g.n() > 64 {
        return Err(Error::budget("audit host order", 64, format!("graph has {} vertices", g.n())));
    }
    if !is_minimal_obstruction(g, ParamKind::MinDegree, k, budget)?.verdict {
        return Err(Error::pre(format!("graph is not a minimal obstruction for min degree {k}")));
    }
    let n = g.n();
    let low = |v: usize| g.degree(v) == k + 1;
    let many_lows = (0..n).filter(|&v| low(v)).count() >= k + 2;
    let common_neighbour = g
        .edges()
        .all(|(u, v)| (0..n).any(|x| x != u && x != v && low(x) && g.has_edge(x, u) && g.has_edge(x, v)));
    let mut sparse_subgraph = true;
    let mut clique_neighbour = true;
    let outside_hit = |s: u64, need: &dyn Fn(usize) -> usize| {
        (0..n).any(|x| s & bit(x) == 0 && (g.mask(x) & s).count_ones() as usize >= need(x).max(2))
    };
    for_each_connected_set(g, 5.max(k + 1), &mut |s, size| {
        let m: usize = ones(s).map(|v| (g.mask(v) & s).count_ones() as usize).sum::<usize>() / 2;
        if size <= 5 && 2 * m <= (k + 1) * (size - 1) && !outside_hit(s, &|x| (g.degree(x) + 1).saturating_sub(k)) {
            sparse_subgraph = false;
        }
        if size <= k + 1 && 2 * m == size * (size - 1) && !outside_hit(s, &|_| 2) {
            clique_neighbour = false;
        }
    });
    Ok(AuditReport {
        many_lows,
        common_neighbour,
        sparse_subgraph,
        clique_neighbour,
    })
}

/// Calls `f` once for every connected vertex set with 2 to `max` vertices.
fn for_each_connected_set(g: &Graph, max: usize, f: &mut dyn FnMut(u64, usize)) {
    // each set is grown from its lowest vertex; a candidate that is skipped
    // stays excluded for the rest of that branch
    fn grow(g: &Graph, set: u64, cand: u64, excluded: u64, size: usize, max: usize, f: &mut dyn FnMut(u64, usize)) {
        if size >= 2 {
            f(set, size);
        }
        if size == max {
            return;
        }
        let mut excluded = excluded;
        let mut cand = cand;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            let next = set | bit(v);
            grow(g, next, (cand | g.mask(v)) & !next & !excluded, excluded | bit(v), size + 1, max, f);
            excluded |= bit(v);
        }
    }
    for r in 0..g.n() {
        let excluded = (bit(r) - 1) | bit(r);
        grow(g, bit(r), g.mask(r) & !excluded, excluded, 1, max, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{c5_join_k3bar, d3, icosahedron, k_1222, plus_construction};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn predicate_examples() {
        assert!(cmg_obstruction_predicate(&[1, 2, 2, 2], ParamKind::MinDegree, 4));
        assert!(!cmg_obstruction_predicate(&[1, 2, 2], ParamKind::MinDegree, 2));
        assert!(!cmg_obstruction_predicate(&[2, 3], ParamKind::MinDegree, 1));
        assert!(cmg_obstruction_predicate(&[2, 2, 2], ParamKind::Treewidth, 3));
        assert!(!cmg_obstruction_predicate(&[2, 2], ParamKind::Treewidth, 1));
        assert!(cmg_obstruction_predicate(&[1, 1], ParamKind::Connectivity, 0));
        assert!(cmg_obstruction_predicate(&[1; 5], ParamKind::Pathwidth, 3));
    }

    #[test]
    fn small_regular_examples() {
        let r = small_regular_check(&Graph::complete(7), 5, &b()).unwrap();
        assert!(r.applies && r.triangle_condition);
        assert_eq!(r.member, Some(true));
        let r = small_regular_check(&c5_join_k3bar(), 4, &b()).unwrap();
        assert!(!r.applies);
        let r = small_regular_check(&icosahedron(), 4, &b()).unwrap();
        assert!(!r.applies);
        assert_eq!(r.min_edge_triangles, Some(2));
    }

    #[test]
    fn add_vertex_examples() {
        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let r = add_vertex_characterisation(&k222, &all, 3, &b()).unwrap();
        assert!(r.extended_is_obstruction && r.s_is_low_set);
        let r = add_vertex_characterisation(&k222, &all[1..], 3, &b()).unwrap();
        assert!(!r.extended_is_obstruction && !r.s_is_low_set);
        let r = add_vertex_characterisation(&Graph::complete(4), &[0, 1, 2, 3], 2, &b()).unwrap();
        assert!(r.agree() && r.extended_is_obstruction);
        assert!(add_vertex_characterisation(&Graph::complete(5), &[0], 2, &b()).is_err());
    }

    #[test]
    fn vida_instances() {
        let r = vida_conditions(&k_1222()).unwrap();
        assert_eq!((r.k, r.p), (4, 1));
        assert!(r.holds());
        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let r = vida_conditions(&k222).unwrap();
        assert_eq!((r.k, r.p), (3, 0));
        assert!(r.holds());
        let k2222 = plus_construction(&k222, 2);
        assert!(vida_conditions(&k2222).unwrap().holds());
        let r = vida_conditions(&plus_construction(&Graph::complete(4), 1)).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn audits() {
        for (g, k) in [(Graph::complete(6), 4), (d3(), 4), (Graph::complete(4), 2), (icosahedron(), 4)] {
            let r = audit_obstruction_properties(&g, k, &b()).unwrap();
            assert!(r.all(), "{r:?}");
        }
        assert!(audit_obstruction_properties(&Graph::cycle(5).unwrap(), 1, &b()).is_err());
    }

    #[test]
    fn connected_sets_count() {
        // P4 has 3 + 2 + 1 connected sets of sizes 2, 3, 4
        let mut count = 0;
        for_each_connected_set(&Graph::path(4), 4, &mut |_, _| count += 1);
        assert_eq!(count, 6);
        let mut count = 0;
        for_each_connected_set(&Graph::complete(5), 5, &mut |_, _| count += 1);
        assert_eq!(count, 32 - 5 - 1);
    }
}
