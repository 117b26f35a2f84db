use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, low_mask, ones};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{has_minor, BranchPartition, MinorWitness};
use crate::params::{vertex_connectivity, vertex_disjoint_paths};

/// A minor under construction: the current graph and, for each of its
/// vertices, the branch set in the input graph.
struct Work {
    g: Graph,
    parts: Vec<u64>,
}

impl Work {
    /// Replaces the graph by the quotient over `groups` (connected vertex
    /// sets of the current graph); vertices in no group are deleted.
    fn regroup(&mut self, groups: &[u64]) {
        let parts = groups.iter().map(|&s| ones(s).fold(0, |m, v| m | self.parts[v])).collect();
        let rows: Vec<u64> = groups
            .iter()
            .enumerate()
            .map(|(i, &si)| {
                let reach = ones(si).fold(0, |m, v| m | self.g.mask(v));
                groups
                    .iter()
                    .enumerate()
                    .filter(|&(j, &sj)| j != i && reach & sj != 0)
                    .fold(0, |m, (j, _)| m | bit(j))
            })
            .collect();
        self.g = Graph::from_masks(&rows);
        self.parts = parts;
    }

    fn keep_and_merge(&mut self, keep: u64, merges: &[u64]) {
        let merged = merges.iter().fold(0, |m, &s| m | s);
        let mut groups: Vec<u64> = merges.to_vec();
        groups.extend(ones(keep & !merged).map(bit));
        groups.sort_by_key(|s| s.trailing_zeros());
        self.regroup(&groups);
    }

    fn contract(&mut self, u: usize, v: usize) {
        let all = low_mask(self.g.n());
        self.keep_and_merge(all, &[bit(u) | bit(v)]);
    }
}

fn low_set(g: &Graph) -> u64 {
    (0..g.n()).filter(|&v| g.degree(v) <= 3).fold(0, |m, v| m | bit(v))
}

fn is_clique(g: &Graph, s: u64) -> bool {
    ones(s).all(|v| g.mask(v) & s == s & !bit(v))
}

/// Connected components of the subgraph induced by `alive`, each as a mask,
/// ordered by lowest vertex.
fn components(g: &Graph, alive: u64) -> Vec<u64> {
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let reach = ones(frontier).fold(0, |m, v| m | g.mask(v)) & alive & !comp;
            comp |= reach;
            frontier = reach;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// The first separator of exactly `size` vertices, with the components it
/// leaves.
fn separator(g: &Graph, size: usize) -> Option<(Vec<usize>, Vec<u64>)> {
    let n = g.n();
    let all = low_mask(n);
    let mut pick = vec![0usize; size];
    fn rec(g: &Graph, all: u64, start: usize, i: usize, pick: &mut Vec<usize>) -> Option<Vec<u64>> {
        if i == pick.len() {
            let s = pick.iter().fold(0, |m, &v| m | bit(v));
            let comps = components(g, all & !s);
            return if comps.len() >= 2 { Some(comps) } else { None };
        }
        for v in start..g.n() {
            pick[i] = v;
            if let Some(c) = rec(g, all, v + 1, i + 1, pick) {
                return Some(c);
            }
        }
        None
    }
    if n < size + 2 {
        return None;
    }
    rec(g, all, 0, 0, &mut pick).map(|c| (pick, c))
}

/// A shortest path from `a` to `b` whose interior lies in `through`.
fn path_through(g: &Graph, a: usize, b: usize, through: u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = bit(a);
    let mut queue = alloc::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for w in ones(g.mask(v)) {
            if w == b {
                let mut path = vec![b, v];
                let mut x = v;
                while x != a {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            if seen & bit(w) == 0 && through & bit(w) != 0 {
                seen |= bit(w);
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Some cycle in the subgraph induced by `alive` without the edges inside
/// `skip`, in cyclic order.
fn find_cycle(g: &Graph, alive: u64, skip: u64) -> Option<Vec<usize>> {
    let nbrs = |v: usize| {
        let m = g.mask(v) & alive;
        if skip & bit(v) != 0 {
            m & !skip
        } else {
            m
        }
    };
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = 0u64;
    for root in ones(alive) {
        if seen & bit(root) != 0 {
            continue;
        }
        seen |= bit(root);
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in ones(nbrs(v)) {
                if seen & bit(w) == 0 {
                    seen |= bit(w);
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    let to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    for u in ones(alive) {
        for v in ones(nbrs(u)) {
            if u < v && parent[u] != v && parent[v] != u {
                let (pu, pv) = (to_root(u), to_root(v));
                let lca = *pu.iter().find(|x| pv.contains(x)).expect("same tree");
                let mut cyc: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
                cyc.push(lca);
                let back: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
                cyc.extend(back.into_iter().rev());
                return Some(cyc);
            }
        }
    }
    None
}

fn check_lemma_hypothesis(g: &Graph) -> Result<()> {
    if g.n() < 5 {
        return Err(Error::Invariant(format!("reduced graph has {} vertices", g.n())));
    }
    if !is_clique(g, low_set(g)) {
        return Err(Error::Invariant("vertices of degree at most 3 no longer form a clique".into()));
    }
    Ok(())
}

/// A 4-connected minor of `g`, obtained by repeatedly passing to a smaller
/// minor in which the vertices of degree at most 3 still form a clique:
/// contract an edge at a vertex of degree at most 2; keep one side of a
/// separation of order at most 2 (adding the separator edge via a path
/// through the other side); reduce the clique of degree-3 vertices; or
/// replace one side of a 3-separation by a triangle on the separator, using a
/// cycle and three disjoint paths to the separator on that side.
///
/// Requires at least 5 vertices with the vertices of degree at most 3
/// forming a clique, which holds whenever `δ(G) >= 4`.
pub fn find_4_connected_minor(g: &Graph) -> Result<MinorWitness> {
    if g.n() > 64 {
        return Err(Error::budget("4-connected minor host order", 64, format!("graph has {} vertices", g.n())));
    }
    if g.n() < 5 || !is_clique(g, low_set(g)) {
        return Err(Error::pre("needs at least 5 vertices with the vertices of degree at most 3 forming a clique"));
    }
    let mut w = Work {
        g: g.clone(),
        parts: (0..g.n()).map(bit).collect(),
    };
    loop {
        check_lemma_hypothesis(&w.g)?;
        if vertex_connectivity(&w.g) >= 4 {
            return Ok(MinorWitness {
                graph: w.g,
                parts: BranchPartition::from_masks(&w.parts),
            });
        }
        reduce(&mut w)?;
    }
}

fn reduce(w: &mut Work) -> Result<()> {
    let g = &w.g;
    let n = g.n();
    let all = low_mask(n);
    let k = low_set(g);
    if let Some(v) = (0..n).find(|&v| (1..=2).contains(&g.degree(v))) {
        let u = g.neighbors(v).next().expect("degree at least 1");
        w.contract(v, u);
        return Ok(());
    }
    let comps = components(g, all);
    if comps.len() >= 2 {
        let side = *comps.iter().find(|&&c| c & k == 0).expect("the clique lies in one component");
        w.keep_and_merge(side, &[]);
        return Ok(());
    }
    for size in 1..=2 {
        if let Some((s, comps)) = separator(g, size) {
            let smask = s.iter().fold(0, |m, &v| m | bit(v));
            let c2 = *comps.iter().find(|&&c| c & k == 0).expect("the clique lies in one component");
            if size == 1 {
                w.keep_and_merge(c2 | smask, &[]);
            } else {
                let other = *comps.iter().find(|&&c| c != c2).expect("at least two components");
                let path = path_through(g, s[0], s[1], other)
                    .ok_or_else(|| Error::Invariant("separator is not minimal".into()))?;
                let interior = path[1..path.len() - 1].iter().fold(0, |m, &v| m | bit(v));
                w.keep_and_merge(c2 | smask, &[bit(s[0]) | interior]);
            }
            return Ok(());
        }
    }
    // 3-connected with minimum degree 3; the low clique has degree-3 vertices
    let kv: Vec<usize> = ones(k).collect();
    let nk = ones(k).fold(0, |m, v| m | g.mask(v)) & !k;
    match kv.len() {
        0 => {}
        2 => {
            if nk.count_ones() >= 3 {
                w.contract(kv[0], kv[1]);
            } else {
                let u1 = nk.trailing_zeros() as usize;
                w.keep_and_merge(all, &[k | bit(u1)]);
            }
            return Ok(());
        }
        1 | 3 => {
            if nk.count_ones() != 3 {
                return Err(Error::Invariant(format!("clique of size {} has {} neighbours", kv.len(), nk.count_ones())));
            }
            if is_clique(g, nk) {
                w.keep_and_merge(all & !k, &[]);
            } else {
                let u1 = ones(nk)
                    .min_by_key(|&u| (g.mask(u) & nk).count_ones())
                    .expect("three neighbours");
                let mine = g.mask(u1) & k;
                if mine.count_ones() != 1 {
                    return Err(Error::Invariant("neighbour of the clique sees two of its vertices".into()));
                }
                w.contract(u1, mine.trailing_zeros() as usize);
            }
            return Ok(());
        }
        s => return Err(Error::Invariant(format!("clique of {s} degree-3 vertices in a 3-connected graph"))),
    }
    let (s, comps) =
        separator(g, 3).ok_or_else(|| Error::Invariant("no 3-separator in a graph that is not 4-connected".into()))?;
    let smask = s.iter().fold(0, |m, &v| m | bit(v));
    let c1 = comps[0];
    let cycle = find_cycle(g, c1 | smask, smask).ok_or_else(|| Error::Invariant("separated side is a forest".into()))?;
    let cmask = cycle.iter().fold(0, |m, &v| m | bit(v));
    let csub = g.induced(&ones(c1 | smask).collect::<Vec<_>>());
    let local: Vec<usize> = ones(c1 | smask).collect();
    let idx = |v: usize| local.iter().position(|&x| x == v).expect("local vertex");
    let from: Vec<usize> = cycle.iter().map(|&v| idx(v)).collect();
    let to: Vec<usize> = s.iter().map(|&v| idx(v)).collect();
    let mut paths = vertex_disjoint_paths(&csub, &from, &to, &[], 3);
    if paths.len() < 3 {
        return Err(Error::Invariant("fewer than three disjoint cycle-separator paths".into()));
    }
    for p in &mut paths {
        for v in p.iter_mut() {
            *v = local[*v];
        }
        let last_on_cycle = p.iter().rposition(|v| cmask & bit(*v) != 0).expect("starts on the cycle");
        p.drain(..last_on_cycle);
        let first_on_sep = p.iter().position(|v| smask & bit(*v) != 0).expect("ends on the separator");
        p.truncate(first_on_sep + 1);
    }
    // split the cycle into three arcs, each starting where a path leaves it
    let pos = |v: usize| cycle.iter().position(|&x| x == v).expect("on the cycle");
    paths.sort_by_key(|p| pos(p[0]));
    let starts: Vec<usize> = paths.iter().map(|p| pos(p[0])).collect();
    let mut merges = Vec::with_capacity(3);
    for i in 0..3 {
        let end = if i == 2 { starts[0] + cycle.len() } else { starts[i + 1] };
        let arc = (starts[i]..end).fold(0, |m, j| m | bit(cycle[j % cycle.len()]));
        merges.push(arc | paths[i].iter().fold(0, |m, &v| m | bit(v)));
    }
    w.keep_and_merge(all & !c1, &merges);
    Ok(())
}

/// Which of the two Halin–Jung minors was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HjTarget {
    K5,
    K222,
}

/// A `K_5` or `K_{2,2,2}` minor of a 4-connected graph, by direct minor
/// search (`K_5` first).
pub fn find_k5_or_k222(g: &Graph, budget: &Budget) -> Result<(HjTarget, MinorWitness)> {
    if vertex_connectivity(g) < 4 {
        return Err(Error::pre("graph is not 4-connected"));
    }
    let k5 = Graph::complete(5);
    if let Some(parts) = has_minor(g, &k5, budget)? {
        return Ok((HjTarget::K5, MinorWitness { graph: k5, parts }));
    }
    let k222 = Graph::complete_multipartite(&[2, 2, 2])?;
    if let Some(parts) = has_minor(g, &k222, budget)? {
        return Ok((HjTarget::K222, MinorWitness { graph: k222, parts }));
    }
    Err(Error::Invariant("4-connected graph without a K5 or K222 minor".into()))
}
