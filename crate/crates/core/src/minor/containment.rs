use alloc::vec;
use alloc::vec::Vec;

use super::lattice::{Explorer, Moves, State};
use super::BranchPartition;
use crate::bits::bit;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// Decides whether `h` is a minor of `g`, returning branch sets (part `i`
/// for vertex `i` of `h`) when it is.
///
/// `h` is a minor of `g` exactly when it is a spanning subgraph of an
/// induced minor of `g` with `|h|` vertices; when both graphs are connected
/// the branch sets can be grown to cover `g`, so contraction minors suffice.
pub fn has_minor(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<BranchPartition>> {
    let (nh, mh) = (h.n(), h.m());
    if nh > g.n() || mh > g.m() {
        return Ok(None);
    }
    if nh == 0 {
        return Ok(Some(BranchPartition { parts: vec![] }));
    }
    let root = State::root(g)?;
    let witness = |s: &State, phi: &[usize]| BranchPartition::from_masks(&phi.iter().map(|&q| s.parts[q]).collect::<Vec<_>>());
    if g.n() == nh {
        if let Some(phi) = spanning_embedding(h, g) {
            return Ok(Some(witness(&root, &phi)));
        }
    }
    let contract_only = g.is_connected() && h.is_connected();
    let moves = if contract_only { Moves::Contract } else { Moves::Induced };
    let mut ex = Explorer::new(budget, moves);
    let prune = |q: &Graph| {
        let extra = q.n().saturating_sub(nh);
        q.n() < nh || q.m() < mh + if contract_only { extra } else { 0 }
    };
    let mut found: Option<Vec<usize>> = None;
    let mut accept = |s: &State| {
        if s.g.n() != nh {
            return Ok(false);
        }
        found = spanning_embedding(h, &s.g);
        Ok(found.is_some())
    };
    let hit = ex.search(&root, &prune, &mut accept)?;
    Ok(hit.map(|s| witness(&s, found.as_deref().expect("accepted state has an embedding"))))
}

/// A bijection `phi` from `V(h)` to `V(q)` with `phi(x)phi(y)` an edge of
/// `q` for every edge `xy` of `h`, if one exists (`|h| == |q|`).
pub(crate) fn spanning_embedding(h: &Graph, q: &Graph) -> Option<Vec<usize>> {
    let n = h.n();
    if q.n() != n || q.m() < h.m() {
        return None;
    }
    let mut hdeg: Vec<usize> = h.degrees();
    let mut qdeg: Vec<usize> = q.degrees();
    hdeg.sort_unstable_by(|a, b| b.cmp(a));
    qdeg.sort_unstable_by(|a, b| b.cmp(a));
    if hdeg.iter().zip(&qdeg).any(|(a, b)| a > b) {
        return None;
    }
    // place high-degree vertices first, preferring neighbours of placed ones
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| (order.iter().filter(|&&y| h.has_edge(x, y)).count(), h.degree(x), n - x))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let qmask = q.masks();
    let mut phi = vec![usize::MAX; n];
    if embed(h, q, &qmask, &order, 0, 0, &mut phi) {
        Some(phi)
    } else {
        None
    }
}

fn embed(h: &Graph, q: &Graph, qmask: &[u64], order: &[usize], i: usize, used: u64, phi: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    let dx = h.degree(x);
    'cand: for w in 0..q.n() {
        if used & bit(w) != 0 || q.degree(w) < dx {
            continue;
        }
        for &y in &order[..i] {
            if h.has_edge(x, y) && qmask[w] & bit(phi[y]) == 0 {
                continue 'cand;
            }
        }
        phi[x] = w;
        if embed(h, q, qmask, order, i + 1, used | bit(w), phi) {
            return true;
        }
    }
    phi[x] = usize::MAX;
    false
}
