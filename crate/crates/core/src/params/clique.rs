use alloc::format;
use alloc::vec::Vec;

use crate::bits::{bit, low_mask};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique as a vertex mask, by branch and bound with a greedy
/// colouring bound.
pub fn max_clique(g: &Graph, budget: &Budget) -> Result<u64> {
    let n = g.n();
    if n > budget.clique_max_n.min(64) {
        return Err(Error::budget("clique search order", budget.clique_max_n.min(64), format!("graph has {n} vertices")));
    }
    let adj = g.masks();
    let mut best = 0u64;
    expand(&adj, 0, low_mask(n), &mut best);
    Ok(best)
}

fn expand(adj: &[u64], current: u64, mut cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let (order, colours) = colour_sort(adj, cand);
    for i in (0..order.len()).rev() {
        if current.count_ones() + colours[i] <= best.count_ones() {
            return;
        }
        let v = order[i];
        expand(adj, current | bit(v), cand & adj[v], best);
        cand &= !bit(v);
    }
}

/// Greedy sequential colouring of the candidate set; returns vertices in
/// colour order with the colour count reached at each position.
fn colour_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut left = cand;
    let mut c = 0;
    while left != 0 {
        c += 1;
        let mut avail = left;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !adj[v];
            left &= !bit(v);
            order.push(v);
            colours.push(c);
        }
    }
    (order, colours)
}

/// `(α(G), ω(G))`.
pub fn independence_and_clique(g: &Graph, budget: &Budget) -> Result<(usize, usize)> {
    let omega = max_clique(g, budget)?.count_ones() as usize;
    let alpha = max_clique(&g.complement(), budget)?.count_ones() as usize;
    Ok((alpha, omega))
}
