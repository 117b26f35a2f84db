use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, low_mask, ones};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree decomposition; path decompositions use a path as the bag tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn is_path(&self) -> bool {
        let mut deg = vec![0; self.bags.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().all(|&d| d <= 2)
    }

    /// Checks vertex and edge coverage, that the bag graph is a tree and that
    /// the bags containing each vertex are connected in it.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.bags.len();
        let n = g.n();
        if k == 0 {
            return if n == 0 { Ok(()) } else { Err(Error::Invariant("no bags".into())) };
        }
        if self.edges.len() != k - 1 {
            return Err(Error::Invariant("bag graph is not a tree".into()));
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let reach = |keep: &dyn Fn(usize) -> bool| -> (usize, usize) {
            let total = (0..k).filter(|&i| keep(i)).count();
            let Some(start) = (0..k).find(|&i| keep(i)) else {
                return (0, 0);
            };
            let mut seen = vec![false; k];
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] && keep(y) {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            (count, total)
        };
        if reach(&|_| true).0 != k {
            return Err(Error::Invariant("bag graph is not connected".into()));
        }
        for v in 0..n {
            let (c, t) = reach(&|i| self.bags[i].contains(&v));
            if t == 0 {
                return Err(Error::Invariant(format!("vertex {v} is in no bag")));
            }
            if c != t {
                return Err(Error::Invariant(format!("bags containing {v} are not connected")));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(Error::Invariant(format!("edge {u}-{v} is in no bag")));
            }
        }
        Ok(())
    }
}

fn check_budget(g: &Graph, budget: &Budget, what: &'static str) -> Result<()> {
    let limit = budget.width_max_n.min(30);
    if g.n() > limit {
        return Err(Error::budget(what, limit, format!("graph has {} vertices", g.n())));
    }
    Ok(())
}

/// Exact treewidth with an optimal tree decomposition, by dynamic
/// programming over the sets of already-eliminated vertices.
pub fn treewidth(g: &Graph, budget: &Budget) -> Result<(usize, TreeDecomposition)> {
    check_budget(g, budget, "treewidth order")?;
    let n = g.n();
    if n == 0 {
        return Ok((0, TreeDecomposition { bags: vec![], edges: vec![] }));
    }
    let adj = g.masks();
    let full = low_mask(n) as usize;
    // tw[s]: best width of eliminating exactly the set s first
    let mut tw = vec![u8::MAX; full + 1];
    let mut choice = vec![0u8; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let set = s as u64;
        let mut best = u8::MAX;
        let mut arg = 0;
        for v in ones(set) {
            let rest = set & !bit(v);
            let prev = tw[rest as usize];
            if prev >= best {
                continue;
            }
            let q = eliminated_degree(&adj, rest, v) as u8;
            let w = prev.max(q);
            if w < best {
                best = w;
                arg = v as u8;
            }
        }
        tw[s] = best;
        choice[s] = arg;
    }
    let mut order = vec![0; n];
    let mut s = full;
    for i in (0..n).rev() {
        let v = choice[s] as usize;
        order[i] = v;
        s &= !(1 << v);
    }
    let td = decomposition_from_order(&adj, &order);
    let width = tw[full] as usize;
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Number of vertices outside `eliminated ∪ {v}` reachable from `v` through
/// `eliminated`: the degree of `v` when it is eliminated after that set.
fn eliminated_degree(adj: &[u64], eliminated: u64, v: usize) -> u32 {
    let mut comp = bit(v);
    let mut frontier = bit(v);
    while frontier != 0 {
        let mut next = 0;
        for u in ones(frontier) {
            next |= adj[u];
        }
        next &= eliminated & !comp;
        comp |= next;
        frontier = next;
    }
    let mut nbhd = 0;
    for u in ones(comp) {
        nbhd |= adj[u];
    }
    (nbhd & !comp & !eliminated).count_ones()
}

fn decomposition_from_order(adj: &[u64], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut fill: Vec<u64> = adj.to_vec();
    let mut bags = Vec::with_capacity(n);
    let mut higher = Vec::with_capacity(n);
    for &v in order {
        let later: u64 = ones(fill[v]).filter(|&u| pos[u] > pos[v]).fold(0, |m, u| m | bit(u));
        for u in ones(later) {
            fill[u] |= later & !bit(u);
        }
        let mut bag: Vec<usize> = ones(later | bit(v)).collect();
        bag.sort_unstable();
        bags.push(bag);
        higher.push(later);
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for i in 0..n {
        match ones(higher[i]).min_by_key(|&u| pos[u]) {
            Some(u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, edges }
}

/// Exact pathwidth with an optimal path decomposition, via the vertex
/// separation number of the best linear layout.
pub fn pathwidth(g: &Graph, budget: &Budget) -> Result<(usize, TreeDecomposition)> {
    check_budget(g, budget, "pathwidth order")?;
    let n = g.n();
    if n == 0 {
        return Ok((0, TreeDecomposition { bags: vec![], edges: vec![] }));
    }
    let adj = g.masks();
    let full = low_mask(n) as usize;
    let boundary = |s: u64| -> u32 { ones(s).filter(|&v| adj[v] & !s != 0).count() as u32 };
    let mut vs = vec![u8::MAX; full + 1];
    let mut choice = vec![0u8; full + 1];
    vs[0] = 0;
    for s in 1..=full {
        let set = s as u64;
        let mut best = u8::MAX;
        let mut arg = 0;
        for v in ones(set) {
            let prev = vs[(set & !bit(v)) as usize];
            if prev < best {
                best = prev;
                arg = v as u8;
            }
        }
        vs[s] = best.max(boundary(set) as u8);
        choice[s] = arg;
    }
    let mut order = vec![0; n];
    let mut s = full;
    for i in (0..n).rev() {
        let v = choice[s] as usize;
        order[i] = v;
        s &= !(1 << v);
    }
    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u64;
    for &v in &order {
        let front: u64 = ones(prefix).filter(|&u| adj[u] & !prefix != 0).fold(0, |m, u| m | bit(u));
        let mut bag: Vec<usize> = ones(front | bit(v)).collect();
        bag.sort_unstable();
        bags.push(bag);
        prefix |= bit(v);
    }
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    let td = TreeDecomposition { bags, edges };
    let width = vs[full] as usize;
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}
