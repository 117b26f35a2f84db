#![allow(dead_code)]

use mforge_core::blocks::TaggedTree;
use mforge_core::constructions::LowHighTree;
use mforge_core::Graph;
use proptest::prelude::*;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

pub fn arb_graph_with_edge(max_n: usize) -> impl Strategy<Value = (Graph, (usize, usize))> {
    arb_graph(2, max_n).prop_filter("needs an edge", |g| g.m() > 0).prop_flat_map(|g| {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        (Just(g), proptest::sample::select(edges))
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Grows a low-high tree from the star with two leaves: op `(false, i)` adds
/// a leaf to the `i`-th high vertex, op `(true, i)` hangs a new high vertex
/// with one leaf below the `i`-th leaf.
pub fn grow_low_high(ops: &[(bool, usize)], max_n: usize) -> LowHighTree {
    let mut high = vec![true, false, false];
    let mut edges = vec![(0, 1), (0, 2)];
    for &(extend, i) in ops {
        let n = high.len();
        if extend {
            if n + 2 > max_n {
                continue;
            }
            let leaves: Vec<usize> = (0..n).filter(|&v| !high[v] && edges.iter().filter(|&&(a, b)| a == v || b == v).count() == 1).collect();
            let l = leaves[i % leaves.len()];
            high.extend([true, false]);
            edges.extend([(l, n), (n, n + 1)]);
        } else {
            if n + 1 > max_n {
                continue;
            }
            let highs: Vec<usize> = (0..n).filter(|&v| high[v]).collect();
            high.push(false);
            edges.push((highs[i % highs.len()], n));
        }
    }
    LowHighTree::new(high, edges).expect("growth keeps the low-high conditions")
}

pub fn arb_low_high(max_n: usize) -> impl Strategy<Value = LowHighTree> {
    proptest::collection::vec((any::<bool>(), 0usize..64), 0..24).prop_map(move |ops| grow_low_high(&ops, max_n))
}

/// Grows a block-shaped tree (leaves are blocks, cut nodes have degree at
/// least 2) from block-cut-block: op `(false, i)` adds a leaf block at a cut
/// node, op `(true, i)` adds a cut node and a leaf block at a block node.
pub fn grow_block_tree(ops: &[(bool, usize)], max_n: usize) -> TaggedTree {
    let mut cut = vec![false, true, false];
    let mut edges = vec![(0, 1), (1, 2)];
    for &(extend, i) in ops {
        let n = cut.len();
        let pick: Vec<usize> = (0..n).filter(|&v| cut[v] != extend).collect();
        let v = pick[i % pick.len()];
        if extend {
            if n + 2 > max_n {
                continue;
            }
            cut.extend([true, false]);
            edges.extend([(v, n), (n, n + 1)]);
        } else {
            if n + 1 > max_n {
                continue;
            }
            cut.push(false);
            edges.push((v, n));
        }
    }
    TaggedTree { cut, edges }
}

pub fn arb_block_tree(max_n: usize) -> impl Strategy<Value = TaggedTree> {
    proptest::collection::vec((any::<bool>(), 0usize..64), 0..10).prop_map(move |ops| grow_block_tree(&ops, max_n))
}

/// Every labelled graph on `n` vertices as its edge bitmask.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |mask| {
        let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
        graph_from_bits(n, &bits)
    })
}

/// Isomorphism-class key by brute force: the lexicographically smallest
/// upper-triangle bit string over all vertex orders.
pub fn brute_key(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut key = 0u64;
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(perm[u], perm[v]) {
                    key |= 1 << i;
                }
                i += 1;
            }
        }
        best = best.min(key);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Brute-force connectivity check over vertex subsets.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0..n)
        .find(|&s| {
            (0u64..1 << n).filter(|m| m.count_ones() as usize == s).any(|m| {
                let keep: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 0).collect();
                !g.induced(&keep).is_connected()
            })
        })
        .expect("deleting all but two nonadjacent vertices disconnects")
}

/// Every partition of `n` into positive parts, parts nonincreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Treewidth as the best elimination order, tried exhaustively.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut h = g.clone();
        let mut width = 0;
        let mut gone = vec![false; n];
        for &v in &perm {
            let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && u != v && h.has_edge(u, v)).collect();
            width = width.max(nb.len());
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    h.add_edge(a, b);
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Pathwidth as the vertex separation number, over all linear orders.
pub fn brute_pathwidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut sep = 0;
        for i in 0..n {
            let c = (0..=i).filter(|&a| (i + 1..n).any(|b| g.has_edge(perm[a], perm[b]))).count();
            sep = sep.max(c);
        }
        best = best.min(sep);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Largest independent set and clique by subset enumeration.
pub fn brute_alpha_omega(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let (mut a, mut w) = (0, 0);
    for m in 0u64..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let pairs = || vs.iter().enumerate().flat_map(|(i, &x)| vs[i + 1..].iter().map(move |&y| (x, y)));
        if pairs().all(|(x, y)| !g.has_edge(x, y)) {
            a = a.max(vs.len());
        }
        if pairs().all(|(x, y)| g.has_edge(x, y)) {
            w = w.max(vs.len());
        }
    }
    (a, w)
}

/// Every minor of `g` up to isomorphism, keyed by `brute_key` and order.
pub fn all_minors(g: &Graph) -> std::collections::HashMap<(usize, u64), Graph> {
    let mut seen = std::collections::HashMap::new();
    let mut stack = vec![g.clone()];
    while let Some(h) = stack.pop() {
        if seen.insert((h.n(), brute_key(&h)), h.clone()).is_some() {
            continue;
        }
        let edges: Vec<(usize, usize)> = h.edges().collect();
        for &(u, v) in &edges {
            stack.push(h.delete_edge(u, v).unwrap());
            stack.push(h.contract_edge(u, v).unwrap());
        }
        for v in 0..h.n() {
            stack.push(h.delete_vertex(v).unwrap());
        }
    }
    seen
}

/// Quotients by every partition of `V(g)` into connected parts.
pub fn brute_contraction_minors(g: &Graph) -> std::collections::HashSet<(usize, u64)> {
    fn go(g: &Graph, v: usize, parts: &mut Vec<Vec<usize>>, out: &mut std::collections::HashSet<(usize, u64)>) {
        if v == g.n() {
            if parts.iter().all(|p| g.is_connected_set(p)) {
                let mut q = Graph::new(parts.len());
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        if parts[i].iter().any(|&a| parts[j].iter().any(|&b| g.has_edge(a, b))) {
                            q.add_edge(i, j);
                        }
                    }
                }
                out.insert((q.n(), brute_key(&q)));
            }
            return;
        }
        for i in 0..parts.len() {
            parts[i].push(v);
            go(g, v + 1, parts, out);
            parts[i].pop();
        }
        parts.push(vec![v]);
        go(g, v + 1, parts, out);
        parts.pop();
    }
    let mut out = std::collections::HashSet::new();
    go(g, 0, &mut Vec::new(), &mut out);
    out.remove(&(g.n(), brute_key(g)));
    out
}
