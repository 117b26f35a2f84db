use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Unit-capacity residual network.
struct Net {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

impl Net {
    fn new(nodes: usize) -> Self {
        Net {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.orig.push(c);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
        self.orig.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut q = VecDeque::new();
        q.push_back(s);
        via[s] = usize::MAX - 1;
        while let Some(x) = q.pop_front() {
            for &e in &self.adj[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && via[y] == usize::MAX {
                    via[y] = e;
                    if y == t {
                        let mut cur = t;
                        while cur != s {
                            let e = via[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    q.push_back(y);
                }
            }
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut f = 0;
        while f < limit && self.augment(s, t) {
            f += 1;
        }
        f
    }

    fn flow(&self, e: usize) -> u32 {
        self.orig[e].saturating_sub(self.cap[e])
    }
}

/// Up to `limit` pairwise vertex-disjoint paths from the set `a` to the set
/// `b` avoiding `forbidden`. A vertex in both sets is a one-vertex path.
/// Each returned path starts in `a` and ends in `b`.
pub fn vertex_disjoint_paths(g: &Graph, a: &[usize], b: &[usize], forbidden: &[usize], limit: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut allowed = vec![true; n];
    for &v in forbidden {
        allowed[v] = false;
    }
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = Net::new(2 * n + 2);
    for v in (0..n).filter(|&v| allowed[v]) {
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        if allowed[u] && allowed[v] {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
    }
    for &v in a {
        if allowed[v] {
            net.arc(s, 2 * v, 1);
        }
    }
    for &v in b {
        if allowed[v] {
            net.arc(2 * v + 1, t, 1);
        }
    }
    let k = net.max_flow(s, t, limit);
    let mut paths = Vec::with_capacity(k);
    let starts: Vec<usize> = net.adj[s].clone();
    for e in starts {
        if e % 2 == 1 || net.flow(e) == 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut x = net.to[e];
        loop {
            let v = x / 2;
            path.push(v);
            // through the vertex arc to the out node, then along a used arc
            let out = 2 * v + 1;
            let next = net.adj[out]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && net.flow(e) > 0)
                .expect("flow conservation");
            net.cap[next] += 1;
            let y = net.to[next];
            if y == t {
                break;
            }
            x = y;
        }
        paths.push(path);
    }
    paths
}

/// Size of a minimum vertex cut; `n - 1` for complete graphs and 0 for
/// disconnected graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i < n && i <= best {
        let ns: Vec<usize> = g.neighbors(i).collect();
        for j in 0..n {
            if j == i || g.has_edge(i, j) {
                continue;
            }
            let nt: Vec<usize> = g.neighbors(j).collect();
            let k = vertex_disjoint_paths(g, &ns, &nt, &[i, j], best).len();
            best = best.min(k);
        }
        i += 1;
    }
    best
}

/// Size of a minimum edge cut (0 for graphs with fewer than two vertices or
/// disconnected graphs).
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..n {
        let mut net = Net::new(n);
        for (u, v) in g.edges() {
            net.arc(u, v, 1);
            net.arc(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_connectivity() {
        for a in 1..4 {
            for b in a..5 {
                let g = Graph::complete_multipartite(&[a, b]).unwrap();
                assert_eq!(vertex_connectivity(&g), a, "K{a},{b}");
            }
        }
    }

    #[test]
    fn complete_and_disconnected() {
        assert_eq!(vertex_connectivity(&Graph::complete(6)), 5);
        assert_eq!(vertex_connectivity(&Graph::new(3)), 0);
        assert_eq!(vertex_connectivity(&Graph::path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(7).unwrap()), 2);
        assert_eq!(edge_connectivity(&Graph::cycle(7).unwrap()), 2);
        assert_eq!(edge_connectivity(&Graph::complete(5)), 4);
    }

    #[test]
    fn paths_are_disjoint_and_valid() {
        let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let p = vertex_disjoint_paths(&g, &[0, 1], &[4, 5], &[], 10);
        assert_eq!(p.len(), 2);
        let mut used = alloc::vec::Vec::new();
        for path in &p {
            assert!([0, 1].contains(&path[0]));
            assert!([4, 5].contains(path.last().unwrap()));
            for w in path.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            used.extend(path.iter().copied());
        }
        let len = used.len();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used.len(), len);
    }
}
