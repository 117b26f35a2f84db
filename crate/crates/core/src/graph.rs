//! Simple undirected graphs stored as adjacency bit rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a row of `words` 64-bit words; bit `u` of row `v` is set
/// iff `uv` is an edge. Rows are kept symmetric with an empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::pre(alloc::format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::pre(alloc::format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from one neighbour mask per vertex.
    /// The masks must already be symmetric and loop-free.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64, "from_masks needs n <= 64");
        debug_assert!(masks
            .iter()
            .enumerate()
            .all(|(v, &m)| m & bits::bit(v) == 0 && bits::ones(m).all(|u| masks[u] & bits::bit(v) != 0)));
        Graph {
            n,
            words: 1,
            rows: masks.to_vec(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbour mask of `v`; only valid while `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    /// All neighbour masks; only valid while `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64");
        (0..self.n).map(|v| self.rows[v * self.words]).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v}");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == r)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits::ones(w).map(move |b| i * 64 + b))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_complete(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Contracts the edge `vw`. The merged vertex keeps the smaller of the two
    /// labels; labels above the larger one shift down by one.
    pub fn contract_edge(&self, v: usize, w: usize) -> Result<Graph> {
        if v >= self.n || w >= self.n || v == w || !self.has_edge(v, w) {
            return Err(Error::pre(alloc::format!("{v}{w} is not an edge")));
        }
        let (keep, gone) = if v < w { (v, w) } else { (w, v) };
        Ok(self.merge_vertices(keep, gone))
    }

    /// Identifies `gone` into `keep` regardless of adjacency, then drops `gone`.
    pub(crate) fn merge_vertices(&self, keep: usize, gone: usize) -> Graph {
        let relabel = |x: usize| if x > gone { x - 1 } else { x };
        let mut out = Graph::new(self.n - 1);
        for (a, b) in self.edges() {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            if a != b {
                out.add_edge(relabel(a), relabel(b));
            }
        }
        out
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::pre(alloc::format!("vertex {v} not in graph")));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v || !self.has_edge(u, v) {
            return Err(Error::pre(alloc::format!("{u}{v} is not an edge")));
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes `i`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut out = Graph::new(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut out = Graph::new(self.n);
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.add_edge(u, v);
                }
            }
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut out = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            out.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            out.add_edge(u + self.n, v + self.n);
        }
        out
    }

    /// The join `self * other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut out = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                out.add_edge(u, self.n + v);
            }
        }
        out
    }

    /// Adds a new vertex `n` adjacent to every vertex in `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Graph {
        let mut out = Graph::new(self.n + 1);
        for (u, v) in self.edges() {
            out.add_edge(u, v);
        }
        for &u in nbrs {
            out.add_edge(u, self.n);
        }
        out
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::pre("a cycle needs at least 3 vertices"));
        }
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Complete multipartite graph; part `i` occupies a contiguous label range.
    pub fn complete_multipartite(shape: &[usize]) -> Result<Graph> {
        if shape.is_empty() {
            return Err(Error::pre("multipartite shape must be nonempty"));
        }
        if shape.contains(&0) {
            return Err(Error::pre("multipartite part sizes must be positive"));
        }
        let n: usize = shape.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (i, &s) in shape.iter().enumerate() {
            part.extend(core::iter::repeat_n(i, s));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).len() == self.n
    }

    fn component_of(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        let mut out = Vec::new();
        seen[s] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !seen[s] {
                let c = self.component_of(s);
                for &v in &c {
                    seen[v] = true;
                }
                out.push(c);
            }
        }
        out
    }

    /// Whether the vertices in `vs` induce a connected subgraph (false if empty).
    pub fn is_connected_set(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return false;
        }
        self.induced(vs).is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
