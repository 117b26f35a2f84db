use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::horned::{horned, HornedKind};
use crate::blocks::TaggedTree;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree whose vertices are split into low vertices (degree at most 2,
/// including every leaf) and high vertices (degree at least 2), with every
/// edge joining a low vertex to a high one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowHighTree {
    pub high: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl LowHighTree {
    pub fn new(high: Vec<bool>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let t = LowHighTree { high, edges };
        t.validate()?;
        Ok(t)
    }

    /// `K_{1,s}` with a high centre `0`.
    pub fn star(s: usize) -> Result<Self> {
        let mut high = vec![false; s + 1];
        high[0] = true;
        LowHighTree::new(high, (1..=s).map(|v| (0, v)).collect())
    }

    /// The path on `2s+1` vertices, alternating low and high and starting
    /// with a low vertex.
    pub fn path(s: usize) -> Result<Self> {
        let n = 2 * s + 1;
        LowHighTree::new((0..n).map(|v| v % 2 == 1).collect(), (1..n).map(|v| (v - 1, v)).collect())
    }

    /// High root `0`; each high vertex above the last level reaches two high
    /// children through low connector vertices, and each high vertex on the
    /// last level carries two leaves. `levels` counts the high levels.
    pub fn binary(levels: usize) -> Result<Self> {
        if levels == 0 {
            return Err(Error::pre("binary low-high tree needs at least one level"));
        }
        let mut high = vec![true];
        let mut edges = Vec::new();
        let mut frontier = vec![0usize];
        for level in 1..=levels {
            let mut next = Vec::new();
            for &h in &frontier {
                for _ in 0..2 {
                    let v = high.len();
                    high.push(false);
                    edges.push((h, v));
                    if level < levels {
                        let w = high.len();
                        high.push(true);
                        edges.push((v, w));
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        LowHighTree::new(high, edges)
    }

    pub fn n(&self) -> usize {
        self.high.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.shape().adjacency()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn leaves(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.n()).filter(|&v| adj[v].len() == 1).collect()
    }

    /// The same tree with high vertices tagged as cut vertices and low
    /// vertices as blocks.
    pub fn shape(&self) -> TaggedTree {
        TaggedTree {
            cut: self.high.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let shape = self.shape();
        if !shape.is_tree() {
            return Err(Error::pre("low-high tree is not a tree"));
        }
        if self.n() < 2 {
            return Err(Error::pre("low-high tree needs at least two leaves"));
        }
        for &(a, b) in &self.edges {
            if self.high[a] == self.high[b] {
                return Err(Error::pre(format!("edge {a}-{b} does not join a low and a high vertex")));
            }
        }
        for (v, nb) in shape.adjacency().iter().enumerate() {
            if self.high[v] && nb.len() < 2 {
                return Err(Error::pre(format!("high vertex {v} has degree {}", nb.len())));
            }
            if !self.high[v] && nb.len() > 2 {
                return Err(Error::pre(format!("low vertex {v} has degree {}", nb.len())));
            }
        }
        Ok(())
    }
}

/// The labelling `φ` of a low-high tree for a chosen high root, indexed like
/// `tree.edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabelling {
    pub root: usize,
    pub d: usize,
    pub phi: Vec<usize>,
    /// Colour relative to the root: blue iff the edge's upper end is at even
    /// distance from it.
    pub blue: Vec<bool>,
    /// Whether the edge is incident with a leaf.
    pub leaf: Vec<bool>,
}

impl EdgeLabelling {
    pub fn blue_count(&self) -> usize {
        self.blue.iter().filter(|&&b| b).count()
    }

    pub fn red_count(&self) -> usize {
        self.blue.len() - self.blue_count()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf.iter().filter(|&&l| l).count()
    }

    /// Checks that `d = 4|L| + 2|R|`, that every label is even and at least
    /// 4, that labels sum to `d+2` around each degree-2 low vertex and to `d`
    /// around each high vertex.
    pub fn check(&self, t: &LowHighTree) -> Result<()> {
        if self.d != 4 * self.leaf_count() + 2 * self.red_count() {
            return Err(Error::Invariant(format!("d = {} disagrees with the edge counts", self.d)));
        }
        if let Some(i) = self.phi.iter().position(|&p| p < 4 || p % 2 == 1) {
            return Err(Error::Invariant(format!("edge {:?} has label {}", t.edges[i], self.phi[i])));
        }
        for v in 0..t.n() {
            let around: Vec<usize> = (0..t.edges.len())
                .filter(|&i| t.edges[i].0 == v || t.edges[i].1 == v)
                .map(|i| self.phi[i])
                .collect();
            let sum: usize = around.iter().sum();
            let want = if t.high[v] {
                Some(self.d)
            } else if around.len() == 2 {
                Some(self.d + 2)
            } else {
                None
            };
            if let Some(w) = want {
                if sum != w {
                    return Err(Error::Invariant(format!("labels around vertex {v} sum to {sum}, expected {w}")));
                }
            }
        }
        Ok(())
    }
}

/// Computes `φ` rooted at the high vertex `r`.
///
/// A blue edge `e` gets `4|L ∩ E(T_e)| + 2|R ∩ E(T_e)|`, where `T_e` is `e`
/// together with everything below it; a red edge `vw` below the blue edge
/// `uv` gets `d + 2 - φ(uv)`.
pub fn phi_labelling(t: &LowHighTree, r: usize) -> Result<EdgeLabelling> {
    t.validate()?;
    if r >= t.n() || !t.high[r] {
        return Err(Error::pre(format!("root {r} is not a high vertex")));
    }
    let n = t.n();
    let adj = t.adjacency();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([r]);
    depth[r] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    // the edge from each non-root vertex up to its parent
    let mut up_edge = vec![usize::MAX; n];
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        let child = if parent[a] == b { a } else { b };
        up_edge[child] = i;
    }
    let m = t.edges.len();
    let mut blue = vec![false; m];
    let mut leaf = vec![false; m];
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        let upper = if depth[a] < depth[b] { a } else { b };
        blue[i] = depth[upper] % 2 == 0;
        leaf[i] = adj[a].len() == 1 || adj[b].len() == 1;
    }
    // leaf and red edges in T_e, accumulated bottom-up
    let mut below_leaf = vec![0usize; n];
    let mut below_red = vec![0usize; n];
    for &v in order.iter().rev() {
        if v == r {
            continue;
        }
        let i = up_edge[v];
        let (l, rd) = (below_leaf[v] + leaf[i] as usize, below_red[v] + !blue[i] as usize);
        below_leaf[parent[v]] += l;
        below_red[parent[v]] += rd;
    }
    let d = 4 * leaf.iter().filter(|&&x| x).count() + 2 * blue.iter().filter(|&&x| !x).count();
    let mut phi = vec![0usize; m];
    for &v in &order {
        if v == r {
            continue;
        }
        let i = up_edge[v];
        phi[i] = if blue[i] {
            4 * (below_leaf[v] + leaf[i] as usize) + 2 * below_red[v]
        } else {
            (d + 2)
                .checked_sub(phi[up_edge[parent[v]]])
                .ok_or_else(|| Error::Invariant(format!("negative label on edge {:?}", t.edges[i])))?
        };
    }
    Ok(EdgeLabelling {
        root: r,
        d,
        phi,
        blue,
        leaf,
    })
}

/// The `d`-regular graph built from a low-high tree.
#[derive(Clone, Debug)]
pub struct LowHighGraph {
    pub d: usize,
    pub graph: Graph,
    pub labelling: EdgeLabelling,
    /// For each high tree vertex, the graph vertex its horns were merged into.
    pub hub: Vec<Option<usize>>,
    /// For each low tree vertex, the original vertices of its horned graph.
    pub interior: Vec<Vec<usize>>,
}

/// Replaces each leaf `u` by `G_{d,4}` and each degree-2 low vertex `v` with
/// edges `e`, `f` (`e` to the smaller neighbour) by `G_{d,φ(e),φ(f)}`, then
/// identifies all horns belonging to edges at the same high vertex.
///
/// Hubs come first in the vertex order (one per high vertex, by index),
/// followed by the `d+1` originals of each low vertex in index order.
pub fn graph_from_low_high_tree(t: &LowHighTree) -> Result<LowHighGraph> {
    let root = (0..t.n())
        .find(|&v| t.high[v])
        .ok_or_else(|| Error::pre("low-high tree has no high vertex"))?;
    let lab = phi_labelling(t, root)?;
    let d = lab.d;
    let adj = t.adjacency();
    let mut hub = vec![None; t.n()];
    let mut next = 0;
    for v in 0..t.n() {
        if t.high[v] {
            hub[v] = Some(next);
            next += 1;
        }
    }
    let lows = t.high.iter().filter(|&&h| !h).count();
    let total = next + lows * (d + 1);
    let mut g = Graph::new(total);
    let mut interior = vec![Vec::new(); t.n()];
    let edge_index = |a: usize, b: usize| {
        t.edges
            .iter()
            .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
            .expect("tree edge")
    };
    for v in 0..t.n() {
        if t.high[v] {
            continue;
        }
        let nbrs = &adj[v];
        let h = match nbrs.as_slice() {
            [_] => horned(HornedKind::Single { d })?,
            [e, f] => horned(HornedKind::Double {
                d,
                a: lab.phi[edge_index(v, *e)],
                b: lab.phi[edge_index(v, *f)],
            })?,
            _ => return Err(Error::pre(format!("low vertex {v} has degree {}", nbrs.len()))),
        };
        let base = next;
        next += d + 1;
        let map = |x: usize| match h.horns.iter().position(|&y| y == x) {
            Some(i) => hub[nbrs[i]].expect("neighbours of low vertices are high"),
            None => base + x,
        };
        for (a, b) in h.graph.edges() {
            g.add_edge(map(a), map(b));
        }
        interior[v] = (base..base + d + 1).collect();
    }
    if !g.is_regular(d) {
        return Err(Error::Invariant(format!("construction is not {d}-regular")));
    }
    Ok(LowHighGraph {
        d,
        graph: g,
        labelling: lab,
        hub,
        interior,
    })
}

/// A graph whose block decomposition tree is a given tree, together with the
/// intermediate low-high construction.
#[derive(Clone, Debug)]
pub struct BlockTreeGraph {
    pub d: usize,
    pub graph: Graph,
    /// The low-high tree the intermediate regular graph was built from: the
    /// input itself, or the input with every edge at a block node of degree
    /// at least 3 subdivided (subdivision nodes appended after the originals).
    pub low_high: LowHighTree,
    /// For each block node of the input, the vertex added for its bag (none
    /// when the input was already low-high).
    pub bag_vertex: Vec<Option<usize>>,
}

/// Builds a graph with minimum degree `d` whose block decomposition tree is
/// `t` (tagged with `cut[v]` for cut nodes).
///
/// When some block node has degree at least 3, each edge at such a node is
/// subdivided, the resulting low-high tree is realised, and its vertices are
/// split into one bag per block node: the hub of a branching block node
/// together with the originals of its subdivision nodes, the originals of a
/// non-branching block node, and each remaining hub joins the bag of its
/// lowest-index neighbour on a shortest path to the hub of the first
/// branching block node. One new vertex is then joined to each bag.
pub fn graph_from_block_tree(t: &TaggedTree) -> Result<BlockTreeGraph> {
    t.validate_block_shape()?;
    if t.len() < 2 {
        return Err(Error::pre("a single block has no cut vertex to build around"));
    }
    let adj = t.adjacency();
    let n = t.len();
    let branching: Vec<bool> = (0..n).map(|v| !t.cut[v] && adj[v].len() >= 3).collect();
    if !branching.iter().any(|&b| b) {
        let low_high = LowHighTree::new(t.cut.clone(), t.edges.clone())?;
        let built = graph_from_low_high_tree(&low_high)?;
        return Ok(BlockTreeGraph {
            d: built.d,
            graph: built.graph,
            low_high,
            bag_vertex: vec![None; n],
        });
    }
    let mut high = t.cut.clone();
    let mut edges = Vec::new();
    // subdivision node for each branching block node, with its cut neighbour
    let mut subdivisions: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &t.edges {
        let (blk, cut) = if t.cut[a] { (b, a) } else { (a, b) };
        if branching[blk] {
            let s = high.len();
            high.push(false);
            edges.push((blk, s));
            edges.push((s, cut));
            subdivisions.push((s, blk));
        } else {
            edges.push((a, b));
        }
    }
    for v in 0..n {
        high[v] = t.cut[v] || branching[v];
    }
    let low_high = LowHighTree::new(high, edges)?;
    let built = graph_from_low_high_tree(&low_high)?;
    let gp = &built.graph;
    let mut bag = vec![usize::MAX; gp.n()];
    for y in 0..n {
        if branching[y] {
            bag[built.hub[y].expect("branching nodes are high")] = y;
        } else if !t.cut[y] {
            for &v in &built.interior[y] {
                bag[v] = y;
            }
        }
    }
    for &(s, y) in &subdivisions {
        for &v in &built.interior[s] {
            bag[v] = y;
        }
    }
    let x = (0..n).find(|&v| branching[v]).expect("checked above");
    let dist = bfs(gp, built.hub[x].expect("branching nodes are high"));
    for c in (0..n).filter(|&v| t.cut[v]) {
        let hc = built.hub[c].expect("cut nodes are high");
        let step = gp
            .neighbors(hc)
            .find(|&w| dist[w] + 1 == dist[hc])
            .ok_or_else(|| Error::Invariant(format!("cut hub {hc} is unreachable")))?;
        if bag[step] == usize::MAX {
            return Err(Error::Invariant(format!("neighbour {step} of cut hub {hc} has no bag")));
        }
        bag[hc] = bag[step];
    }
    let mut g = gp.clone();
    let mut bag_vertex = vec![None; n];
    for y in (0..n).filter(|&v| !t.cut[v]) {
        let members: Vec<usize> = (0..gp.n()).filter(|&v| bag[v] == y).collect();
        bag_vertex[y] = Some(g.n());
        g = g.with_vertex(&members);
    }
    Ok(BlockTreeGraph {
        d: built.d + 1,
        graph: g,
        low_high,
        bag_vertex,
    })
}

fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}
