//! Block decomposition trees and isomorphism of block/cut tagged trees.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockNode {
    /// A maximal 2-connected subgraph or a cut edge, as a sorted vertex list.
    Block(Vec<usize>),
    CutVertex(usize),
}

impl BlockNode {
    pub fn is_block(&self) -> bool {
        matches!(self, BlockNode::Block(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    /// Blocks first (lexicographic by vertex list), then cut vertices in
    /// increasing order.
    pub nodes: Vec<BlockNode>,
    pub edges: Vec<(usize, usize)>,
}

impl BlockTree {
    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> {
        self.nodes.iter().filter_map(|x| match x {
            BlockNode::Block(b) => Some(b.as_slice()),
            BlockNode::CutVertex(_) => None,
        })
    }

    pub fn cut_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().filter_map(|x| match x {
            BlockNode::CutVertex(c) => Some(*c),
            BlockNode::Block(_) => None,
        })
    }

    pub fn shape(&self) -> TaggedTree {
        TaggedTree {
            cut: self.nodes.iter().map(|x| !x.is_block()).collect(),
            edges: self.edges.clone(),
        }
    }

    /// Checks the structural invariants: a tree, bipartite between blocks and
    /// cut vertices, block leaves only, cut vertices of tree degree at least
    /// two, and incidence matching membership.
    pub fn validate(&self) -> Result<()> {
        let shape = self.shape();
        shape.validate_block_shape()?;
        for &(a, b) in &self.edges {
            let (blk, c) = match (&self.nodes[a], &self.nodes[b]) {
                (BlockNode::Block(x), BlockNode::CutVertex(c)) | (BlockNode::CutVertex(c), BlockNode::Block(x)) => (x, *c),
                _ => return Err(Error::Invariant("block tree edge joins equal tags".into())),
            };
            if !blk.contains(&c) {
                return Err(Error::Invariant(alloc::format!("cut vertex {c} adjacent to a block not containing it")));
            }
        }
        Ok(())
    }
}

/// A tree whose nodes are tagged block (`cut[i] == false`) or cut vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedTree {
    pub cut: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl TaggedTree {
    pub fn len(&self) -> usize {
        self.cut.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut.is_empty()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cut.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn is_tree(&self) -> bool {
        let n = self.cut.len();
        if n == 0 || self.edges.len() != n - 1 || self.edges.iter().any(|&(a, b)| a >= n || b >= n) {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Whether this is the shape of some block decomposition tree.
    pub fn validate_block_shape(&self) -> Result<()> {
        if !self.is_tree() {
            return Err(Error::pre("not a tree"));
        }
        let adj = self.adjacency();
        for &(a, b) in &self.edges {
            if self.cut[a] == self.cut[b] {
                return Err(Error::pre(alloc::format!("edge {a}-{b} joins two nodes of the same kind")));
            }
        }
        for (v, nb) in adj.iter().enumerate() {
            if self.cut[v] && nb.len() < 2 {
                return Err(Error::pre(alloc::format!("cut node {v} has fewer than two blocks")));
            }
        }
        Ok(())
    }

    /// Canonical code of the tagged tree; equal codes iff isomorphic as
    /// tagged trees.
    pub fn canonical_code(&self) -> String {
        let n = self.cut.len();
        if n == 0 {
            return String::new();
        }
        let adj = self.adjacency();
        let centers = tree_centers(&adj);
        centers
            .into_iter()
            .map(|c| self.code_from(&adj, c, usize::MAX))
            .min()
            .unwrap()
    }

    fn code_from(&self, adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| self.code_from(adj, w, v))
            .collect();
        kids.sort_unstable();
        let mut s = String::from(if self.cut[v] { "c(" } else { "b(" });
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        s
    }

    pub fn isomorphic(&self, other: &TaggedTree) -> bool {
        self.len() == other.len() && self.canonical_code() == other.canonical_code()
    }
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Block decomposition tree of a connected graph.
pub fn block_tree(g: &Graph) -> Result<BlockTree> {
    let n = g.n();
    if n == 0 {
        return Err(Error::pre("block tree of the empty graph is undefined"));
    }
    if !g.is_connected() {
        return Err(Error::pre("block tree is only defined for connected graphs"));
    }
    let mut blocks = biconnected_blocks(g);
    if n == 1 {
        blocks.push(vec![0]);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            membership[v] += 1;
        }
    }
    let cuts: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let nb = blocks.len();
    let mut edges = Vec::new();
    for (ci, &c) in cuts.iter().enumerate() {
        for (bi, b) in blocks.iter().enumerate() {
            if b.binary_search(&c).is_ok() {
                edges.push((bi, nb + ci));
            }
        }
    }
    let mut nodes: Vec<BlockNode> = blocks.into_iter().map(BlockNode::Block).collect();
    nodes.extend(cuts.into_iter().map(BlockNode::CutVertex));
    Ok(BlockTree { nodes, edges })
}

/// Vertex sets of the blocks (2-connected components and bridges) of `g`,
/// by the Hopcroft–Tarjan low-point method.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut estack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, remaining neighbours)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(root, usize::MAX, g.neighbors(root).collect())];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(w) = top.2.pop() {
                if disc[w] == usize::MAX {
                    estack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbors(w).collect()));
                } else if w != parent && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some((a, b)) = estack.pop() {
                            comp.push(a);
                            comp.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comp.dedup();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn bowtie_is_a_star() {
        let t = block_tree(&bowtie()).unwrap();
        t.validate().unwrap();
        assert_eq!(t.blocks().count(), 2);
        assert_eq!(t.cut_vertices().collect::<Vec<_>>(), [2]);
        assert_eq!(t.edges.len(), 2);
    }

    #[test]
    fn two_connected_is_one_block() {
        let t = block_tree(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(t.nodes, [BlockNode::Block((0..6).collect())]);
        let t = block_tree(&Graph::new(1)).unwrap();
        assert_eq!(t.nodes.len(), 1);
    }

    #[test]
    fn path_blocks_are_bridges() {
        let t = block_tree(&Graph::path(4)).unwrap();
        t.validate().unwrap();
        assert_eq!(t.blocks().count(), 3);
        assert_eq!(t.cut_vertices().collect::<Vec<_>>(), [1, 2]);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(block_tree(&Graph::new(2)).is_err());
        assert!(block_tree(&Graph::new(0)).is_err());
    }

    #[test]
    fn tagged_iso() {
        let a = TaggedTree {
            cut: vec![false, true, false, true, false],
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4)],
        };
        let b = TaggedTree {
            cut: vec![true, false, false, true, false],
            edges: vec![(1, 0), (0, 4), (4, 3), (3, 2)],
        };
        assert!(a.isomorphic(&b));
        let c = TaggedTree {
            cut: vec![true, false, false, false],
            edges: vec![(0, 1), (0, 2), (0, 3)],
        };
        assert!(!a.isomorphic(&c));
        c.validate_block_shape().unwrap();
        assert!(a.validate_block_shape().is_ok());
    }
}
