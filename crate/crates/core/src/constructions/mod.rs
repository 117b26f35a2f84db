//! Deterministic generators for the graph families used throughout.

mod horned;
mod lowhigh;

use alloc::format;
use alloc::vec::Vec;

pub use horned::{horned, HornedGraph, HornedKind};
pub use lowhigh::{
    graph_from_block_tree, graph_from_low_high_tree, phi_labelling, BlockTreeGraph, EdgeLabelling, LowHighGraph, LowHighTree,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The regular icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10,
/// bottom 11; upper `u_i` is adjacent to lower `l_i` and `l_{i+1}`.
pub fn icosahedron() -> Graph {
    let mut e = Vec::with_capacity(30);
    for i in 0..5 {
        let (u, u2) = (1 + i, 1 + (i + 1) % 5);
        let (l, l2) = (6 + i, 6 + (i + 1) % 5);
        e.extend_from_slice(&[(0, u), (u, u2), (u, l), (u, l2), (l, l2), (l, 11)]);
    }
    Graph::from_edges(12, &e).expect("static edge list")
}

/// `C_5 * K̄_3`.
pub fn c5_join_k3bar() -> Graph {
    Graph::cycle(5).expect("n >= 3").join(&Graph::new(3))
}

pub fn k_1222() -> Graph {
    Graph::complete_multipartite(&[1, 2, 2, 2]).expect("valid shape")
}

/// Two copies of the single-horned graph `G_{5,4}` with their horns
/// identified. Originals are 0..=5 and 6..=11, the shared horn is 12.
pub fn d3() -> Graph {
    let h = horned(HornedKind::Single { d: 5 }).expect("d >= 4");
    let horn = h.horns[0];
    let mut g = Graph::new(13);
    for (copy, offset) in [(0usize, 0usize), (1, 6)] {
        let _ = copy;
        for (u, v) in h.graph.edges() {
            let map = |x: usize| if x == horn { 12 } else { x + offset };
            g.add_edge(map(u), map(v));
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut e = Vec::with_capacity(15);
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &e).expect("static edge list")
}

/// `C_n^p`: vertices of the `n`-cycle joined when their cyclic distance is
/// at most `p`.
pub fn cycle_power(n: usize, p: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::pre("cycle power needs n >= 3"));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        for s in 1..=p.min(n / 2) {
            let w = (v + s) % n;
            if w != v && !g.has_edge(v, w) {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// A graph by name: `icosahedron`, `c5_join_k3bar`, `k_1222`, `d3`,
/// `petersen`, `octahedron`, or one of the parametrised forms `k<n>`,
/// `complete(<n>)`, `cycle(<n>)`, `path(<n>)`, `empty(<n>)`, `cmg(<a>,<b>,...)`,
/// `square_cycle(<n>)`, `tight(<k>)`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    let args = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| Error::pre(format!("bad argument `{a}` in `{name}`"))))
            .collect()
    };
    let one = |s: &str| -> Result<usize> {
        match args(s)?.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::pre(format!("`{name}` takes exactly one argument"))),
        }
    };
    if let Some((head, rest)) = name.split_once('(') {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::pre(format!("unbalanced parenthesis in `{name}`")))?;
        return match head {
            "complete" | "k" => Ok(Graph::complete(one(inner)?)),
            "cycle" => Graph::cycle(one(inner)?),
            "path" => Ok(Graph::path(one(inner)?)),
            "empty" => Ok(Graph::new(one(inner)?)),
            "cmg" | "multipartite" => Graph::complete_multipartite(&args(inner)?),
            "square_cycle" => cycle_power(one(inner)?, 2),
            "tight" => tight_regular_example(one(inner)?),
            _ => Err(Error::pre(format!("unknown graph family `{head}`"))),
        };
    }
    match name {
        "icosahedron" => Ok(icosahedron()),
        "c5_join_k3bar" => Ok(c5_join_k3bar()),
        "k_1222" => Ok(k_1222()),
        "d3" => Ok(d3()),
        "petersen" => Ok(petersen()),
        "octahedron" => Graph::complete_multipartite(&[2, 2, 2]),
        _ => {
            if let Some(n) = name.strip_prefix('k').and_then(|s| s.parse::<usize>().ok()) {
                return Ok(Graph::complete(n));
            }
            Err(Error::pre(format!("unknown graph name `{name}`")))
        }
    }
}

/// `G^+`: one new vertex adjacent to every minimum-degree vertex of `G`.
pub fn plus_min_degree(g: &Graph) -> Graph {
    if g.n() == 0 {
        return Graph::new(1);
    }
    let delta = g.min_degree();
    let low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    g.with_vertex(&low)
}

/// `G^{+p}`: `p` new pairwise nonadjacent vertices, each adjacent to every
/// vertex of `G`. `G^{+0} = G`.
pub fn plus_construction(g: &Graph, p: usize) -> Graph {
    g.join(&Graph::new(p))
}

/// The `(k+1)`-regular graph on `4p` vertices, `p = (k+2)/3`, whose
/// complement is two disjoint copies of `K_{p,p}`.
pub fn tight_regular_example(k: usize) -> Result<Graph> {
    if k % 3 != 1 {
        return Err(Error::pre(format!("tight example needs k = 1 mod 3, got {k}")));
    }
    let p = k.div_ceil(3);
    let kpp = Graph::complete_multipartite(&[p, p])?;
    Ok(kpp.disjoint_union(&kpp).complement())
}
