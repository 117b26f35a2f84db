use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HornedKind {
    /// `G_{d,4}`.
    Single { d: usize },
    /// `G_{d,a,b}`.
    Double { d: usize, a: usize, b: usize },
}

/// A horned graph. Vertices `0..=d` are the originals (the `K_{d+1}`), the
/// horns follow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornedGraph {
    pub kind: HornedKind,
    pub graph: Graph,
    pub horns: Vec<usize>,
    pub originals: Vec<usize>,
}

impl HornedGraph {
    pub fn d(&self) -> usize {
        match self.kind {
            HornedKind::Single { d } | HornedKind::Double { d, .. } => d,
        }
    }

    /// Required horn degrees, in the order of `horns`.
    pub fn horn_degrees(&self) -> Vec<usize> {
        match self.kind {
            HornedKind::Single { .. } => vec![4],
            HornedKind::Double { a, b, .. } => vec![a, b],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.d();
        let expect = d + 1 + self.horns.len();
        if self.graph.n() != expect {
            return Err(Error::Invariant(format!("horned graph has {} vertices, expected {expect}", self.graph.n())));
        }
        for &v in &self.originals {
            if self.graph.degree(v) != d {
                return Err(Error::Invariant(format!("original vertex {v} has degree {}", self.graph.degree(v))));
            }
        }
        for (&x, want) in self.horns.iter().zip(self.horn_degrees()) {
            if self.graph.degree(x) != want {
                return Err(Error::Invariant(format!("horn {x} has degree {}, expected {want}", self.graph.degree(x))));
            }
        }
        Ok(())
    }
}

/// Builds `G_{d,4}` or `G_{d,a,b}`.
///
/// `G_{d,4}` removes `(0,1)` and `(2,3)` from `K_{d+1}` and joins horn `d+1`
/// to `0..=3`. `G_{d,a,b}` removes `M_a = (0,1),(2,3),...,(a-2,a-1)` and
/// `M_b = (a-1,a),(a+1,a+2),...,(d-1,d)`; horn `d+1` is joined to `0..a` and
/// horn `d+2` to `a-1..=d`, so `a-1` lies in both matchings.
pub fn horned(kind: HornedKind) -> Result<HornedGraph> {
    let (d, horns): (usize, Vec<Vec<(usize, usize)>>) = match kind {
        HornedKind::Single { d } => {
            if d < 4 {
                return Err(Error::pre(format!("single-horned graph needs d >= 4, got {d}")));
            }
            (d, vec![vec![(0, 1), (2, 3)]])
        }
        HornedKind::Double { d, a, b } => {
            if a < 4 || b < 4 || a % 2 == 1 || b % 2 == 1 || a + b != d + 2 {
                return Err(Error::pre(format!(
                    "double-horned graph needs even a, b >= 4 with d = a + b - 2, got d={d} a={a} b={b}"
                )));
            }
            let ma = (0..a / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            let mb = (0..b / 2).map(|i| (a - 1 + 2 * i, a + 2 * i)).collect();
            (d, vec![ma, mb])
        }
    };
    let mut g = Graph::complete(d + 1);
    let mut horn_ids = Vec::new();
    for matching in &horns {
        let x = g.n();
        let ends: Vec<usize> = matching.iter().flat_map(|&(u, v)| [u, v]).collect();
        g = g.with_vertex(&ends);
        for &(u, v) in matching {
            g.remove_edge(u, v);
        }
        horn_ids.push(x);
    }
    let h = HornedGraph {
        kind,
        graph: g,
        horns: horn_ids,
        originals: (0..=d).collect(),
    };
    h.validate()?;
    Ok(h)
}
