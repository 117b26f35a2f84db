//! Exact graph parameters.

mod bramble;
mod clique;
mod flow;
mod width;

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::vec::Vec;

pub use bramble::{cmg_bramble, Bramble};
pub use clique::{independence_and_clique, max_clique};
pub use flow::{edge_connectivity, vertex_connectivity, vertex_disjoint_paths};
pub use width::{pathwidth, treewidth, TreeDecomposition};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The parameters whose down-closures define the classes studied here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    MinDegree,
    Connectivity,
    Treewidth,
    Pathwidth,
}

impl ParamKind {
    pub const ALL: [ParamKind; 4] = [
        ParamKind::MinDegree,
        ParamKind::Connectivity,
        ParamKind::Treewidth,
        ParamKind::Pathwidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::MinDegree => "delta",
            ParamKind::Connectivity => "kappa",
            ParamKind::Treewidth => "tw",
            ParamKind::Pathwidth => "pw",
        }
    }

    /// Whether `f(H) <= f(G)` for every minor `H` of `G`.
    pub fn is_minor_monotone(self) -> bool {
        matches!(self, ParamKind::Treewidth | ParamKind::Pathwidth)
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" | "min-degree" | "mindegree" => Ok(ParamKind::MinDegree),
            "kappa" | "connectivity" => Ok(ParamKind::Connectivity),
            "tw" | "treewidth" => Ok(ParamKind::Treewidth),
            "pw" | "pathwidth" => Ok(ParamKind::Pathwidth),
            _ => Err(Error::pre(format!("unknown parameter `{s}`"))),
        }
    }
}

/// `f(G)` for one of the four class parameters. The empty graph has value 0.
pub fn evaluate(g: &Graph, f: ParamKind, budget: &Budget) -> Result<usize> {
    match f {
        ParamKind::MinDegree => Ok(if g.n() == 0 { 0 } else { g.min_degree() }),
        ParamKind::Connectivity => Ok(vertex_connectivity(g)),
        ParamKind::Treewidth => Ok(treewidth(g, budget)?.0),
        ParamKind::Pathwidth => Ok(pathwidth(g, budget)?.0),
    }
}

/// Independent computations of the quantities that coincide on complete
/// multipartite graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmgReport {
    pub shape: Vec<usize>,
    pub n: usize,
    pub alpha: usize,
    pub kappa: usize,
    pub delta: usize,
    pub tw: usize,
    pub pw: usize,
}

impl CmgReport {
    pub fn holds(&self) -> bool {
        let t = self.n - self.alpha;
        self.kappa == t && self.delta == t && self.tw == t && self.pw == t
    }
}

/// Computes connectivity, minimum degree, treewidth, pathwidth and the
/// independence number of `K_shape` with separate solvers and reports
/// whether all four equal `n - α`.
pub fn cmg_equalities_check(shape: &[usize], budget: &Budget) -> Result<CmgReport> {
    let n: usize = shape.iter().sum();
    if n > 12 {
        return Err(Error::budget("cmg order", 12, format!("shape has {n} vertices")));
    }
    let g = Graph::complete_multipartite(shape)?;
    let (alpha, _) = independence_and_clique(&g, budget)?;
    Ok(CmgReport {
        shape: shape.to_vec(),
        n,
        alpha,
        kappa: vertex_connectivity(&g),
        delta: g.min_degree(),
        tw: treewidth(&g, budget)?.0,
        pw: pathwidth(&g, budget)?.0,
    })
}
