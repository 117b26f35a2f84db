//! Minors: witnesses, the contraction / induced-minor lattice, containment,
//! down-parameters and class membership.

mod containment;
mod lattice;
mod membership;
mod oracle;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use containment::has_minor;
pub use lattice::{contraction_minors, find_contraction_minor_with_min_degree};
pub use membership::{down_parameter, is_member, is_minimal_obstruction};
pub use oracle::ExhaustiveOracle;

use crate::bits::ones;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{evaluate, ParamKind};

/// Disjoint connected branch sets of a host graph, one per minor vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchPartition {
    pub parts: Vec<Vec<usize>>,
}

impl BranchPartition {
    pub fn identity(n: usize) -> Self {
        BranchPartition {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn from_masks(masks: &[u64]) -> Self {
        BranchPartition {
            parts: masks.iter().map(|&m| ones(m).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks that the parts are nonempty, pairwise disjoint, in range and
    /// each connected in `host`.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let mut owner = vec![usize::MAX; host.n()];
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::Invariant(format!("branch set {i} is empty")));
            }
            for &v in p {
                if v >= host.n() {
                    return Err(Error::Invariant(format!("branch set {i} names missing vertex {v}")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::Invariant(format!("vertex {v} lies in branch sets {} and {i}", owner[v])));
                }
                owner[v] = i;
            }
            if !host.is_connected_set(p) {
                return Err(Error::Invariant(format!("branch set {i} is not connected")));
            }
        }
        Ok(())
    }

    /// The graph on the parts with an edge wherever the host has an edge
    /// between two parts.
    pub fn quotient(&self, host: &Graph) -> Result<Graph> {
        self.validate(host)?;
        let k = self.parts.len();
        let mut owner = vec![usize::MAX; host.n()];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                owner[v] = i;
            }
        }
        let mut q = Graph::new(k);
        for (u, v) in host.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                q.add_edge(a, b);
            }
        }
        Ok(q)
    }

    /// Checks that the parts witness `h` as a minor of `host`: part `i` is
    /// the branch set of vertex `i` of `h` and every edge of `h` is realised.
    pub fn validate_minor(&self, host: &Graph, h: &Graph) -> Result<()> {
        if self.parts.len() != h.n() {
            return Err(Error::Invariant(format!("{} branch sets for a {}-vertex minor", self.parts.len(), h.n())));
        }
        let q = self.quotient(host)?;
        for (a, b) in h.edges() {
            if !q.has_edge(a, b) {
                return Err(Error::Invariant(format!("minor edge {a}-{b} is not realised")));
            }
        }
        Ok(())
    }

    /// Checks that the parts cover the host and their quotient is exactly `h`.
    pub fn validate_contraction(&self, host: &Graph, h: &Graph) -> Result<()> {
        let covered: usize = self.parts.iter().map(|p| p.len()).sum();
        if covered != host.n() {
            return Err(Error::Invariant("branch sets do not cover the host".into()));
        }
        if self.quotient(host)? != *h {
            return Err(Error::Invariant("quotient differs from the claimed contraction minor".into()));
        }
        Ok(())
    }
}

/// A minor together with its branch sets in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub graph: Graph,
    pub parts: BranchPartition,
}

/// Which condition of a membership or obstruction test failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Minimum degree is not exactly k+1.
    D1,
    /// Some proper contraction minor has minimum degree at least k+1.
    D2,
    /// Not connected.
    D3,
    /// Two adjacent vertices both have degree at least k+2.
    D4,
    /// `f(G) <= k`, so the graph is not outside the class.
    ParamBelowThreshold,
    /// Some proper minor already has `f >= k+1`.
    ProperMinorExceeds,
    /// Some minor (possibly the graph itself) has `f >= k+1`.
    MinorExceeds,
}

impl Condition {
    pub fn tag(self) -> &'static str {
        match self {
            Condition::D1 => "D1",
            Condition::D2 => "D2",
            Condition::D3 => "D3",
            Condition::D4 => "D4",
            Condition::ParamBelowThreshold => "param-below-threshold",
            Condition::ProperMinorExceeds => "proper-minor-exceeds",
            Condition::MinorExceeds => "minor-exceeds",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Verdict and certificate of a class-membership or obstruction query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub param: ParamKind,
    pub k: usize,
    pub verdict: bool,
    pub failed: Option<Condition>,
    /// A minor with `f >= k+1`, when the failure is witnessed by one.
    pub witness: Option<MinorWitness>,
}

impl MembershipReport {
    pub(crate) fn pass(param: ParamKind, k: usize) -> Self {
        MembershipReport {
            param,
            k,
            verdict: true,
            failed: None,
            witness: None,
        }
    }

    pub(crate) fn fail(param: ParamKind, k: usize, c: Condition, witness: Option<MinorWitness>) -> Self {
        MembershipReport {
            param,
            k,
            verdict: false,
            failed: Some(c),
            witness,
        }
    }

    /// Re-validates the witness against `host` independently of the search
    /// that produced it: branch sets connected and disjoint, minor edges
    /// realised, and `f(H) >= k+1` recomputed.
    pub fn recheck(&self, host: &Graph, budget: &Budget) -> Result<()> {
        let Some(w) = &self.witness else {
            return Ok(());
        };
        w.parts.validate_minor(host, &w.graph)?;
        if self.failed != Some(Condition::MinorExceeds) {
            let covered: usize = w.parts.parts.iter().map(|p| p.len()).sum();
            if w.graph.n() == host.n() && covered == host.n() && w.graph.m() == host.m() {
                return Err(Error::Invariant("witness is not a proper minor".into()));
            }
        }
        let value = evaluate(&w.graph, self.param, budget)?;
        if value < self.k + 1 {
            return Err(Error::Invariant(format!("witness has {} = {value} <= k = {}", self.param, self.k)));
        }
        Ok(())
    }
}
