//! Depth-first exploration of the minor lattice below a graph, memoised by
//! canonical form.
//!
//! A state is a minor together with its branch sets in the original host
//! (as `u64` masks, so hosts have at most 64 vertices). Children are produced
//! by contracting an edge, and depending on the move set also by deleting a
//! vertex or an edge. Two states with isomorphic minors have isomorphic
//! subtrees, so each isomorphism class is expanded once per search.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::{BranchPartition, MinorWitness};
use crate::bits::{bit, squeeze};
use crate::budget::Budget;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct State {
    pub g: Graph,
    pub parts: Vec<u64>,
}

impl State {
    pub fn root(g: &Graph) -> Result<State> {
        check_host(g.n())?;
        Ok(State {
            g: g.clone(),
            parts: (0..g.n()).map(bit).collect(),
        })
    }

    /// The subgraph induced by `vs` with singleton branch sets in `host`.
    pub fn induced(host: &Graph, vs: &[usize]) -> Result<State> {
        check_host(host.n())?;
        Ok(State {
            g: host.induced(vs),
            parts: vs.iter().map(|&v| bit(v)).collect(),
        })
    }

    /// Contracts the edge `ij`, keeping label `min(i, j)`.
    pub fn contract(&self, i: usize, j: usize) -> State {
        let (keep, gone) = if i < j { (i, j) } else { (j, i) };
        let adj = self.g.masks();
        let mut rows = Vec::with_capacity(adj.len() - 1);
        for (x, &row) in adj.iter().enumerate() {
            if x == gone {
                continue;
            }
            let mut r = row;
            if x == keep {
                r |= adj[gone];
            }
            if r & bit(gone) != 0 {
                r |= bit(keep);
            }
            r &= !bit(x);
            rows.push(squeeze(r, gone));
        }
        let mut parts = self.parts.clone();
        parts[keep] |= parts[gone];
        parts.remove(gone);
        State {
            g: Graph::from_masks(&rows),
            parts,
        }
    }

    pub fn delete_vertex(&self, v: usize) -> State {
        let rows: Vec<u64> = self
            .g
            .masks()
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != v)
            .map(|(_, &r)| squeeze(r, v))
            .collect();
        let mut parts = self.parts.clone();
        parts.remove(v);
        State {
            g: Graph::from_masks(&rows),
            parts,
        }
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> State {
        let mut g = self.g.clone();
        g.remove_edge(u, v);
        State {
            g,
            parts: self.parts.clone(),
        }
    }

    pub fn witness(&self) -> MinorWitness {
        MinorWitness {
            graph: self.g.clone(),
            parts: BranchPartition::from_masks(&self.parts),
        }
    }
}

pub(crate) fn check_host(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::budget("minor search host order", 64, format!("graph has {n} vertices")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Moves {
    /// Edge contractions only: contraction minors.
    Contract,
    /// Contractions and vertex deletions: induced minors.
    Induced,
    /// Contractions, vertex deletions and edge deletions: all minors.
    All,
}

pub(crate) struct Explorer<'a> {
    budget: &'a Budget,
    moves: Moves,
    visited: HashSet<CanonicalForm>,
    deepest: usize,
}

impl<'a> Explorer<'a> {
    pub fn new(budget: &'a Budget, moves: Moves) -> Self {
        Explorer {
            budget,
            moves,
            visited: HashSet::new(),
            deepest: 0,
        }
    }

    /// Records `g` as explored; false if an isomorphic graph already was.
    pub fn mark(&mut self, g: &Graph) -> bool {
        self.visited.insert(canonical_form(g))
    }

    /// Searches the states strictly below `start` for one satisfying
    /// `accept`. Children for which `prune` returns true are skipped together
    /// with everything below them, so `prune` must only reject states none of
    /// whose descendants could be accepted.
    pub fn search(
        &mut self,
        start: &State,
        prune: &dyn Fn(&Graph) -> bool,
        accept: &mut dyn FnMut(&State) -> Result<bool>,
    ) -> Result<Option<State>> {
        self.dfs(start, 1, prune, accept)
    }

    fn dfs(
        &mut self,
        s: &State,
        depth: usize,
        prune: &dyn Fn(&Graph) -> bool,
        accept: &mut dyn FnMut(&State) -> Result<bool>,
    ) -> Result<Option<State>> {
        let n = s.g.n();
        let edges: Vec<(usize, usize)> = s.g.edges().collect();
        let mut children: Vec<State> = edges.iter().map(|&(u, v)| s.contract(u, v)).collect();
        if self.moves != Moves::Contract {
            children.extend((0..n).map(|v| s.delete_vertex(v)));
        }
        if self.moves == Moves::All {
            children.extend(edges.iter().map(|&(u, v)| s.delete_edge(u, v)));
        }
        for c in children {
            if prune(&c.g) {
                continue;
            }
            if !self.visited.insert(canonical_form(&c.g)) {
                continue;
            }
            self.deepest = self.deepest.max(depth);
            if self.visited.len() > self.budget.max_states {
                return Err(Error::budget(
                    "minor states",
                    self.budget.max_states,
                    format!("exhausted after reaching depth {} below a {}-vertex graph", self.deepest, n + depth - 1),
                ));
            }
            if accept(&c)? {
                return Ok(Some(c));
            }
            if let Some(found) = self.dfs(&c, depth + 1, prune, accept)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Whether some contraction minor of a graph with `n` vertices, `m` edges
/// and `low` vertices of degree below `t` could still have minimum degree at
/// least `t`. Each contraction removes one vertex and at least one edge and
/// absorbs at most two low vertices; no degree ever increases except at the
/// merged vertex.
pub(crate) fn contraction_can_reach(n: usize, m: usize, low: usize, t: usize) -> bool {
    if n < t + 1 {
        return false;
    }
    if low > 2 * (n - (t + 1)) {
        return false;
    }
    // need some n2 in [t+1, n] with 2(m - (n - n2)) >= t * n2; linear in n2
    let ok = |n2: usize| m + n2 >= n && 2 * (m + n2 - n) >= t * n2;
    ok(t + 1) || ok(n)
}

/// As [`contraction_can_reach`] when vertex deletions are also allowed.
pub(crate) fn minor_can_reach(n: usize, m: usize, low: usize, t: usize) -> bool {
    n > t && 2 * m >= t * (t + 1) && low <= 2 * (n - (t + 1))
}

pub(crate) fn low_count(g: &Graph, t: usize) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) < t).count()
}

/// Searches the proper contraction minors of `g` for one with minimum degree
/// at least `t`, returning it with its branch sets.
pub fn find_contraction_minor_with_min_degree(g: &Graph, t: usize, budget: &Budget) -> Result<Option<MinorWitness>> {
    let root = State::root(g)?;
    Ok(search_contraction_min_degree(&root, t, budget)?.map(|s| s.witness()))
}

pub(crate) fn search_contraction_min_degree(root: &State, t: usize, budget: &Budget) -> Result<Option<State>> {
    let mut ex = Explorer::new(budget, Moves::Contract);
    let prune = |g: &Graph| !contraction_can_reach(g.n(), g.m(), low_count(g, t), t);
    let mut accept = |s: &State| Ok(s.g.n() > 0 && s.g.min_degree() >= t);
    ex.search(root, &prune, &mut accept)
}

/// One representative per isomorphism class of proper contraction minors of
/// `g`, each with its branch sets, sorted by canonical form. For a
/// disconnected `g` contractions act inside components, so the result is the
/// set of graphs obtained by contracting each component independently.
pub fn contraction_minors(g: &Graph, budget: &Budget) -> Result<Vec<MinorWitness>> {
    let root = State::root(g)?;
    let mut ex = Explorer::new(budget, Moves::Contract);
    let mut found: Vec<(CanonicalForm, State)> = Vec::new();
    let mut accept = |s: &State| {
        found.push((canonical_form(&s.g), s.clone()));
        Ok(false)
    };
    ex.search(&root, &|_| false, &mut accept)?;
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, s)| s.witness()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    #[test]
    fn contraction_matches_graph_contract() {
        let g = Graph::complete_multipartite(&[2, 3, 1]).unwrap();
        let s = State::root(&g).unwrap();
        for (u, v) in g.edges() {
            let c = s.contract(u, v);
            assert_eq!(c.g, g.contract_edge(u, v).unwrap());
            BranchPartition::from_masks(&c.parts).validate_contraction(&g, &c.g).unwrap();
        }
        for v in 0..g.n() {
            assert_eq!(s.delete_vertex(v).g, g.delete_vertex(v).unwrap());
        }
    }

    #[test]
    fn small_contraction_minor_sets() {
        let b = Budget::default();
        let k3 = contraction_minors(&Graph::complete(3), &b).unwrap();
        assert_eq!(k3.len(), 2);
        assert!(isomorphic(&k3[0].graph, &Graph::complete(1)));
        assert!(isomorphic(&k3[1].graph, &Graph::complete(2)));
        assert_eq!(contraction_minors(&Graph::complete(4), &b).unwrap().len(), 3);
        let c4 = contraction_minors(&Graph::cycle(4).unwrap(), &b).unwrap();
        assert!(c4.iter().any(|w| isomorphic(&w.graph, &Graph::complete(3))));
        for w in &c4 {
            w.parts.validate_contraction(&Graph::cycle(4).unwrap(), &w.graph).unwrap();
        }
    }

    #[test]
    fn budget_reports_depth() {
        let b = Budget::default().with_max_states(3);
        let err = contraction_minors(&Graph::complete(7), &b).unwrap_err();
        assert!(err.is_budget());
    }
}
