use alloc::format;
use alloc::vec::Vec;

use super::lattice::{low_count, minor_can_reach, search_contraction_min_degree, Explorer, Moves, State};
use super::{Condition, MembershipReport};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{evaluate, vertex_connectivity, ParamKind};

/// `∇f(G)`, the largest value of `f` over all minors of `G`.
///
/// Minimum degree is searched over contraction minors of each component
/// (branch sets of any minor of a connected graph can be grown to cover it
/// without losing minor edges). Connectivity is searched over induced minors,
/// since deleting an edge never raises it. Treewidth and pathwidth are minor
/// monotone.
pub fn down_parameter(g: &Graph, f: ParamKind, budget: &Budget) -> Result<usize> {
    if f.is_minor_monotone() {
        return evaluate(g, f, budget);
    }
    let mut best = evaluate(g, f, budget)?;
    while let Some(s) = find_violation(g, f, best + 1, budget)? {
        best = evaluate(&s.g, f, budget)?;
    }
    Ok(best)
}

/// Whether `∇f(G) <= k`; a negative verdict carries a minor with `f >= k+1`.
///
/// For minimum degree and connectivity the witness is shrunk until no single
/// deletion or contraction keeps `f >= k+1`, so it is a minimal obstruction.
pub fn is_member(g: &Graph, f: ParamKind, k: usize, budget: &Budget) -> Result<MembershipReport> {
    Ok(match find_violation(g, f, k + 1, budget)? {
        Some(mut s) => {
            if !f.is_minor_monotone() {
                s = shrink(s, f, k + 1, budget)?;
            }
            MembershipReport::fail(f, k, Condition::MinorExceeds, Some(s.witness()))
        }
        None => MembershipReport::pass(f, k),
    })
}

fn shrink(mut s: State, f: ParamKind, t: usize, budget: &Budget) -> Result<State> {
    'outer: loop {
        for c in one_step_minors(&s, true) {
            if c.g.n() > 0 && evaluate(&c.g, f, budget)? >= t {
                s = c;
                continue 'outer;
            }
        }
        return Ok(s);
    }
}

/// A minor of `g` (possibly `g` itself) with `f >= t`.
fn find_violation(g: &Graph, f: ParamKind, t: usize, budget: &Budget) -> Result<Option<State>> {
    if evaluate(g, f, budget)? >= t {
        return Ok(Some(State::root(g)?));
    }
    match f {
        ParamKind::Treewidth | ParamKind::Pathwidth => Ok(None),
        ParamKind::MinDegree => {
            for comp in g.components() {
                let root = State::induced(g, &comp)?;
                if root.g.min_degree() >= t {
                    return Ok(Some(root));
                }
                if let Some(s) = search_contraction_min_degree(&root, t, budget)? {
                    return Ok(Some(s));
                }
            }
            Ok(None)
        }
        ParamKind::Connectivity => {
            check_lattice(g, budget)?;
            let mut ex = Explorer::new(budget, Moves::Induced);
            ex.mark(g);
            search_connectivity(&mut ex, &State::root(g)?, t)
        }
    }
}

fn check_lattice(g: &Graph, budget: &Budget) -> Result<()> {
    if g.n() > budget.lattice_max_n {
        return Err(Error::budget(
            "connectivity minor lattice order",
            budget.lattice_max_n,
            format!("graph has {} vertices", g.n()),
        ));
    }
    Ok(())
}

fn search_connectivity(ex: &mut Explorer<'_>, start: &State, t: usize) -> Result<Option<State>> {
    // κ(H) >= t forces δ(H) >= t
    let prune = |h: &Graph| !minor_can_reach(h.n(), h.m(), low_count(h, t), t);
    let mut accept = |s: &State| Ok(s.g.min_degree() >= t && vertex_connectivity(&s.g) >= t);
    ex.search(start, &prune, &mut accept)
}

/// Whether `G` is a minimal forbidden minor of `X_{f,k}`: `f(G) >= k+1`
/// while every proper minor `H` has `f(H) <= k`.
///
/// For minimum degree the conditions D1 (`δ = k+1`), D3 (connected), D4
/// (no two adjacent vertices of degree `>= k+2`) and D2 (every proper
/// contraction minor has `δ <= k`) are tested in that order and the first
/// failure is reported. For treewidth and pathwidth it suffices to look at
/// minors one deletion or contraction away; for connectivity every proper
/// minor is searched.
pub fn is_minimal_obstruction(g: &Graph, f: ParamKind, k: usize, budget: &Budget) -> Result<MembershipReport> {
    match f {
        ParamKind::MinDegree => min_degree_obstruction(g, k, budget),
        ParamKind::Treewidth | ParamKind::Pathwidth => monotone_obstruction(g, f, k, budget),
        ParamKind::Connectivity => connectivity_obstruction(g, k, budget),
    }
}

fn min_degree_obstruction(g: &Graph, k: usize, budget: &Budget) -> Result<MembershipReport> {
    let f = ParamKind::MinDegree;
    let root = State::root(g)?;
    let delta = if g.n() == 0 { 0 } else { g.min_degree() };
    if delta != k + 1 {
        // with δ >= k+2 any single edge deletion keeps δ >= k+1
        let witness = if delta >= k + 2 {
            g.edges().next().map(|(u, v)| root.delete_edge(u, v).witness())
        } else {
            None
        };
        return Ok(MembershipReport::fail(f, k, Condition::D1, witness));
    }
    if !g.is_connected() {
        let comp = g.components().swap_remove(0);
        let w = State::induced(g, &comp)?.witness();
        return Ok(MembershipReport::fail(f, k, Condition::D3, Some(w)));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| g.degree(u) >= k + 2 && g.degree(v) >= k + 2) {
        let w = root.delete_edge(u, v).witness();
        return Ok(MembershipReport::fail(f, k, Condition::D4, Some(w)));
    }
    if let Some(s) = search_contraction_min_degree(&root, k + 1, budget)? {
        return Ok(MembershipReport::fail(f, k, Condition::D2, Some(s.witness())));
    }
    Ok(MembershipReport::pass(f, k))
}

/// Single-step proper minors: each edge deleted, each edge contracted, each
/// isolated vertex deleted (deleting any other vertex is reached through
/// deleting its edges first). Monotone parameters only need these.
fn one_step_minors(root: &State, all_vertices: bool) -> Vec<State> {
    let g = &root.g;
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        out.push(root.delete_edge(u, v));
        out.push(root.contract(u, v));
    }
    for v in 0..g.n() {
        if all_vertices || g.degree(v) == 0 {
            out.push(root.delete_vertex(v));
        }
    }
    out
}

fn monotone_obstruction(g: &Graph, f: ParamKind, k: usize, budget: &Budget) -> Result<MembershipReport> {
    if evaluate(g, f, budget)? < k + 1 {
        return Ok(MembershipReport::fail(f, k, Condition::ParamBelowThreshold, None));
    }
    for m in one_step_minors(&State::root(g)?, false) {
        if evaluate(&m.g, f, budget)? > k {
            return Ok(MembershipReport::fail(f, k, Condition::ProperMinorExceeds, Some(m.witness())));
        }
    }
    Ok(MembershipReport::pass(f, k))
}

fn connectivity_obstruction(g: &Graph, k: usize, budget: &Budget) -> Result<MembershipReport> {
    let f = ParamKind::Connectivity;
    check_lattice(g, budget)?;
    let t = k + 1;
    if vertex_connectivity(g) < t {
        return Ok(MembershipReport::fail(f, k, Condition::ParamBelowThreshold, None));
    }
    let mut ex = Explorer::new(budget, Moves::Induced);
    for m in one_step_minors(&State::root(g)?, true) {
        if m.g.n() > 0 && vertex_connectivity(&m.g) >= t {
            return Ok(MembershipReport::fail(f, k, Condition::ProperMinorExceeds, Some(m.witness())));
        }
        if !minor_can_reach(m.g.n(), m.g.m(), low_count(&m.g, t), t) || !ex.mark(&m.g) {
            continue;
        }
        if let Some(s) = search_connectivity(&mut ex, &m, t)? {
            return Ok(MembershipReport::fail(f, k, Condition::ProperMinorExceeds, Some(s.witness())));
        }
    }
    Ok(MembershipReport::pass(f, k))
}
