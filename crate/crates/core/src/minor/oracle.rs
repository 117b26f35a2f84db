use alloc::format;

use hashbrown::HashMap;

use crate::budget::Budget;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{evaluate, ParamKind};

/// Brute-force down-parameter over the full minor lattice.
///
/// `∇f(G) = max(f(G), max ∇f(G'))` over every single edge deletion, edge
/// contraction and vertex deletion `G'`, memoised by canonical form across
/// calls. It makes no use of monotonicity or of any restriction of the move
/// set, which is what makes it a reference for the fast procedures.
pub struct ExhaustiveOracle {
    budget: Budget,
    cache: HashMap<CanonicalForm, [Option<usize>; 4]>,
}

impl ExhaustiveOracle {
    pub fn new(budget: Budget) -> Self {
        ExhaustiveOracle {
            budget,
            cache: HashMap::new(),
        }
    }

    /// Number of isomorphism classes evaluated so far.
    pub fn classes(&self) -> usize {
        self.cache.len()
    }

    pub fn down(&mut self, g: &Graph, f: ParamKind) -> Result<usize> {
        if g.n() > self.budget.lattice_max_n {
            return Err(Error::budget(
                "full minor lattice order",
                self.budget.lattice_max_n,
                format!("graph has {} vertices", g.n()),
            ));
        }
        self.down_rec(g, f)
    }

    fn down_rec(&mut self, g: &Graph, f: ParamKind) -> Result<usize> {
        let idx = f as usize;
        let key = canonical_form(g);
        if let Some(v) = self.cache.get(&key).and_then(|e| e[idx]) {
            return Ok(v);
        }
        let mut best = evaluate(g, f, &self.budget)?;
        let edges: alloc::vec::Vec<(usize, usize)> = g.edges().collect();
        for &(u, v) in &edges {
            best = best.max(self.down_rec(&g.delete_edge(u, v)?, f)?);
            best = best.max(self.down_rec(&g.contract_edge(u, v)?, f)?);
        }
        for v in 0..g.n() {
            best = best.max(self.down_rec(&g.delete_vertex(v)?, f)?);
        }
        self.cache.entry(key).or_insert([None; 4])[idx] = Some(best);
        Ok(best)
    }
}
