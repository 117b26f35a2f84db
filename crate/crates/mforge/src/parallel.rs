//! Obstruction search with candidate verification spread over a thread pool.

use mforge_core::minor::is_minimal_obstruction;
use mforge_core::search::{obstruction_candidates, sort_canonically, SearchOutcome, SearchSpec};
use mforge_core::{Budget, Graph, Result};
use rayon::prelude::*;

/// Same result as [`mforge_core::search::obstruction_search`], computed on
/// `jobs` worker threads. The output is sorted canonically, so it does not
/// depend on `jobs`.
pub fn obstruction_search(
    spec: &SearchSpec,
    budget: &Budget,
    jobs: usize,
) -> Result<SearchOutcome> {
    if spec.max_order == 0 {
        return mforge_core::search::obstruction_search(spec, budget);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let mut found = Vec::new();
        let mut candidates = 0;
        for n in 1..=spec.max_order {
            let gs = obstruction_candidates(spec, n, budget)?;
            candidates += gs.len();
            let verdicts: Vec<bool> = gs
                .par_iter()
                .map(|g| is_minimal_obstruction(g, spec.f, spec.k, budget).map(|r| r.verdict))
                .collect::<Result<_>>()?;
            found.extend(
                gs.into_iter()
                    .zip(verdicts)
                    .filter(|(_, v)| *v)
                    .map(|(g, _)| g),
            );
        }
        sort_canonically(&mut found);
        Ok(SearchOutcome {
            spec: *spec,
            obstructions: found,
            complete_up_to: spec.max_order,
            candidates,
        })
    })
}

/// Applies `f` to every graph on `jobs` threads, keeping input order.
pub fn map_graphs<T: Send>(gs: &[Graph], jobs: usize, f: impl Fn(&Graph) -> T + Sync) -> Vec<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| gs.par_iter().map(&f).collect())
}
