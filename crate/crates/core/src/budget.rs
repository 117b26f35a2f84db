/// Resource limits for the exact searches.
///
/// Every search that could blow up checks one of these fields and returns
/// [`Error::Budget`](crate::Error::Budget) instead of running unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of distinct minor states a lattice search may visit.
    pub max_states: usize,
    /// Largest vertex count accepted by the treewidth / pathwidth DP.
    pub width_max_n: usize,
    /// Largest vertex count accepted by the clique / independence search.
    pub clique_max_n: usize,
    /// Largest host accepted by searches over the full minor lattice
    /// (connectivity down-parameter, full-minor oracles).
    pub lattice_max_n: usize,
    /// Largest order accepted by isomorph-free enumeration.
    pub enumerate_max_n: usize,
    /// Largest host accepted by the contraction-minor engine (u64 masks).
    pub contraction_max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 20_000_000,
            width_max_n: 16,
            clique_max_n: 40,
            lattice_max_n: 10,
            enumerate_max_n: 10,
            contraction_max_n: 64,
        }
    }
}

impl Budget {
    pub fn with_max_states(mut self, s: usize) -> Self {
        self.max_states = s;
        self
    }
}
