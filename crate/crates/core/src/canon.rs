//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree is the usual one: refine the current ordered partition to
//! an equitable one, pick the first smallest non-singleton cell, individualise
//! each of its vertices in turn. Leaves are discrete partitions, i.e. vertex
//! orders; the canonical order is the one whose relabelled adjacency matrix is
//! lexicographically largest. Whenever two leaves give the same matrix their
//! composition is an automorphism, and children of a node that lie in the same
//! orbit of the automorphisms fixing that node's individualised vertices are
//! skipped.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// A byte string identifying a graph up to isomorphism.
///
/// Forms compare first by vertex count, then by the canonical adjacency
/// matrix; that order is used wherever graphs are reported "canonically
/// sorted".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Vertex count encoded in the form.
    pub fn order(&self) -> usize {
        u32::from_be_bytes([self.0[0], self.0[1], self.0[2], self.0[3]]) as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
    pub form: CanonicalForm,
    /// Automorphisms found during the search (as maps `v -> image`); they
    /// generate the full automorphism group (of the coloured graph).
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Orbit representative (smallest member) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.perm.len(), self.generators.iter().map(|g| g.as_slice()))
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Canonical labelling respecting a vertex colouring: isomorphisms must map
/// each colour class onto the class with the same colour value.
pub fn canonical_labeling_colored(g: &Graph, colors: &[usize]) -> Labeling {
    assert_eq!(colors.len(), g.n());
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut part = Partition::discrete_from(order, |a, b| colors[a] == colors[b]);
    let mut search = Search {
        g,
        words: g.words(),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let initial: Vec<usize> = part.cell_starts().collect();
    part.refine(g, initial);
    let mut fixed = Vec::new();
    search.descend(part, &mut fixed);

    let (cert, lab) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    let mut bytes = Vec::with_capacity(4 + n * n / 16 + 1);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    if colors.iter().any(|&c| c != 0) {
        for &v in &lab {
            bytes.extend_from_slice(&(colors[v] as u32).to_be_bytes());
        }
    }
    let words = g.words();
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            let bit = cert[i * words + j / 64] >> (j % 64) & 1;
            acc = acc << 1 | bit as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    Labeling {
        perm,
        form: CanonicalForm(bytes),
        generators: search.generators,
    }
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g).perm)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Orbit representatives (smallest vertex of each orbit) of the group
/// generated by `gens`.
pub fn orbits<'a>(n: usize, gens: impl IntoIterator<Item = &'a [usize]>) -> Vec<usize> {
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut uf, v), find(&mut uf, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                uf[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut uf, v)).collect()
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// start position of the cell containing each position
    start: Vec<usize>,
    /// cell length, valid at cell start positions
    len: Vec<usize>,
}

impl Partition {
    fn discrete_from(lab: Vec<usize>, same: impl Fn(usize, usize) -> bool) -> Self {
        let n = lab.len();
        let mut start = vec![0; n];
        let mut len = vec![0; n];
        let mut s = 0;
        for p in 0..n {
            if p > 0 && !same(lab[p - 1], lab[p]) {
                s = p;
            }
            start[p] = s;
            len[s] += 1;
        }
        Partition { lab, start, len }
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.lab.len()).filter(move |&p| self.start[p] == p)
    }

    fn is_discrete(&self) -> bool {
        (0..self.lab.len()).all(|p| self.start[p] == p)
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, using `queue` as the initial splitter cells.
    fn refine(&mut self, g: &Graph, queue: Vec<usize>) {
        let n = self.lab.len();
        let words = g.words();
        let mut inq = vec![false; n];
        let mut q: VecDeque<usize> = VecDeque::new();
        for s in queue {
            if !inq[s] {
                inq[s] = true;
                q.push_back(s);
            }
        }
        let mut mask = vec![0u64; words];
        let mut counts = vec![0u32; n];
        let mut cells = self.cell_starts().count();
        while let Some(ws) = q.pop_front() {
            inq[ws] = false;
            if cells == n {
                break;
            }
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &self.lab[ws..ws + self.len[ws]] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut p = 0;
            while p < n {
                let s = p;
                let l = self.len[s];
                p += l;
                if l == 1 {
                    continue;
                }
                let mut uniform = true;
                for pos in s..s + l {
                    let row = g.row(self.lab[pos]);
                    let c: u32 = row.iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                    counts[self.lab[pos]] = c;
                    if c != counts[self.lab[s]] {
                        uniform = false;
                    }
                }
                if uniform {
                    continue;
                }
                self.lab[s..s + l].sort_unstable_by_key(|&v| (counts[v], v));
                let was_queued = inq[s];
                let mut frag = s;
                for pos in s..s + l {
                    if pos > s && counts[self.lab[pos]] != counts[self.lab[pos - 1]] {
                        self.len[frag] = pos - frag;
                        frag = pos;
                        cells += 1;
                    }
                    self.start[pos] = frag;
                }
                self.len[frag] = s + l - frag;
                let mut f = s;
                while f < s + l {
                    if !(f == s && was_queued) && !inq[f] {
                        inq[f] = true;
                        q.push_back(f);
                    }
                    f += self.len[f];
                }
            }
        }
    }

    fn individualize(&mut self, v: usize) -> usize {
        let pos = self.lab.iter().position(|&x| x == v).expect("vertex present");
        let s = self.start[pos];
        let l = self.len[s];
        self.lab.swap(s, pos);
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for p in s + 1..s + l {
            self.start[p] = s + 1;
        }
        s
    }

    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((s, l));
            }
        }
        best
    }
}

struct Search<'a> {
    g: &'a Graph,
    words: usize,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition, fixed: &mut Vec<usize>) {
        if part.is_discrete() {
            self.leaf(&part.lab);
            return;
        }
        let (s, l) = part.target_cell().expect("non-discrete partition has a target");
        let mut cell: Vec<usize> = part.lab[s..s + l].to_vec();
        cell.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        let mut orbit_cache: Option<(usize, Vec<usize>)> = None;
        for &v in &cell {
            if !tried.is_empty() {
                let ngens = self.generators.len();
                if orbit_cache.as_ref().is_none_or(|(k, _)| *k != ngens) {
                    let stab = self
                        .generators
                        .iter()
                        .filter(|g| fixed.iter().all(|&x| g[x] == x))
                        .map(|g| g.as_slice());
                    orbit_cache = Some((ngens, orbits(self.g.n(), stab)));
                }
                let orb = &orbit_cache.as_ref().unwrap().1;
                if tried.iter().any(|&t| orb[t] == orb[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = part.clone();
            let cs = child.individualize(v);
            child.refine(self.g, vec![cs]);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, lab: &[usize]) {
        let n = lab.len();
        let words = self.words;
        let mut pos = vec![0; n];
        for (p, &v) in lab.iter().enumerate() {
            pos[v] = p;
        }
        let mut cert = vec![0u64; n * words];
        for (i, &v) in lab.iter().enumerate() {
            for u in self.g.neighbors(v) {
                let j = pos[u];
                cert[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        // Compare rows with the most significant label first so the byte
        // encoding and the in-memory order agree.
        let key = |c: &[u64]| -> Vec<u64> {
            let mut out = Vec::with_capacity(c.len());
            for i in 0..n {
                for w in 0..words {
                    out.push(c[i * words + w].reverse_bits());
                }
            }
            out
        };
        match &self.first {
            None => {
                self.first = Some((cert.clone(), lab.to_vec()));
                self.best = Some((cert, lab.to_vec()));
            }
            Some((fc, flab)) => {
                if *fc == cert {
                    self.generators.push(automorphism(flab, lab));
                    return;
                }
                let (bc, blab) = self.best.as_ref().unwrap();
                match key(&cert).cmp(&key(bc)) {
                    core::cmp::Ordering::Greater => self.best = Some((cert, lab.to_vec())),
                    core::cmp::Ordering::Equal => {
                        let gen = automorphism(blab, lab);
                        self.generators.push(gen);
                    }
                    core::cmp::Ordering::Less => {}
                }
            }
        }
    }
}

/// The automorphism sending `a[i]` to `b[i]`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut g = vec![0; a.len()];
    for (&x, &y) in a.iter().zip(b) {
        g[x] = y;
    }
    g
}
