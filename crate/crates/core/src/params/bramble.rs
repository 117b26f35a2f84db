use alloc::format;
use alloc::vec::Vec;

use crate::bits::{bit, ones};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A family of vertex sets of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bramble {
    pub elements: Vec<Vec<usize>>,
}

impl Bramble {
    /// Checks that every element is nonempty and connected and that every two
    /// elements touch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() > 64 {
            return Err(Error::budget("bramble host order", 64, format!("graph has {} vertices", g.n())));
        }
        let masks = self.masks(g)?;
        for (i, e) in self.elements.iter().enumerate() {
            if e.is_empty() || !g.is_connected_set(e) {
                return Err(Error::InvalidBramble(format!("element {i} {e:?} is not a connected vertex set")));
            }
        }
        let adj = g.masks();
        let closed: Vec<u64> = masks
            .iter()
            .map(|&m| ones(m).fold(m, |acc, v| acc | adj[v]))
            .collect();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                if closed[i] & masks[j] == 0 {
                    return Err(Error::InvalidBramble(format!(
                        "elements {i} {:?} and {j} {:?} do not touch",
                        self.elements[i], self.elements[j]
                    )));
                }
            }
        }
        Ok(())
    }

    fn masks(&self, g: &Graph) -> Result<Vec<u64>> {
        self.elements
            .iter()
            .map(|e| {
                e.iter().try_fold(0u64, |m, &v| {
                    if v < g.n() {
                        Ok(m | bit(v))
                    } else {
                        Err(Error::InvalidBramble(format!("vertex {v} is not in the graph")))
                    }
                })
            })
            .collect()
    }

    /// Validates the bramble, then returns the minimum size of a set meeting
    /// every element.
    pub fn order(&self, g: &Graph) -> Result<usize> {
        self.validate(g)?;
        let mut masks = self.masks(g)?;
        masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        let mut best = g.n().min(masks.len());
        hit(&masks, 0, 0, &mut best);
        Ok(best)
    }
}

fn hit(elems: &[u64], chosen: u64, size: usize, best: &mut usize) {
    // elements are sorted by size, so the first unhit one is a smallest one
    let Some(&target) = elems.iter().find(|&&e| e & chosen == 0) else {
        *best = (*best).min(size);
        return;
    };
    let mut packed = 0u64;
    let mut lower = 0;
    for &e in elems {
        if e & chosen == 0 && e & packed == 0 {
            packed |= e;
            lower += 1;
        }
    }
    if size + lower >= *best {
        return;
    }
    for v in ones(target) {
        hit(elems, chosen | bit(v), size + 1, best);
    }
}

/// The bramble of all edges of `G = K_shape` (minus the edge `avoid` if
/// given) together with the singletons of a set `S` holding one vertex per
/// part. `S` avoids the ends of `avoid` where the part allows it. Vertices
/// are numbered part by part.
pub fn cmg_bramble(shape: &[usize], avoid: Option<(usize, usize)>) -> Result<(Graph, Bramble)> {
    let mut g = Graph::complete_multipartite(shape)?;
    if let Some((v, w)) = avoid {
        g = g.delete_edge(v, w)?;
    }
    let mut elements: Vec<Vec<usize>> = g.edges().map(|(u, v)| alloc::vec![u, v]).collect();
    let mut start = 0;
    for &p in shape {
        let part = start..start + p;
        let pick = part
            .clone()
            .find(|&x| avoid.is_none_or(|(v, w)| x != v && x != w))
            .unwrap_or(start);
        elements.push(alloc::vec![pick]);
        start += p;
    }
    Ok((g, Bramble { elements }))
}
