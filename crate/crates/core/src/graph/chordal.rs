use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Certificate for the chordality verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordalityWitness {
    /// Perfect elimination ordering: each vertex's later neighbors form a clique.
    Peo(Vec<usize>),
    /// Chordless cycle of length at least four, as a cyclic vertex sequence.
    Hole(Vec<usize>),
}

impl ChordalityWitness {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityWitness::Peo(_))
    }

    pub fn peo(&self) -> Option<&[usize]> {
        match self {
            ChordalityWitness::Peo(p) => Some(p),
            ChordalityWitness::Hole(_) => None,
        }
    }

    pub fn hole(&self) -> Option<&[usize]> {
        match self {
            ChordalityWitness::Hole(h) => Some(h),
            ChordalityWitness::Peo(_) => None,
        }
    }

    /// Checks the witness against `g` without trusting how it was produced.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ChordalityWitness::Peo(order) => {
                if order.len() != g.n() || order.iter().collect::<VertexSet>() != g.vertices() {
                    return false;
                }
                let mut later = g.vertices();
                order.iter().all(|&v| {
                    later.remove(v);
                    g.is_clique(g.neighbors(v).intersection(later))
                })
            }
            ChordalityWitness::Hole(cycle) => is_hole(g, cycle),
        }
    }
}

fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) || cycle.iter().collect::<VertexSet>().len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.adjacent(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Maximum cardinality search visiting order (ties broken by smallest index).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let v = unvisited.iter().max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).unwrap();
        unvisited.remove(v);
        order.push(v);
        for w in g.neighbors(v).intersection(unvisited) {
            weight[w] += 1;
        }
    }
    order
}

/// A hole through `v` using two non-adjacent neighbors of `v`, if one exists.
fn hole_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let nv = g.neighbors(v);
    for a in nv {
        for b in nv.difference(g.closed_neighbors(a)).iter().filter(|&b| b > a) {
            let allowed = g.vertices().difference(g.closed_neighbors(v)).with(a).with(b);
            if let Some(path) = g.shortest_path(a, b, allowed) {
                let mut hole = vec![v];
                hole.extend(path);
                return Some(hole);
            }
        }
    }
    None
}

/// Decides chordality. Returns a perfect elimination ordering for chordal graphs and a hole
/// otherwise; either way the witness passes [`ChordalityWitness::verify`].
pub fn chordality(g: &Graph) -> ChordalityWitness {
    let mut peo = mcs_order(g);
    peo.reverse();
    let mut later = g.vertices();
    let mut failed = None;
    for &v in &peo {
        later.remove(v);
        let ln = g.neighbors(v).intersection(later);
        // the earliest later neighbor must see all the others
        if let Some(p) = peo.iter().copied().find(|&w| ln.contains(w)) {
            if !ln.without(p).is_subset(g.neighbors(p)) {
                failed = Some(v);
                break;
            }
        }
    }
    let Some(v) = failed else {
        return ChordalityWitness::Peo(peo);
    };
    let hole = hole_through(g, v)
        .or_else(|| (0..g.n()).find_map(|w| hole_through(g, w)))
        .expect("a failed elimination check implies a hole");
    ChordalityWitness::Hole(hole)
}

/// All maximal cliques of a chordal graph, sorted by their ascending vertex lists.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    let peo = match chordality(g) {
        ChordalityWitness::Peo(p) => p,
        ChordalityWitness::Hole(hole) => return Err(Error::NotChordal { hole }),
    };
    let mut later = g.vertices();
    let mut candidates = Vec::with_capacity(g.n());
    for &v in &peo {
        later.remove(v);
        candidates.push(g.neighbors(v).intersection(later).with(v));
    }
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c.is_subset(d)))
        .collect();
    cliques.sort_by_key(|c| c.to_vec());
    cliques.dedup();
    Ok(cliques)
}
