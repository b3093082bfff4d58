//! Graph families, exhaustive enumeration, and the survey machinery that checks the
//! characterization theorems and lemmas graph by graph.

pub mod families;
mod survey;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{chordality, Graph};

pub use families::{generate, FamilySpec};
pub use survey::{
    analyze, hunt_conjecture, survey, AsteroidFlags, Check, CheckOutcome, CheckResult, CheckTally, HuntRecord,
    HuntStatus, HuntSummary, SurveyConfig, SurveyRecord, SurveySummary, Verdicts, SCHEMA_VERSION,
};

/// Largest vertex count for built-in labeled enumeration.
pub const MAX_LABELED_N: usize = 7;

/// Every connected chordal labeled graph on `n` vertices, in increasing order of the edge
/// bitmask (pairs `(i, j)`, `i < j`, in lexicographic order).
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_LABELED_N {
        return Err(Error::UnsupportedSize { n, max: MAX_LABELED_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        let g = Graph::from_edges(n, &edges).expect("pairs are in range");
        (g.is_connected() && chordality(&g).is_chordal()).then_some(g)
    }))
}

/// Exhaustive tally over the 64 labeled graphs on four vertices: whenever every three vertices
/// span an edge, the graph has a triangle or two disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Tally {
    pub graphs: usize,
    pub hypothesis_holds: usize,
    pub with_triangle: usize,
    pub with_disjoint_edges: usize,
    /// Edge masks violating the conclusion.
    pub violations: Vec<u8>,
}

impl Lemma5Tally {
    pub fn holds(&self) -> bool {
        self.graphs == 64 && self.violations.is_empty()
    }
}

pub fn check_lemma5() -> Lemma5Tally {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut tally =
        Lemma5Tally { graphs: 0, hypothesis_holds: 0, with_triangle: 0, with_disjoint_edges: 0, violations: Vec::new() };
    for mask in 0u8..64 {
        tally.graphs += 1;
        let adj = |a: usize, b: usize| {
            let k = pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
            mask >> k & 1 == 1
        };
        let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        if !triples.iter().all(|&[a, b, c]| adj(a, b) || adj(a, c) || adj(b, c)) {
            continue;
        }
        tally.hypothesis_holds += 1;
        let triangle = triples.iter().any(|&[a, b, c]| adj(a, b) && adj(a, c) && adj(b, c));
        let disjoint = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]
            .iter()
            .any(|&[(a, b), (c, d)]| adj(a, b) && adj(c, d));
        tally.with_triangle += usize::from(triangle);
        tally.with_disjoint_edges += usize::from(disjoint);
        if !triangle && !disjoint {
            tally.violations.push(mask);
        }
    }
    tally
}
