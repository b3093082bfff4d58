//! Asteroidal triples and quadruples, and their strong/weak/parallel refinements.

mod strong;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use strong::{
    find_strong_path, induced_paths, verify_strong_path_witness, Attachment, AttachmentRecord, StrongLink,
    StrongPathWitness,
};

use crate::clique_tree::DEFAULT_TREE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Search limits. A tripped limit yields an `unknown` outcome, never a wrong `absent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Maximum number of clique trees enumerated per graph.
    pub tree_limit: usize,
    /// Maximum number of chordless paths enumerated per vertex pair.
    pub path_limit: usize,
    /// Largest `t` tried for type-2 attachments.
    pub max_t: usize,
    /// Wall-clock allowance per graph.
    pub time_budget: Option<Duration>,
    #[serde(skip)]
    deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            tree_limit: DEFAULT_TREE_LIMIT,
            path_limit: 100_000,
            max_t: 3,
            time_budget: Some(Duration::from_secs(30)),
            deadline: None,
        }
    }
}

impl Budget {
    /// Budget with no wall-clock limit.
    pub fn unlimited_time() -> Self {
        Budget { time_budget: None, ..Budget::default() }
    }

    pub fn with_tree_limit(self, tree_limit: usize) -> Self {
        Budget { tree_limit, ..self }
    }

    pub fn with_path_limit(self, path_limit: usize) -> Self {
        Budget { path_limit, ..self }
    }

    pub fn with_max_t(self, max_t: usize) -> Self {
        Budget { max_t, ..self }
    }

    pub fn with_time_budget(self, time_budget: Option<Duration>) -> Self {
        Budget { time_budget, ..self }
    }

    /// Starts the wall clock: the returned budget expires `time_budget` from now.
    pub fn started(self) -> Self {
        Budget { deadline: self.time_budget.map(|d| Instant::now() + d), ..self }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Three-valued outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Unknown,
        }
    }

    pub fn or(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::Yes, _) | (_, Decision::Yes) => Decision::Yes,
            (Decision::No, Decision::No) => Decision::No,
            _ => Decision::Unknown,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        }
    }
}

impl std::ops::Not for Decision {
    type Output = Decision;

    fn not(self) -> Decision {
        match self {
            Decision::Yes => Decision::No,
            Decision::No => Decision::Yes,
            Decision::Unknown => Decision::Unknown,
        }
    }
}

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "value", rename_all = "snake_case")]
pub enum Search<T> {
    Found(T),
    Absent,
    Unknown(String),
}

impl<T> Search<T> {
    pub fn decision(&self) -> Decision {
        match self {
            Search::Found(_) => Decision::Yes,
            Search::Absent => Decision::No,
            Search::Unknown(_) => Decision::Unknown,
        }
    }

    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// A `u`-`v` path avoiding the closed neighborhood of `avoided`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidingPath {
    pub u: usize,
    pub v: usize,
    pub avoided: usize,
    pub path: Vec<usize>,
}

impl AvoidingPath {
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let ok_walk = self.path.first() == Some(&self.u)
            && self.path.last() == Some(&self.v)
            && self.path.iter().all(|&x| x < n)
            && self.path.windows(2).all(|w| g.adjacent(w[0], w[1]));
        ok_walk && self.avoided < n && self.path.iter().all(|&x| !g.closed_neighbors(self.avoided).contains(x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AsteroidKind {
    Triple,
    Quadruple,
}

/// An asteroidal triple or quadruple with one avoiding path per (pair, excluded member).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsteroidWitness {
    pub kind: AsteroidKind,
    pub members: Vec<usize>,
    pub paths: Vec<AvoidingPath>,
}

impl AsteroidWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let m = &self.members;
        let size_ok = match self.kind {
            AsteroidKind::Triple => m.len() == 3,
            AsteroidKind::Quadruple => m.len() == 4,
        };
        let set: VertexSet = m.iter().collect();
        if !size_ok || set.len() != m.len() || m.iter().any(|&x| x >= g.n()) || !g.is_stable(set) {
            return false;
        }
        // each (pair, third member) requirement has a valid proof
        m.iter().all(|&a| {
            m.iter().filter(|&&b| b > a).all(|&b| {
                m.iter().filter(|&&c| c != a && c != b).all(|&c| {
                    self.paths.iter().any(|p| {
                        p.avoided == c && ((p.u == a && p.v == b) || (p.u == b && p.v == a)) && p.verify(g)
                    })
                })
            })
        })
    }
}

/// A `u`-`v` path in `G \ N[w]`, found by breadth-first search.
///
/// Deleting the closed neighborhood is equivalent to avoiding `N(w)`: any path through `w`
/// reaches it from a neighbor of `w`.
pub fn avoiding_path(g: &Graph, u: usize, v: usize, w: usize) -> Result<Option<AvoidingPath>> {
    let n = g.n();
    if u >= n || v >= n || w >= n || u == v || u == w || v == w {
        return Err(Error::domain(format!("vertices {u}, {v}, {w} must be distinct and in range")));
    }
    if g.adjacent(u, w) || g.adjacent(v, w) {
        return Err(Error::domain(format!("{w} sees {u} or {v}")));
    }
    let allowed = g.vertices().difference(g.closed_neighbors(w));
    Ok(g.shortest_path(u, v, allowed).map(|path| AvoidingPath { u, v, avoided: w, path }))
}

/// For every vertex `w`, the components of `G \ N[w]`, as a component id per vertex.
#[derive(Clone, Debug)]
pub struct AvoidanceTable {
    comp: Vec<Vec<u8>>,
}

impl AvoidanceTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let comp = (0..n)
            .map(|w| {
                let mut ids = vec![u8::MAX; n];
                for (i, part) in g.components_after_removal(g.closed_neighbors(w)).iter().enumerate() {
                    for x in part.iter() {
                        ids[x] = i as u8;
                    }
                }
                ids
            })
            .collect();
        AvoidanceTable { comp }
    }

    /// `u` and `v` are joined by a path missing `N[w]`.
    #[inline]
    pub fn connects(&self, u: usize, v: usize, w: usize) -> bool {
        let c = &self.comp[w];
        c[u] != u8::MAX && c[u] == c[v]
    }

    pub fn is_asteroidal_triple(&self, a: usize, b: usize, c: usize) -> bool {
        self.connects(a, b, c) && self.connects(a, c, b) && self.connects(b, c, a)
    }
}

/// Vertex triples (ascending) forming asteroidal triples, without witnesses.
pub fn asteroidal_triple_members(g: &Graph) -> Vec<[usize; 3]> {
    let table = AvoidanceTable::new(g);
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        let na = g.vertices().difference(g.closed_neighbors(a));
        for b in na.iter().filter(|&b| b > a) {
            let nb = na.difference(g.closed_neighbors(b));
            for c in nb.iter().filter(|&c| c > b) {
                if table.is_asteroidal_triple(a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Vertex quadruples (ascending) every three of which form an asteroidal triple.
pub fn asteroidal_quadruple_members(g: &Graph) -> Vec<[usize; 4]> {
    quadruples_from(&asteroidal_triple_members(g))
}

fn quadruples_from(triples: &[[usize; 3]]) -> Vec<[usize; 4]> {
    let set: std::collections::HashSet<[usize; 3]> = triples.iter().copied().collect();
    let mut out = Vec::new();
    for &[a, b, c] in triples {
        // extend with a fourth member larger than c so each quadruple is produced once
        for &[p, q, d] in triples {
            if p == a && q == b && d > c && set.contains(&[a, c, d]) && set.contains(&[b, c, d]) {
                out.push([a, b, c, d]);
            }
        }
    }
    out.sort_unstable();
    out
}

fn witness(g: &Graph, kind: AsteroidKind, members: &[usize]) -> AsteroidWitness {
    let mut paths = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            for &c in members.iter().filter(|&&c| c != a && c != b) {
                let p = avoiding_path(g, a, b, c)
                    .expect("members are pairwise non-adjacent")
                    .expect("members form an asteroid");
                paths.push(p);
            }
        }
    }
    AsteroidWitness { kind, members: members.to_vec(), paths }
}

/// All asteroidal triples of `g` with their avoiding paths; empty iff `g` is AT-free.
pub fn find_asteroidal_triples(g: &Graph) -> Vec<AsteroidWitness> {
    asteroidal_triple_members(g).iter().map(|m| witness(g, AsteroidKind::Triple, m)).collect()
}

/// All asteroidal quadruples of `g` with their avoiding paths.
pub fn find_asteroidal_quadruples(g: &Graph) -> Vec<AsteroidWitness> {
    asteroidal_quadruple_members(g).iter().map(|m| witness(g, AsteroidKind::Quadruple, m)).collect()
}

/// Lazily computed strong-link outcomes for vertex pairs of one graph.
pub struct StrongLinks<'g> {
    g: &'g Graph,
    budget: Budget,
    cache: HashMap<(usize, usize), Search<StrongPathWitness>>,
}

impl<'g> StrongLinks<'g> {
    pub fn new(g: &'g Graph, budget: Budget) -> Self {
        StrongLinks { g, budget, cache: HashMap::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Strong-path search for a non-adjacent pair (order-insensitive, cached).
    pub fn link(&mut self, u: usize, v: usize) -> &Search<StrongPathWitness> {
        let key = (u.min(v), u.max(v));
        let (g, budget) = (self.g, self.budget);
        self.cache.entry(key).or_insert_with(|| {
            find_strong_path(g, key.0, key.1, &budget).unwrap_or_else(|e| Search::Unknown(e.to_string()))
        })
    }

    pub fn decision(&mut self, u: usize, v: usize) -> Decision {
        self.link(u, v).decision()
    }

    fn witness(&mut self, u: usize, v: usize) -> Option<StrongPathWitness> {
        self.link(u, v).found().cloned()
    }
}

/// Results of a budgeted scan: what was found, plus candidates left undecided by a budget.
#[derive(Clone, Debug, Serialize)]
pub struct Findings<T> {
    pub found: Vec<T>,
    pub undecided: Vec<Vec<usize>>,
}

impl<T> Findings<T> {
    /// Yes if anything was found; unknown if nothing was found but some candidate is undecided.
    pub fn decision(&self) -> Decision {
        if !self.found.is_empty() {
            Decision::Yes
        } else if !self.undecided.is_empty() {
            Decision::Unknown
        } else {
            Decision::No
        }
    }
}

/// An asteroidal triple together with strong paths linking some of its pairs.
#[derive(Clone, Debug, Serialize)]
pub struct LinkedAsteroid {
    pub asteroid: AsteroidWitness,
    pub links: Vec<StrongPathWitness>,
}

fn pair_decisions(links: &mut StrongLinks<'_>, m: &[usize]) -> Vec<((usize, usize), Decision)> {
    let mut out = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            out.push(((m[i], m[j]), links.decision(m[i], m[j])));
        }
    }
    out
}

/// Asteroidal triples all three of whose pairs are strong-linked.
pub fn strong_asteroidal_triples_with(links: &mut StrongLinks<'_>) -> Findings<LinkedAsteroid> {
    let g = links.graph();
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for m in asteroidal_triple_members(g) {
        let ds = pair_decisions(links, &m);
        match ds.iter().fold(Decision::Yes, |acc, &(_, d)| acc.and(d)) {
            Decision::Yes => {
                let ls = ds.iter().map(|&((a, b), _)| links.witness(a, b).unwrap()).collect();
                found.push(LinkedAsteroid { asteroid: witness(g, AsteroidKind::Triple, &m), links: ls });
            }
            Decision::Unknown => undecided.push(m.to_vec()),
            Decision::No => {}
        }
    }
    Findings { found, undecided }
}

/// Asteroidal triples with at least one strong-linked pair.
pub fn weak_asteroidal_triples_with(links: &mut StrongLinks<'_>) -> Findings<LinkedAsteroid> {
    let g = links.graph();
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for m in asteroidal_triple_members(g) {
        let ds = pair_decisions(links, &m);
        match ds.iter().fold(Decision::No, |acc, &(_, d)| acc.or(d)) {
            Decision::Yes => {
                let &((a, b), _) = ds.iter().find(|(_, d)| *d == Decision::Yes).unwrap();
                let ls = vec![links.witness(a, b).unwrap()];
                found.push(LinkedAsteroid { asteroid: witness(g, AsteroidKind::Triple, &m), links: ls });
            }
            Decision::Unknown => undecided.push(m.to_vec()),
            Decision::No => {}
        }
    }
    Findings { found, undecided }
}

/// Asteroidal quadruples every three-subset of which contains a strong-linked pair.
pub fn weak_asteroidal_quadruples_with(links: &mut StrongLinks<'_>) -> Findings<LinkedAsteroid> {
    let g = links.graph();
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for m in asteroidal_quadruple_members(g) {
        let mut verdict = Decision::Yes;
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for skip in 0..4 {
            let triple: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| m[i]).collect();
            let ds = pair_decisions(links, &triple);
            let d = ds.iter().fold(Decision::No, |acc, &(_, d)| acc.or(d));
            if let Some(&(p, _)) = ds.iter().find(|(_, d)| *d == Decision::Yes) {
                if !chosen.contains(&p) {
                    chosen.push(p);
                }
            }
            verdict = verdict.and(d);
        }
        match verdict {
            Decision::Yes => {
                let ls = chosen.iter().map(|&(a, b)| links.witness(a, b).unwrap()).collect();
                found.push(LinkedAsteroid { asteroid: witness(g, AsteroidKind::Quadruple, &m), links: ls });
            }
            Decision::Unknown => undecided.push(m.to_vec()),
            Decision::No => {}
        }
    }
    Findings { found, undecided }
}

/// Asteroidal quadruples splitting into two strong-linked pairs.
pub fn parallel_asteroidal_quadruples_with(links: &mut StrongLinks<'_>) -> Findings<LinkedAsteroid> {
    let g = links.graph();
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for m in asteroidal_quadruple_members(g) {
        let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
        let mut verdict = Decision::No;
        let mut hit = None;
        for pairing in pairings {
            let [(a, b), (c, d)] = pairing.map(|(i, j)| (m[i], m[j]));
            let v = links.decision(a, b).and(links.decision(c, d));
            if v == Decision::Yes && hit.is_none() {
                hit = Some([(a, b), (c, d)]);
            }
            verdict = verdict.or(v);
        }
        match verdict {
            Decision::Yes => {
                let [(a, b), (c, d)] = hit.unwrap();
                let ls = vec![links.witness(a, b).unwrap(), links.witness(c, d).unwrap()];
                found.push(LinkedAsteroid { asteroid: witness(g, AsteroidKind::Quadruple, &m), links: ls });
            }
            Decision::Unknown => undecided.push(m.to_vec()),
            Decision::No => {}
        }
    }
    Findings { found, undecided }
}

pub fn find_strong_asteroidal_triples(g: &Graph, budget: &Budget) -> Findings<LinkedAsteroid> {
    strong_asteroidal_triples_with(&mut StrongLinks::new(g, budget.started()))
}

pub fn find_weak_asteroidal_triples(g: &Graph, budget: &Budget) -> Findings<LinkedAsteroid> {
    weak_asteroidal_triples_with(&mut StrongLinks::new(g, budget.started()))
}

pub fn find_weak_asteroidal_quadruples(g: &Graph, budget: &Budget) -> Findings<LinkedAsteroid> {
    weak_asteroidal_quadruples_with(&mut StrongLinks::new(g, budget.started()))
}

pub fn find_parallel_asteroidal_quadruples(g: &Graph, budget: &Budget) -> Findings<LinkedAsteroid> {
    parallel_asteroidal_quadruples_with(&mut StrongLinks::new(g, budget.started()))
}

impl LinkedAsteroid {
    /// Re-checks the asteroid and every attached strong path.
    pub fn verify(&self, g: &Graph) -> bool {
        self.asteroid.verify(g)
            && self.links.iter().all(|l| {
                self.asteroid.members.contains(&l.u)
                    && self.asteroid.members.contains(&l.v)
                    && verify_strong_path_witness(g, l)
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::families::{generate, FamilySpec};

    fn b() -> Budget {
        Budget::unlimited_time()
    }

    fn sun3() -> Graph {
        generate(&FamilySpec::Sun { k: 3 }).unwrap()
    }

    fn spider(legs: usize) -> Graph {
        generate(&FamilySpec::Spider { legs }).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn decision_logic() {
        use Decision::*;
        assert_eq!(Yes.and(Unknown), Unknown);
        assert_eq!(No.and(Unknown), No);
        assert_eq!(Yes.or(Unknown), Yes);
        assert_eq!(No.or(Unknown), Unknown);
        assert_eq!(!Unknown, Unknown);
    }

    #[test]
    fn avoiding_paths() {
        // spider: center 0, m_i = 1+2i, z_i = 2+2i
        let g = spider(3);
        let p = avoiding_path(&g, 2, 4, 6).unwrap().unwrap();
        assert_eq!(p.path, vec![2, 1, 0, 3, 4]);
        assert!(p.verify(&g));
        let p5 = path(5);
        assert_eq!(avoiding_path(&p5, 0, 4, 2).unwrap(), None);
        assert!(avoiding_path(&p5, 0, 2, 1).is_err());
        // 3-sun: a = 0,1,2 ; s = 3,4,5
        let g = sun3();
        let p = avoiding_path(&g, 3, 4, 5).unwrap().unwrap();
        assert_eq!(p.path, vec![3, 1, 4]);
    }

    #[test]
    fn triples() {
        for n in 1..9 {
            assert!(find_asteroidal_triples(&path(n)).is_empty());
        }
        let g = spider(3);
        let ats = find_asteroidal_triples(&g);
        assert!(ats.iter().any(|w| w.members == vec![2, 4, 6]));
        assert!(ats.iter().all(|w| w.verify(&g)));
        let g = sun3();
        let ats = find_asteroidal_triples(&g);
        assert_eq!(ats.iter().map(|w| w.members.clone()).collect::<Vec<_>>(), vec![vec![3, 4, 5]]);
        assert!(ats[0].verify(&g));
    }

    #[test]
    fn quadruples() {
        let g = spider(4);
        let qs = find_asteroidal_quadruples(&g);
        assert!(qs.iter().any(|w| w.members == vec![2, 4, 6, 8]));
        assert!(qs.iter().all(|w| w.verify(&g)));
        assert!(find_asteroidal_quadruples(&spider(3)).is_empty());
        assert!(find_asteroidal_quadruples(&sun3()).is_empty());
    }

    // brute force: every 4-subset, every 3-subset checked through avoiding_path directly
    #[test]
    fn quadruples_match_brute_force() {
        for g in [spider(3), spider(4), sun3(), generate(&FamilySpec::F23).unwrap()] {
            let n = g.n();
            let is_at = |a: usize, b: usize, c: usize| {
                let stable = !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c);
                stable
                    && avoiding_path(&g, a, b, c).unwrap().is_some()
                    && avoiding_path(&g, a, c, b).unwrap().is_some()
                    && avoiding_path(&g, b, c, a).unwrap().is_some()
            };
            let mut brute = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            if is_at(a, b, c) && is_at(a, b, d) && is_at(a, c, d) && is_at(b, c, d) {
                                brute.push([a, b, c, d]);
                            }
                        }
                    }
                }
            }
            assert_eq!(asteroidal_quadruple_members(&g), brute);
        }
    }

    #[test]
    fn witness_rejects_adjacent_members() {
        let g = sun3();
        let mut w = find_asteroidal_triples(&g).remove(0);
        w.members[0] = 0;
        assert!(!w.verify(&g));
    }

    #[test]
    fn strong_triples() {
        let g = sun3();
        let s = find_strong_asteroidal_triples(&g, &b());
        assert_eq!(s.decision(), Decision::Yes);
        assert_eq!(s.found[0].asteroid.members, vec![3, 4, 5]);
        assert!(s.found[0].links.iter().all(|l| matches!(l.link, StrongLink::CommonNeighbor { .. })));
        assert!(s.found[0].verify(&g));
        assert_eq!(find_strong_asteroidal_triples(&spider(3), &b()).decision(), Decision::No);
        let f23 = generate(&FamilySpec::F23).unwrap();
        assert_eq!(find_strong_asteroidal_triples(&f23, &b()).decision(), Decision::No);
    }

    #[test]
    fn weak_and_parallel_quadruples() {
        let f23 = generate(&FamilySpec::F23).unwrap();
        let w = find_weak_asteroidal_quadruples(&f23, &b());
        assert_eq!(w.decision(), Decision::Yes);
        assert!(w.found.iter().all(|x| x.verify(&f23)));
        let p = find_parallel_asteroidal_quadruples(&f23, &b());
        assert_eq!(p.decision(), Decision::Yes);
        assert!(p.found.iter().all(|x| x.verify(&f23)));

        for g in [spider(4), sun3()] {
            assert_eq!(find_weak_asteroidal_quadruples(&g, &b()).decision(), Decision::No);
            assert_eq!(find_parallel_asteroidal_quadruples(&g, &b()).decision(), Decision::No);
        }
        let gadget = generate(&FamilySpec::Gadget { ell: 1 }).unwrap();
        let p = find_parallel_asteroidal_quadruples(&gadget, &b());
        assert_eq!(p.decision(), Decision::Yes);
    }

    #[test]
    fn members_permutation_invariance() {
        let g = spider(4);
        let table = AvoidanceTable::new(&g);
        let m = [2, 4, 6];
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(table.is_asteroidal_triple(m[p[0]], m[p[1]], m[p[2]]));
        }
    }
}
