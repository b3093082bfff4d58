//! Recognizers for interval, rooted path, directed path, and path graphs.
//!
//! Interval and directed path graphs have two routes: the forbidden-asteroid characterization
//! (`Theorem`) and a search over all clique trees (`Oracle`). Path and rooted path graphs are
//! recognized by the oracle only. Every verdict carries a certificate that
//! [`ClassVerdict::verify`] re-checks from scratch.

use std::cell::{OnceCell, RefCell, RefMut};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::asteroid::{
    asteroidal_triple_members, find_asteroidal_triples, find_strong_asteroidal_triples,
    strong_asteroidal_triples_with, AsteroidKind, AsteroidWitness, Budget, Decision, LinkedAsteroid, StrongLinks,
};
use crate::clique_tree::{visit_clique_trees, CliqueTree, Visit};
use crate::graph::{chordality, ChordalityWitness, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Interval,
    RootedPath,
    DirectedPath,
    Path,
    Chordal,
}

impl GraphClass {
    /// The classes in inclusion order, smallest first.
    pub const CHAIN: [GraphClass; 5] =
        [GraphClass::Interval, GraphClass::RootedPath, GraphClass::DirectedPath, GraphClass::Path, GraphClass::Chordal];

    fn rank(self) -> usize {
        GraphClass::CHAIN.iter().position(|&c| c == self).unwrap()
    }

    /// Every member of `self` is a member of `other`.
    pub fn is_within(self, other: GraphClass) -> bool {
        self.rank() <= other.rank()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Interval => "interval",
            GraphClass::RootedPath => "rooted_path",
            GraphClass::DirectedPath => "directed_path",
            GraphClass::Path => "path",
            GraphClass::Chordal => "chordal",
        }
    }

    /// A clique tree of this shape certifies membership.
    fn accepts_tree(self, t: &CliqueTree) -> bool {
        match self {
            GraphClass::Interval => t.is_clique_path(),
            GraphClass::RootedPath => t.is_rooted_path_tree(),
            GraphClass::DirectedPath => t.is_directed_path_tree(),
            GraphClass::Path => t.is_clique_path_tree(),
            GraphClass::Chordal => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Theorem,
    Oracle,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Peo { order: Vec<usize> },
    Hole { cycle: Vec<usize> },
    CliqueTree { tree: CliqueTree },
    AsteroidalTriple { witness: AsteroidWitness },
    StrongAsteroidalTriple { witness: LinkedAsteroid },
    /// Chordal, and the exhaustive scan found no asteroidal triple.
    NoAsteroidalTriple,
    /// Chordal, and the strong-path scan decided every asteroidal triple negatively.
    NoStrongAsteroidalTriple,
    /// All clique trees were enumerated and none qualified.
    Exhausted { trees: usize },
    /// A search limit was hit.
    Budget { reason: String },
    PerComponent { components: Vec<ComponentVerdict> },
    /// Derived from the verdict for another class along the inclusion chain.
    Implied { from: GraphClass, certificate: Box<Certificate> },
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub verdict: ClassVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub class: GraphClass,
    pub member: Decision,
    pub route: Route,
    pub certificate: Certificate,
}

impl ClassVerdict {
    fn new(class: GraphClass, member: Decision, route: Route, certificate: Certificate) -> Self {
        ClassVerdict { class, member, route, certificate }
    }

    /// Re-checks the certificate against `g`. Unknown verdicts verify trivially.
    ///
    /// Negative theorem certificates are re-checked with the asteroid verifiers; exhaustion and
    /// asteroid-free claims are re-checked by recomputation under `budget`.
    pub fn verify(&self, g: &Graph, budget: &Budget) -> bool {
        let (class, member) = (self.class, self.member);
        if member == Decision::Unknown {
            return true;
        }
        let yes = member == Decision::Yes;
        match &self.certificate {
            Certificate::Peo { order } => {
                yes && class == GraphClass::Chordal && ChordalityWitness::Peo(order.clone()).verify(g)
            }
            Certificate::Hole { cycle } => !yes && ChordalityWitness::Hole(cycle.clone()).verify(g),
            Certificate::CliqueTree { tree } => yes && tree.is_valid_for(g) && class.accepts_tree(tree),
            Certificate::AsteroidalTriple { witness } => {
                !yes && class == GraphClass::Interval && witness.kind == AsteroidKind::Triple && witness.verify(g)
            }
            Certificate::StrongAsteroidalTriple { witness } => {
                !yes
                    && class == GraphClass::DirectedPath
                    && witness.asteroid.kind == AsteroidKind::Triple
                    && witness.links.len() == 3
                    && witness.verify(g)
            }
            Certificate::NoAsteroidalTriple => {
                yes && class == GraphClass::Interval
                    && chordality(g).is_chordal()
                    && find_asteroidal_triples(g).is_empty()
            }
            Certificate::NoStrongAsteroidalTriple => {
                yes && class == GraphClass::DirectedPath
                    && chordality(g).is_chordal()
                    && find_strong_asteroidal_triples(g, budget).decision() == Decision::No
            }
            Certificate::Exhausted { trees } => {
                if yes || !chordality(g).is_chordal() || !g.is_connected() {
                    return false;
                }
                let mut count = 0;
                let mut qualified = false;
                let visit = visit_clique_trees(g, budget.tree_limit, |t| {
                    count += 1;
                    qualified |= qualifies(class, &t);
                    ControlFlow::Continue(())
                });
                matches!(visit, Ok(Visit::Complete)) && count == *trees && !qualified
            }
            Certificate::Budget { .. } => false,
            Certificate::PerComponent { components } => {
                let mut covered = VertexSet::EMPTY;
                let mut combined = Decision::Yes;
                for c in components {
                    let set: VertexSet = c.vertices.iter().collect();
                    if set.intersects(covered) || !set.is_subset(g.vertices()) || c.verdict.class != class {
                        return false;
                    }
                    covered = covered.union(set);
                    let (h, _) = g.induced(set);
                    if !h.is_connected() || !c.verdict.verify(&h, budget) {
                        return false;
                    }
                    combined = combined.and(c.verdict.member);
                }
                covered == g.vertices() && combined == member
            }
            Certificate::Implied { from, certificate } => {
                let chain_ok = if yes { from.is_within(class) } else { class.is_within(*from) };
                let source = ClassVerdict::new(*from, member, self.route, (**certificate).clone());
                chain_ok && source.verify(g, budget)
            }
        }
    }
}

/// Whether some orientation/root of an unoriented clique tree puts it in `class`.
fn qualifies(class: GraphClass, t: &CliqueTree) -> bool {
    match class {
        GraphClass::Interval => t.is_clique_path(),
        GraphClass::Path => t.is_clique_path_tree(),
        GraphClass::DirectedPath => t.is_clique_path_tree() && matches!(t.orient_directed(), Ok(Some(_))),
        GraphClass::RootedPath => t.is_clique_path_tree() && matches!(t.orient_rooted(), Ok(Some(_))),
        GraphClass::Chordal => true,
    }
}

/// What one pass over all clique trees established.
#[derive(Clone, Debug)]
struct OracleSummary {
    trees: usize,
    complete: bool,
    reason: Option<String>,
    clique_path: Option<CliqueTree>,
    path_tree: Option<CliqueTree>,
    directed: Option<CliqueTree>,
    rooted: Option<CliqueTree>,
}

impl OracleSummary {
    fn witness(&self, class: GraphClass) -> Option<&CliqueTree> {
        match class {
            GraphClass::Interval => self.clique_path.as_ref(),
            GraphClass::RootedPath => self.rooted.as_ref(),
            GraphClass::DirectedPath => self.directed.as_ref(),
            GraphClass::Path => self.path_tree.as_ref(),
            GraphClass::Chordal => None,
        }
    }
}

/// Per-graph analysis of a connected graph, caching the clique-tree pass and strong links
/// across recognizers.
pub struct Analysis<'g> {
    g: &'g Graph,
    budget: Budget,
    chordality: ChordalityWitness,
    oracle: OnceCell<OracleSummary>,
    links: RefCell<StrongLinks<'g>>,
}

impl<'g> Analysis<'g> {
    /// Starts the per-graph wall clock of `budget`.
    pub fn new(g: &'g Graph, budget: &Budget) -> Self {
        let budget = budget.started();
        Analysis { g, budget, chordality: chordality(g), oracle: OnceCell::new(), links: RefCell::new(StrongLinks::new(g, budget)) }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn chordality(&self) -> &ChordalityWitness {
        &self.chordality
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality.is_chordal()
    }

    /// Shared strong-link cache.
    pub fn links(&self) -> RefMut<'_, StrongLinks<'g>> {
        self.links.borrow_mut()
    }

    fn hole_verdict(&self, class: GraphClass, route: Route) -> Option<ClassVerdict> {
        let cycle = self.chordality.hole()?.to_vec();
        Some(ClassVerdict::new(class, Decision::No, route, Certificate::Hole { cycle }))
    }

    pub fn chordal(&self) -> ClassVerdict {
        match &self.chordality {
            ChordalityWitness::Peo(order) => ClassVerdict::new(
                GraphClass::Chordal,
                Decision::Yes,
                Route::Theorem,
                Certificate::Peo { order: order.clone() },
            ),
            ChordalityWitness::Hole(cycle) => ClassVerdict::new(
                GraphClass::Chordal,
                Decision::No,
                Route::Theorem,
                Certificate::Hole { cycle: cycle.clone() },
            ),
        }
    }

    /// Verdict for `class` by `route`. Path and rooted path graphs have no theorem route and
    /// are always decided by the oracle; the verdict reports the route actually used.
    pub fn verdict(&self, class: GraphClass, route: Route) -> ClassVerdict {
        match (class, route) {
            (GraphClass::Chordal, _) => self.chordal(),
            (GraphClass::Interval, Route::Theorem) => self.interval_theorem(),
            (GraphClass::DirectedPath, Route::Theorem) => self.directed_theorem(),
            _ => self.oracle_verdict(class),
        }
    }

    fn interval_theorem(&self) -> ClassVerdict {
        if let Some(v) = self.hole_verdict(GraphClass::Interval, Route::Theorem) {
            return v;
        }
        let (member, certificate) = match asteroidal_triple_members(self.g).first() {
            Some(&m) => {
                let witness = find_asteroidal_triples(self.g).into_iter().find(|w| w.members == m).unwrap();
                (Decision::No, Certificate::AsteroidalTriple { witness })
            }
            None => (Decision::Yes, Certificate::NoAsteroidalTriple),
        };
        ClassVerdict::new(GraphClass::Interval, member, Route::Theorem, certificate)
    }

    fn directed_theorem(&self) -> ClassVerdict {
        if let Some(v) = self.hole_verdict(GraphClass::DirectedPath, Route::Theorem) {
            return v;
        }
        let findings = strong_asteroidal_triples_with(&mut self.links());
        let (member, certificate) = match findings.decision() {
            Decision::Yes => {
                let witness = findings.found.into_iter().next().unwrap();
                (Decision::No, Certificate::StrongAsteroidalTriple { witness })
            }
            Decision::No => (Decision::Yes, Certificate::NoStrongAsteroidalTriple),
            Decision::Unknown => {
                let reason = format!("strong-path search undecided for triples {:?}", findings.undecided);
                (Decision::Unknown, Certificate::Budget { reason })
            }
        };
        ClassVerdict::new(GraphClass::DirectedPath, member, Route::Theorem, certificate)
    }

    fn oracle_verdict(&self, class: GraphClass) -> ClassVerdict {
        if let Some(v) = self.hole_verdict(class, Route::Oracle) {
            return v;
        }
        let s = self.oracle();
        let (member, certificate) = match s.witness(class) {
            Some(t) => (Decision::Yes, Certificate::CliqueTree { tree: t.clone() }),
            None if s.complete => (Decision::No, Certificate::Exhausted { trees: s.trees }),
            None => {
                let reason = s.reason.clone().unwrap_or_else(|| "clique-tree search incomplete".into());
                (Decision::Unknown, Certificate::Budget { reason })
            }
        };
        ClassVerdict::new(class, member, Route::Oracle, certificate)
    }

    fn oracle(&self) -> &OracleSummary {
        self.oracle.get_or_init(|| {
            let mut s = OracleSummary {
                trees: 0,
                complete: false,
                reason: None,
                clique_path: None,
                path_tree: None,
                directed: None,
                rooted: None,
            };
            let mut timed_out = false;
            let budget = self.budget;
            let visit = visit_clique_trees(self.g, budget.tree_limit, |t| {
                s.trees += 1;
                if s.clique_path.is_none() && t.is_clique_path() {
                    s.clique_path = Some(t.clone());
                }
                if t.is_clique_path_tree() {
                    if s.path_tree.is_none() {
                        s.path_tree = Some(t.clone());
                    }
                    if s.directed.is_none() {
                        s.directed = t.orient_directed().ok().flatten();
                    }
                    if s.rooted.is_none() {
                        s.rooted = t.orient_rooted().ok().flatten();
                    }
                }
                if s.clique_path.is_some() && s.rooted.is_some() {
                    // every other class contains these two
                    return ControlFlow::Break(());
                }
                if budget.expired() {
                    timed_out = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            match visit {
                Ok(Visit::Complete) => s.complete = true,
                Ok(Visit::BudgetExceeded) => {
                    s.reason = Some(format!("more than {} clique trees", budget.tree_limit));
                }
                Ok(Visit::Stopped) if timed_out => s.reason = Some("time budget exhausted".into()),
                Ok(Visit::Stopped) => {}
                Err(e) => s.reason = Some(e.to_string()),
            }
            s
        })
    }

    /// All five verdicts: interval by theorem, directed path by theorem with oracle fallback,
    /// path and rooted path by oracle, then unknowns filled along the inclusion chain.
    pub fn classify(&self) -> Classification {
        let interval = self.verdict(GraphClass::Interval, Route::Theorem);
        let mut directed = self.verdict(GraphClass::DirectedPath, Route::Theorem);
        if directed.member == Decision::Unknown {
            directed = self.verdict(GraphClass::DirectedPath, Route::Oracle);
        }
        let mut c = Classification {
            chordal: self.chordal(),
            interval,
            rooted_path: self.verdict(GraphClass::RootedPath, Route::Oracle),
            directed_path: directed,
            path: self.verdict(GraphClass::Path, Route::Oracle),
        };
        c.propagate();
        c
    }
}

/// Verdicts for all five classes.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub chordal: ClassVerdict,
    pub interval: ClassVerdict,
    pub rooted_path: ClassVerdict,
    pub directed_path: ClassVerdict,
    pub path: ClassVerdict,
}

impl Classification {
    pub fn get(&self, class: GraphClass) -> &ClassVerdict {
        match class {
            GraphClass::Interval => &self.interval,
            GraphClass::RootedPath => &self.rooted_path,
            GraphClass::DirectedPath => &self.directed_path,
            GraphClass::Path => &self.path,
            GraphClass::Chordal => &self.chordal,
        }
    }

    fn get_mut(&mut self, class: GraphClass) -> &mut ClassVerdict {
        match class {
            GraphClass::Interval => &mut self.interval,
            GraphClass::RootedPath => &mut self.rooted_path,
            GraphClass::DirectedPath => &mut self.directed_path,
            GraphClass::Path => &mut self.path,
            GraphClass::Chordal => &mut self.chordal,
        }
    }

    pub fn verdicts(&self) -> [&ClassVerdict; 5] {
        GraphClass::CHAIN.map(|c| self.get(c))
    }

    /// Replaces unknowns implied by decided verdicts: membership propagates up the chain,
    /// non-membership down.
    fn propagate(&mut self) {
        let chain = GraphClass::CHAIN;
        for (i, &lo) in chain.iter().enumerate() {
            for &hi in &chain[i + 1..] {
                self.imply(lo, hi, Decision::Yes);
                self.imply(hi, lo, Decision::No);
            }
        }
        for (i, &hi) in chain.iter().enumerate().rev() {
            for &lo in &chain[..i] {
                self.imply(hi, lo, Decision::No);
            }
        }
    }

    fn imply(&mut self, from: GraphClass, to: GraphClass, value: Decision) {
        let src = self.get(from);
        if src.member != value || self.get(to).member != Decision::Unknown {
            return;
        }
        let certificate = Certificate::Implied { from, certificate: Box::new(src.certificate.clone()) };
        let route = src.route;
        *self.get_mut(to) = ClassVerdict::new(to, value, route, certificate);
    }

    /// No decided verdict contradicts another along the chain.
    pub fn is_monotone(&self) -> bool {
        let chain = GraphClass::CHAIN;
        chain.iter().enumerate().all(|(i, &lo)| {
            chain[i + 1..].iter().all(|&hi| {
                !(self.get(lo).member == Decision::Yes && self.get(hi).member == Decision::No)
            })
        })
    }

    pub fn verify(&self, g: &Graph, budget: &Budget) -> bool {
        self.verdicts().iter().all(|v| v.verify(g, budget))
    }
}

fn combine(class: GraphClass, route: Route, g: &Graph, parts: Vec<(Vec<usize>, ClassVerdict)>) -> ClassVerdict {
    debug_assert!(parts.iter().all(|(vs, _)| vs.iter().all(|&v| v < g.n())));
    let member = parts.iter().fold(Decision::Yes, |acc, (_, v)| acc.and(v.member));
    let components = parts.into_iter().map(|(vertices, verdict)| ComponentVerdict { vertices, verdict }).collect();
    ClassVerdict::new(class, member, route, Certificate::PerComponent { components })
}

/// Components as `(induced subgraph, original vertex ids)`.
fn components(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    g.components_after_removal(VertexSet::EMPTY).into_iter().map(|c| g.induced(c)).collect()
}

fn needs_split(g: &Graph) -> bool {
    g.n() == 0 || !g.is_connected()
}

/// Decides one class. Disconnected graphs are decided per component: a graph belongs to the
/// class iff every component does.
pub fn recognize(g: &Graph, class: GraphClass, route: Route, budget: &Budget) -> ClassVerdict {
    if class == GraphClass::Chordal || !needs_split(g) {
        return Analysis::new(g, budget).verdict(class, route);
    }
    let parts = components(g)
        .into_iter()
        .map(|(h, ids)| {
            let v = Analysis::new(&h, budget).verdict(class, route);
            (ids, v)
        })
        .collect();
    combine(class, route, g, parts)
}

pub fn recognize_interval(g: &Graph, route: Route, budget: &Budget) -> ClassVerdict {
    recognize(g, GraphClass::Interval, route, budget)
}

pub fn recognize_path(g: &Graph, budget: &Budget) -> ClassVerdict {
    recognize(g, GraphClass::Path, Route::Oracle, budget)
}

pub fn recognize_directed_path(g: &Graph, route: Route, budget: &Budget) -> ClassVerdict {
    recognize(g, GraphClass::DirectedPath, route, budget)
}

pub fn recognize_rooted_path(g: &Graph, budget: &Budget) -> ClassVerdict {
    recognize(g, GraphClass::RootedPath, Route::Oracle, budget)
}

/// Verdicts for all five classes, monotone along the inclusion chain.
pub fn classify(g: &Graph, budget: &Budget) -> Classification {
    if !needs_split(g) {
        return Analysis::new(g, budget).classify();
    }
    let chordal = Analysis::new(g, budget).chordal();
    let parts: Vec<(Vec<usize>, Classification)> = components(g)
        .into_iter()
        .map(|(h, ids)| {
            let c = Analysis::new(&h, budget).classify();
            (ids, c)
        })
        .collect();
    let pick = |class: GraphClass| {
        let route = parts.first().map_or(Route::Theorem, |(_, c)| c.get(class).route);
        let ps = parts.iter().map(|(ids, c)| (ids.clone(), c.get(class).clone())).collect();
        combine(class, route, g, ps)
    };
    Classification {
        chordal,
        interval: pick(GraphClass::Interval),
        rooted_path: pick(GraphClass::RootedPath),
        directed_path: pick(GraphClass::DirectedPath),
        path: pick(GraphClass::Path),
    }
}
