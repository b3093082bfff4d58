use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::asteroid::{
    asteroidal_quadruple_members, asteroidal_triple_members, parallel_asteroidal_quadruples_with,
    strong_asteroidal_triples_with, weak_asteroidal_quadruples_with, Budget, Decision, Findings, LinkedAsteroid,
    StrongLinks,
};
use crate::clique_tree::{visit_clique_trees, CliqueTree, Visit};
use crate::error::{Error, Result};
use crate::graph::{write_graph6, Graph, GraphInput};
use crate::recognize::{classify, Analysis, ClassVerdict, Classification, GraphClass, Route};

pub const SCHEMA_VERSION: u32 = 1;

/// Graphs analyzed per parallel batch; records are written after each batch.
const BATCH: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Interval: theorem route agrees with the clique-tree oracle.
    Thm1,
    /// Directed path: theorem route agrees with the clique-tree oracle.
    Thm2,
    /// Rooted path graphs have no weak asteroidal quadruple.
    Thm4,
    /// No strong asteroidal triple plus a weak asteroidal quadruple implies a parallel one.
    Cor,
    /// Every asteroidal triple spans a 3-leaf subtree in every clique tree.
    Lemma1,
    /// Strong-linked pairs are joined by directed paths in every clique directed path tree.
    Lemma2,
    /// Every asteroidal quadruple spans a 4-leaf subtree in every clique tree.
    Lemma3,
}

impl Check {
    pub const ALL: [Check; 7] =
        [Check::Thm1, Check::Thm2, Check::Thm4, Check::Cor, Check::Lemma1, Check::Lemma2, Check::Lemma3];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Thm4 => "thm4",
            Check::Cor => "cor",
            Check::Lemma1 => "lemma1",
            Check::Lemma2 => "lemma2",
            Check::Lemma3 => "lemma3",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Unknown,
    /// The check does not apply (disconnected input).
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub outcome: CheckOutcome,
    /// Counterexample certificate on failure, budget reason when unknown.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl CheckResult {
    fn new(check: Check, outcome: CheckOutcome) -> Self {
        CheckResult { check, outcome, detail: None }
    }

    fn with(check: Check, outcome: CheckOutcome, detail: Value) -> Self {
        CheckResult { check, outcome, detail: Some(detail) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub chordal: Decision,
    pub interval: Decision,
    pub rooted_path: Decision,
    pub directed_path: Decision,
    pub path: Decision,
}

impl Verdicts {
    fn of(c: &Classification) -> Self {
        Verdicts {
            chordal: c.chordal.member,
            interval: c.interval.member,
            rooted_path: c.rooted_path.member,
            directed_path: c.directed_path.member,
            path: c.path.member,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsteroidFlags {
    pub at: Decision,
    pub strong_at: Decision,
    pub quad: Decision,
    pub weak_quad: Decision,
    pub parallel_quad: Decision,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRecord {
    pub schema_version: u32,
    /// Line of the input file the graph came from.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub verdicts: Verdicts,
    pub asteroids: AsteroidFlags,
    pub checks: Vec<CheckResult>,
    /// Per-stage durations in microseconds; only present when timings were requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
}

impl SurveyRecord {
    pub fn check(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyConfig {
    pub checks: Vec<Check>,
    pub budget: Budget,
    /// Record per-stage timings. Off by default so reports are reproducible byte for byte.
    pub timings: bool,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig { checks: Check::ALL.to_vec(), budget: Budget::default(), timings: false }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
    pub skipped: usize,
}

impl CheckTally {
    fn add(&mut self, o: CheckOutcome) {
        match o {
            CheckOutcome::Pass => self.pass += 1,
            CheckOutcome::Fail => self.fail += 1,
            CheckOutcome::Unknown => self.unknown += 1,
            CheckOutcome::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveySummary {
    pub schema_version: u32,
    pub graphs: usize,
    pub checks: BTreeMap<Check, CheckTally>,
    /// Lines of the input whose graphs failed some check.
    pub failing_lines: Vec<usize>,
}

impl SurveySummary {
    pub fn failures(&self) -> usize {
        self.checks.values().map(|t| t.fail).sum()
    }

    pub fn unknowns(&self) -> usize {
        self.checks.values().map(|t| t.unknown).sum()
    }

    /// Nothing was decided: every applicable check came out unknown.
    pub fn all_unknown(&self) -> bool {
        let decided: usize = self.checks.values().map(|t| t.pass + t.fail).sum();
        decided == 0 && self.unknowns() > 0
    }
}

/// Asteroid findings for one graph, kept for failure certificates.
struct AsteroidScan {
    flags: AsteroidFlags,
    strong_at: Findings<LinkedAsteroid>,
    weak_quad: Findings<LinkedAsteroid>,
    parallel_quad: Findings<LinkedAsteroid>,
}

fn scan_asteroids(g: &Graph, links: &mut StrongLinks<'_>) -> AsteroidScan {
    let at = Decision::from_bool(!asteroidal_triple_members(g).is_empty());
    let quad = Decision::from_bool(!asteroidal_quadruple_members(g).is_empty());
    let strong_at = strong_asteroidal_triples_with(links);
    let weak_quad = weak_asteroidal_quadruples_with(links);
    let parallel_quad = parallel_asteroidal_quadruples_with(links);
    AsteroidScan {
        flags: AsteroidFlags {
            at,
            strong_at: strong_at.decision(),
            quad,
            weak_quad: weak_quad.decision(),
            parallel_quad: parallel_quad.decision(),
        },
        strong_at,
        weak_quad,
        parallel_quad,
    }
}

fn route_check(check: Check, theorem: ClassVerdict, oracle: ClassVerdict) -> CheckResult {
    match (theorem.member, oracle.member) {
        (Decision::Unknown, _) | (_, Decision::Unknown) => {
            CheckResult::with(check, CheckOutcome::Unknown, json!({ "theorem": theorem, "oracle": oracle }))
        }
        (a, b) if a == b => CheckResult::new(check, CheckOutcome::Pass),
        _ => CheckResult::with(check, CheckOutcome::Fail, json!({ "theorem": theorem, "oracle": oracle })),
    }
}

/// `premise` implies `conclusion`, in three-valued logic.
fn implication(check: Check, premise: Decision, conclusion: Decision, detail: impl FnOnce() -> Value) -> CheckResult {
    match (!premise).or(conclusion) {
        Decision::Yes => CheckResult::new(check, CheckOutcome::Pass),
        Decision::No => CheckResult::with(check, CheckOutcome::Fail, detail()),
        Decision::Unknown => CheckResult::new(check, CheckOutcome::Unknown),
    }
}

/// Runs `per_tree` on every clique tree until it reports a violation.
fn over_all_trees(
    check: Check,
    g: &Graph,
    budget: &Budget,
    mut per_tree: impl FnMut(&CliqueTree) -> Option<Value>,
) -> CheckResult {
    let mut violation = None;
    let mut timed_out = false;
    let visit = visit_clique_trees(g, budget.tree_limit, |t| {
        if let Some(v) = per_tree(&t) {
            violation = Some(v);
            return ControlFlow::Break(());
        }
        if budget.expired() {
            timed_out = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if let Some(v) = violation {
        return CheckResult::with(check, CheckOutcome::Fail, v);
    }
    match visit {
        Ok(Visit::Complete) => CheckResult::new(check, CheckOutcome::Pass),
        Ok(_) if timed_out => CheckResult::with(check, CheckOutcome::Unknown, json!("time budget exhausted")),
        Ok(_) => CheckResult::with(check, CheckOutcome::Unknown, json!(format!("more than {} clique trees", budget.tree_limit))),
        Err(e) => CheckResult::with(check, CheckOutcome::Unknown, json!(e.to_string())),
    }
}

fn leaf_check(check: Check, g: &Graph, budget: &Budget, sets: Vec<Vec<usize>>) -> CheckResult {
    if sets.is_empty() {
        return CheckResult::new(check, CheckOutcome::Pass);
    }
    over_all_trees(check, g, budget, |t| {
        sets.iter().find_map(|z| match t.asteroid_subtree(z) {
            Ok(s) if s.leaf_count() == z.len() => None,
            Ok(s) => Some(json!({ "members": z, "tree": t, "subtree": s })),
            Err(e) => Some(json!({ "members": z, "tree": t, "error": e.to_string() })),
        })
    })
}

fn lemma2_check(a: &Analysis<'_>, directed: Decision) -> CheckResult {
    let check = Check::Lemma2;
    let g = a.graph();
    match directed {
        Decision::No => return CheckResult::new(check, CheckOutcome::Pass),
        Decision::Unknown => return CheckResult::new(check, CheckOutcome::Unknown),
        Decision::Yes => {}
    }
    let mut pairs = Vec::new();
    let mut undecided = Vec::new();
    {
        let mut links = a.links();
        for u in 0..g.n() {
            for v in g.vertices().difference(g.closed_neighbors(u)).iter().filter(|&v| v > u) {
                match links.decision(u, v) {
                    Decision::Yes => pairs.push([u, v]),
                    Decision::Unknown => undecided.push([u, v]),
                    Decision::No => {}
                }
            }
        }
    }
    let budget = *a.budget();
    let res = over_all_trees(check, g, &budget, |t| {
        if !t.is_clique_path_tree() {
            return None;
        }
        let orientations = match t.directed_orientations(budget.tree_limit) {
            Ok(o) => o,
            Err(e) => return Some(json!({ "tree": t, "error": e.to_string() })),
        };
        for o in &orientations {
            for z in &pairs {
                let sub = match o.asteroid_subtree(z) {
                    Ok(s) => s,
                    Err(e) => return Some(json!({ "pair": z, "tree": o, "error": e.to_string() })),
                };
                let ok = match sub.leaves.as_slice() {
                    &[x, y] => o.is_directed_path_between(x, y) == Some(true),
                    _ => false,
                };
                if !ok {
                    return Some(json!({ "pair": z, "tree": o, "subtree": sub }));
                }
            }
        }
        None
    });
    if res.outcome == CheckOutcome::Pass && !undecided.is_empty() {
        return CheckResult::with(check, CheckOutcome::Unknown, json!({ "undecided_pairs": undecided }));
    }
    res
}

/// Analyzes one graph: classification, asteroid flags, and the requested checks.
pub fn analyze(g: &Graph, line: usize, config: &SurveyConfig) -> SurveyRecord {
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, u64>| {
        if config.timings {
            timings.insert(name.to_string(), clock.elapsed().as_micros() as u64);
        }
        clock = Instant::now();
    };
    let graph6 = write_graph6(g).unwrap_or_default();
    let connected = g.n() > 0 && g.is_connected();
    let mut checks: Vec<Check> = config.checks.clone();
    checks.sort_unstable();
    checks.dedup();

    if !connected {
        let classification = classify(g, &config.budget);
        lap("classify", &mut timings);
        let scan = scan_asteroids(g, &mut StrongLinks::new(g, config.budget.started()));
        lap("asteroids", &mut timings);
        return SurveyRecord {
            schema_version: SCHEMA_VERSION,
            line,
            graph6,
            n: g.n(),
            verdicts: Verdicts::of(&classification),
            asteroids: scan.flags,
            checks: checks.into_iter().map(|c| CheckResult::new(c, CheckOutcome::Skipped)).collect(),
            timings: config.timings.then_some(timings),
        };
    }

    let a = Analysis::new(g, &config.budget);
    let classification = a.classify();
    lap("classify", &mut timings);
    let scan = scan_asteroids(g, &mut a.links());
    lap("asteroids", &mut timings);

    let flags = &scan.flags;
    let mut results = Vec::with_capacity(checks.len());
    for check in checks {
        let r = match check {
            Check::Thm1 => route_check(
                check,
                a.verdict(GraphClass::Interval, Route::Theorem),
                a.verdict(GraphClass::Interval, Route::Oracle),
            ),
            Check::Thm2 => route_check(
                check,
                a.verdict(GraphClass::DirectedPath, Route::Theorem),
                a.verdict(GraphClass::DirectedPath, Route::Oracle),
            ),
            Check::Thm4 => {
                let rooted = a.verdict(GraphClass::RootedPath, Route::Oracle);
                implication(check, rooted.member, !flags.weak_quad, || {
                    json!({ "rooted_path": rooted, "weak_quadruples": scan.weak_quad })
                })
            }
            Check::Cor => {
                let premise = (!flags.strong_at).and(flags.weak_quad);
                implication(check, premise, flags.parallel_quad, || {
                    json!({
                        "strong_triples": scan.strong_at,
                        "weak_quadruples": scan.weak_quad,
                        "parallel_quadruples": scan.parallel_quad,
                    })
                })
            }
            Check::Lemma1 if a.is_chordal() => {
                let sets = asteroidal_triple_members(g).iter().map(|m| m.to_vec()).collect();
                leaf_check(check, g, a.budget(), sets)
            }
            Check::Lemma3 if a.is_chordal() => {
                let sets = asteroidal_quadruple_members(g).iter().map(|m| m.to_vec()).collect();
                leaf_check(check, g, a.budget(), sets)
            }
            Check::Lemma2 => lemma2_check(&a, classification.directed_path.member),
            // no clique trees: the lemmas are vacuous
            Check::Lemma1 | Check::Lemma3 => CheckResult::new(check, CheckOutcome::Pass),
        };
        lap(check.as_str(), &mut timings);
        results.push(r);
    }

    SurveyRecord {
        schema_version: SCHEMA_VERSION,
        line,
        graph6,
        n: g.n(),
        verdicts: Verdicts::of(&classification),
        asteroids: scan.flags,
        checks: results,
        timings: config.timings.then_some(timings),
    }
}

/// Analyzes every input graph in parallel and writes one JSON record per line, in input order.
pub fn survey<I, W>(inputs: I, config: &SurveyConfig, mut out: W) -> Result<SurveySummary>
where
    I: IntoIterator<Item = GraphInput>,
    W: Write,
{
    let mut summary = SurveySummary {
        schema_version: SCHEMA_VERSION,
        graphs: 0,
        checks: config.checks.iter().map(|&c| (c, CheckTally::default())).collect(),
        failing_lines: Vec::new(),
    };
    let mut iter = inputs.into_iter();
    loop {
        let batch: Vec<GraphInput> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let records: Vec<SurveyRecord> = batch.par_iter().map(|gi| analyze(&gi.graph, gi.line, config)).collect();
        for r in &records {
            summary.graphs += 1;
            let mut failed = false;
            for c in &r.checks {
                summary.checks.entry(c.check).or_default().add(c.outcome);
                failed |= c.outcome == CheckOutcome::Fail;
            }
            if failed {
                summary.failing_lines.push(r.line);
            }
            let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "{line}").map_err(|e| Error::Input { line: r.line, reason: e.to_string() })?;
        }
    }
    out.flush()?;
    Ok(summary)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HuntStatus {
    /// The forbidden-asteroid prediction matches the rooted-path oracle.
    Agree,
    /// Prediction and oracle disagree: a potential counterexample.
    Candidate,
    /// A budget left the prediction or the oracle undecided.
    Undecided,
    /// Not a connected chordal graph.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct HuntRecord {
    pub schema_version: u32,
    pub line: usize,
    pub graph6: String,
    pub status: HuntStatus,
    /// No strong asteroidal triple and no weak asteroidal quadruple.
    pub predicted_rooted: Decision,
    pub rooted_path: ClassVerdict,
    pub strong_triples: Findings<LinkedAsteroid>,
    pub weak_quadruples: Findings<LinkedAsteroid>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HuntSummary {
    pub schema_version: u32,
    pub graphs: usize,
    pub agree: usize,
    pub skipped: usize,
    pub candidates: Vec<usize>,
    pub undecided: Vec<usize>,
}

fn hunt_one(g: &Graph, line: usize, budget: &Budget) -> Option<HuntRecord> {
    let graph6 = write_graph6(g).unwrap_or_default();
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let a = Analysis::new(g, budget);
    if !a.is_chordal() {
        return None;
    }
    let (strong_triples, weak_quadruples) = {
        let mut links = a.links();
        (strong_asteroidal_triples_with(&mut links), weak_asteroidal_quadruples_with(&mut links))
    };
    let predicted_rooted = (!strong_triples.decision()).and(!weak_quadruples.decision());
    let rooted_path = a.verdict(GraphClass::RootedPath, Route::Oracle);
    let status = match (predicted_rooted, rooted_path.member) {
        (Decision::Unknown, _) | (_, Decision::Unknown) => HuntStatus::Undecided,
        (p, r) if p == r => HuntStatus::Agree,
        _ => HuntStatus::Candidate,
    };
    Some(HuntRecord {
        schema_version: SCHEMA_VERSION,
        line,
        graph6,
        status,
        predicted_rooted,
        rooted_path,
        strong_triples,
        weak_quadruples,
    })
}

/// Compares the forbidden-asteroid prediction for rooted path graphs with the oracle on every
/// connected chordal input. Candidates and undecided graphs are written as JSON lines; agreeing
/// graphs are only counted.
pub fn hunt_conjecture<I, W>(inputs: I, budget: &Budget, mut out: W) -> Result<HuntSummary>
where
    I: IntoIterator<Item = GraphInput>,
    W: Write,
{
    let mut summary = HuntSummary { schema_version: SCHEMA_VERSION, ..HuntSummary::default() };
    let mut iter = inputs.into_iter();
    loop {
        let batch: Vec<GraphInput> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let records: Vec<(usize, Option<HuntRecord>)> =
            batch.par_iter().map(|gi| (gi.line, hunt_one(&gi.graph, gi.line, budget))).collect();
        for (line, r) in records {
            summary.graphs += 1;
            let Some(r) = r else {
                summary.skipped += 1;
                continue;
            };
            match r.status {
                HuntStatus::Agree | HuntStatus::Skipped => {
                    summary.agree += usize::from(r.status == HuntStatus::Agree);
                    continue;
                }
                HuntStatus::Candidate => summary.candidates.push(line),
                HuntStatus::Undecided => summary.undecided.push(line),
            }
            let json = serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "{json}").map_err(|e| Error::Input { line, reason: e.to_string() })?;
        }
    }
    out.flush()?;
    Ok(summary)
}
