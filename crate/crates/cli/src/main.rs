use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathgraph_core::asteroid::{
    find_asteroidal_quadruples, find_asteroidal_triples, find_parallel_asteroidal_quadruples,
    find_strong_asteroidal_triples, find_weak_asteroidal_quadruples,
};
use pathgraph_core::dot::{clique_tree_to_dot, witness_to_dot};
use pathgraph_core::harness::{generate, hunt_conjecture, survey, Check, FamilySpec, SurveyConfig};
use pathgraph_core::{
    build_clique_tree, chordality, read_graphs, recognize, write_graph6, Budget, Certificate, Decision, Graph,
    GraphClass, GraphInput, Route,
};
use serde_json::{json, Value};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ALL_UNKNOWN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pathgraph", version, about = "Chordal graph classes, clique trees and asteroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide class membership for every graph in FILE.
    Recognize {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
        /// Include certificates in the output.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Search every graph in FILE for asteroidal triples or quadruples.
    Asteroids {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Print a named family member in graph6.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Sun size.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Spider leg count.
        #[arg(long, default_value_t = 3)]
        legs: usize,
        /// Gadget connector length.
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the named checks over every graph in FILE.
    Survey {
        #[arg(long, value_delimiter = ',', default_value = "thm1,thm2,thm4,cor,lemma1,lemma2,lemma3")]
        checks: Vec<Check>,
        /// JSON-lines report; the summary goes next to it as `.summary.json`. Defaults to stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record per-stage timings (reports are then no longer reproducible byte for byte).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Look for graphs where the asteroid prediction and the rooted path oracle disagree.
    Hunt {
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Write Graphviz DOT for a clique tree or an asteroid witness of every graph in FILE.
    ExportDot {
        #[arg(long, value_enum)]
        what: DotArg,
        /// Draw the certificate tree of this class (oriented for directed and rooted path).
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    #[arg(long)]
    tree_limit: Option<usize>,
    #[arg(long)]
    path_limit: Option<usize>,
    #[arg(long)]
    max_t: Option<usize>,
    /// Per-graph wall budget; 0 disables it.
    #[arg(long)]
    time_budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        let mut b = Budget::default();
        if let Some(x) = self.tree_limit {
            b = b.with_tree_limit(x);
        }
        if let Some(x) = self.path_limit {
            b = b.with_path_limit(x);
        }
        if let Some(x) = self.max_t {
            b = b.with_max_t(x);
        }
        if let Some(ms) = self.time_budget_ms {
            b = b.with_time_budget((ms > 0).then(|| Duration::from_millis(ms)));
        }
        b
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ClassArg {
    Chordal,
    Interval,
    Path,
    DirectedPath,
    RootedPath,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Chordal => GraphClass::Chordal,
            ClassArg::Interval => GraphClass::Interval,
            ClassArg::Path => GraphClass::Path,
            ClassArg::DirectedPath => GraphClass::DirectedPath,
            ClassArg::RootedPath => GraphClass::RootedPath,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RouteArg {
    Theorem,
    Oracle,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    At,
    Quad,
    StrongAt,
    WeakQuad,
    ParallelQuad,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FamilyArg {
    Sun,
    Spider,
    F23,
    Gadget,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum DotArg {
    CliqueTree,
    Witness,
}

fn read_input(path: &Path) -> Result<Vec<GraphInput>> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let graphs = read_graphs(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(graphs)
}

fn graph6_of(g: &Graph) -> String {
    write_graph6(g).unwrap_or_default()
}

fn emit(out: &mut impl Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    CheckFailed,
    AllUnknown,
}

fn run_recognize(class: GraphClass, route: RouteArg, witness: bool, budget: Budget, file: &Path) -> Result<Status> {
    let routes: &[Route] = match route {
        RouteArg::Theorem => &[Route::Theorem],
        RouteArg::Oracle => &[Route::Oracle],
        RouteArg::Both => &[Route::Theorem, Route::Oracle],
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let (mut disagreements, mut decided, mut total) = (0, 0, 0);
    for gi in read_input(file)? {
        let mut verdicts: Vec<_> = routes.iter().map(|&r| recognize(&gi.graph, class, r, &budget)).collect();
        // classes without a theorem route answer by oracle twice
        verdicts.dedup_by_key(|v| v.route);
        let members: Vec<Decision> = verdicts.iter().map(|v| v.member).collect();
        total += 1;
        decided += usize::from(members.iter().any(|&m| m != Decision::Unknown));
        if members.contains(&Decision::Yes) && members.contains(&Decision::No) {
            disagreements += 1;
        }
        let verdicts: Vec<Value> = verdicts
            .into_iter()
            .map(|v| {
                let mut value = serde_json::to_value(&v)?;
                if let (false, Some(o)) = (witness, value.as_object_mut()) {
                    o.remove("certificate");
                }
                Ok(value)
            })
            .collect::<Result<_>>()?;
        emit(
            &mut out,
            &json!({ "line": gi.line, "graph6": graph6_of(&gi.graph), "class": class, "verdicts": verdicts }),
        )?;
    }
    out.flush()?;
    Ok(if disagreements > 0 {
        eprintln!("{disagreements} graph(s) where the routes disagree");
        Status::CheckFailed
    } else if total > 0 && decided == 0 {
        Status::AllUnknown
    } else {
        Status::Ok
    })
}

fn run_asteroids(mode: ModeArg, witness: bool, budget: Budget, file: &Path) -> Result<Status> {
    let mut out = BufWriter::new(io::stdout().lock());
    let (mut decided, mut total) = (0, 0);
    for gi in read_input(file)? {
        let g = &gi.graph;
        let b = budget.started();
        let (decision, found, undecided) = match mode {
            ModeArg::At | ModeArg::Quad => {
                let ws = match mode {
                    ModeArg::At => find_asteroidal_triples(g),
                    _ => find_asteroidal_quadruples(g),
                };
                (Decision::from_bool(!ws.is_empty()), serde_json::to_value(&ws)?, Vec::new())
            }
            ModeArg::StrongAt | ModeArg::WeakQuad | ModeArg::ParallelQuad => {
                let f = match mode {
                    ModeArg::StrongAt => find_strong_asteroidal_triples(g, &b),
                    ModeArg::WeakQuad => find_weak_asteroidal_quadruples(g, &b),
                    _ => find_parallel_asteroidal_quadruples(g, &b),
                };
                (f.decision(), serde_json::to_value(&f.found)?, f.undecided)
            }
        };
        total += 1;
        decided += usize::from(decision != Decision::Unknown);
        let count = found.as_array().map_or(0, Vec::len);
        let mut record = json!({
            "line": gi.line,
            "graph6": graph6_of(g),
            "mode": mode_name(mode),
            "decision": decision,
            "count": count,
            "undecided": undecided,
        });
        if witness {
            record["witnesses"] = found;
        }
        emit(&mut out, &record)?;
    }
    out.flush()?;
    Ok(if total > 0 && decided == 0 { Status::AllUnknown } else { Status::Ok })
}

fn mode_name(mode: ModeArg) -> &'static str {
    match mode {
        ModeArg::At => "at",
        ModeArg::Quad => "quad",
        ModeArg::StrongAt => "strong_at",
        ModeArg::WeakQuad => "weak_quad",
        ModeArg::ParallelQuad => "parallel_quad",
    }
}

fn run_gen(family: FamilyArg, k: usize, legs: usize, ell: usize, out: Option<&Path>) -> Result<Status> {
    let spec = match family {
        FamilyArg::Sun => FamilySpec::Sun { k },
        FamilyArg::Spider => FamilySpec::Spider { legs },
        FamilyArg::F23 => FamilySpec::F23,
        FamilyArg::Gadget => FamilySpec::Gadget { ell },
    };
    let g = generate(&spec)?;
    let line = format!("{}\n", write_graph6(&g)?);
    match out {
        Some(path) => fs::write(path, line).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(line.as_bytes())?,
    }
    Ok(Status::Ok)
}

/// `OUT.jsonl` → `OUT.summary.json`.
fn summary_path(report: &Path) -> PathBuf {
    report.with_extension("summary.json")
}

fn report_writer(report: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match report {
        Some(path) => {
            let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn write_summary(report: Option<&Path>, summary: Value) -> Result<()> {
    let text = serde_json::to_string_pretty(&summary)?;
    match report {
        Some(path) => {
            let p = summary_path(path);
            fs::write(&p, text + "\n").with_context(|| format!("writing {}", p.display()))?;
        }
        None => eprintln!("{text}"),
    }
    Ok(())
}

fn run_survey(checks: Vec<Check>, report: Option<&Path>, timings: bool, budget: Budget, file: &Path) -> Result<Status> {
    let inputs = read_input(file)?;
    let config = SurveyConfig { checks, budget, timings };
    let summary = survey(inputs, &config, report_writer(report)?)?;
    write_summary(report, serde_json::to_value(&summary)?)?;
    eprintln!(
        "surveyed {} graphs: {} failures, {} unknown",
        summary.graphs,
        summary.failures(),
        summary.unknowns()
    );
    Ok(if summary.failures() > 0 {
        Status::CheckFailed
    } else if summary.all_unknown() {
        Status::AllUnknown
    } else {
        Status::Ok
    })
}

fn run_hunt(report: Option<&Path>, budget: Budget, file: &Path) -> Result<Status> {
    let inputs = read_input(file)?;
    let summary = hunt_conjecture(inputs, &budget, report_writer(report)?)?;
    write_summary(report, serde_json::to_value(&summary)?)?;
    eprintln!(
        "hunted {} graphs: {} agree, {} skipped, {} candidates, {} undecided",
        summary.graphs,
        summary.agree,
        summary.skipped,
        summary.candidates.len(),
        summary.undecided.len()
    );
    if !summary.candidates.is_empty() {
        eprintln!("FINDING: candidate counterexamples on lines {:?}", summary.candidates);
    }
    let examined = summary.graphs - summary.skipped;
    Ok(if examined > 0 && summary.undecided.len() == examined { Status::AllUnknown } else { Status::Ok })
}

fn run_export_dot(what: DotArg, class: Option<ClassArg>, budget: Budget, file: &Path) -> Result<Status> {
    let mut out = BufWriter::new(io::stdout().lock());
    for gi in read_input(file)? {
        let g = &gi.graph;
        let dot = match what {
            DotArg::CliqueTree => {
                if !g.is_connected() {
                    bail!("line {}: graph is not connected", gi.line);
                }
                if let Some(hole) = chordality(g).hole() {
                    bail!("line {}: graph is not chordal (hole {hole:?})", gi.line);
                }
                match class {
                    None => clique_tree_to_dot(&build_clique_tree(g)?),
                    Some(c) => {
                        let v = recognize(g, c.into(), Route::Oracle, &budget);
                        match v.certificate {
                            Certificate::CliqueTree { tree } => clique_tree_to_dot(&tree),
                            _ => {
                                eprintln!("line {}: not a {} graph ({})", gi.line, v.class.as_str(), v.member.as_str());
                                continue;
                            }
                        }
                    }
                }
            }
            DotArg::Witness => {
                let strong = find_strong_asteroidal_triples(g, &budget.started());
                if let Some(w) = strong.found.first() {
                    witness_to_dot(g, &w.asteroid, &w.links)
                } else if let Some(w) = find_asteroidal_triples(g).first() {
                    witness_to_dot(g, w, &[])
                } else {
                    eprintln!("line {}: no asteroidal triple", gi.line);
                    continue;
                }
            }
        };
        out.write_all(dot.as_bytes())?;
    }
    out.flush()?;
    Ok(Status::Ok)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Recognize { class, route, witness, budget, file } => {
            run_recognize(class.into(), route, witness, budget.budget(), &file)
        }
        Command::Asteroids { mode, witness, budget, file } => run_asteroids(mode, witness, budget.budget(), &file),
        Command::Gen { family, k, legs, ell, out } => run_gen(family, k, legs, ell, out.as_deref()),
        Command::Survey { checks, report, timings, budget, file } => {
            run_survey(checks, report.as_deref(), timings, budget.budget(), &file)
        }
        Command::Hunt { report, budget, file } => run_hunt(report.as_deref(), budget.budget(), &file),
        Command::ExportDot { what, class, budget, file } => run_export_dot(what, class, budget.budget(), &file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(EXIT_CHECK_FAILED),
        Ok(Status::AllUnknown) => ExitCode::from(EXIT_ALL_UNKNOWN),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
