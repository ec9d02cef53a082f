//! `listcol`: decide list, interval and precoloring variants of graph
//! coloring, run the choosability deciders and apply the reductions.
//!
//! Every command except `generate`/`random` without `-o` prints one JSON
//! report on stdout. Exit status is 0 for a positive answer, 1 for a
//! negative one and 2 for errors, including budget refusals.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use listcol::choose::DEFAULT_BUDGET;
use listcol::graph::{generate, parse_graph, random_bipartite, random_gnp, serialize_graph, Family};
use listcol::model::{parse_assignment, serialize_assignment, Assignment};
use listcol::{
    chromatic_number, exists_list_coloring, gamma_mu_choosability_number, gamma_mu_coloring, is_k_choosable,
    is_k_gamma_mu_choosable, k_coloring, modular_lift, mu_coloring, precoloring_extension, psi_transform, ChooseConfig,
    Coloring, Graph, SolveResult, SolverMode, StartPolicy, UniverseMode,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use report::{write_output, Outcome, Report};

#[derive(Parser)]
#[command(name = "listcol", version, about = "List coloring and interval choosability toolkit")]
struct Cli {
    /// Add a prose `summary` field to the report.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family.
    Generate {
        family: Family,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a seeded random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Only place edges between the two halves of the vertex set.
        #[arg(long)]
        bipartite: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide one coloring instance.
    Solve {
        #[arg(long, value_enum)]
        model: SolveModel,
        #[arg(long)]
        graph: PathBuf,
        /// Assignment document; required for every model except `kcolor`.
        #[arg(long)]
        assignment: Option<PathBuf>,
        /// Number of colors for `kcolor`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Solver::Pruned)]
        solver: Solver,
    },
    /// Decide whether every assignment of size-k lists admits a coloring.
    Choosable {
        #[arg(long, value_enum, default_value_t = ChooseModel::Interval)]
        model: ChooseModel,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Colors available to classical lists; defaults to n·k.
        #[arg(long)]
        pool: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
        /// Write the first failing assignment as an assignment document.
        #[arg(long)]
        emit_counterexample: Option<PathBuf>,
    },
    /// Smallest k for which the graph is k-(γ,μ)-choosable.
    ChoosabilityNumber {
        #[arg(long)]
        graph: PathBuf,
        /// Begin the search at k = 2 instead of k = 1.
        #[arg(long)]
        strict_start: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Apply a reduction.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Chromatic number by exhaustive search.
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Number of interval assignments enumerated for n vertices and size k.
    Count { n: usize, k: usize },
}

#[derive(Subcommand)]
enum Reduce {
    /// Turn a list instance into an interval instance with pinned pendants.
    Psi {
        #[arg(long)]
        graph: PathBuf,
        /// List assignment document.
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_assignment: Option<PathBuf>,
    },
    /// Map a proper k-coloring into size-k intervals by residue class.
    Lift {
        #[arg(long)]
        graph: PathBuf,
        /// Interval assignment document with every interval of size k.
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        k: usize,
        /// Coloring document; a k-coloring is searched for when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Universe::PaperLiteral)]
    universe: Universe,
    #[arg(long, value_enum, default_value_t = Solver::Pruned)]
    solver: Solver,
    /// Refuse runs that would enumerate more assignments than this.
    #[arg(long, env = "LISTCOL_BUDGET", default_value_t = BigUint::from(DEFAULT_BUDGET), value_parser = parse_big)]
    budget: BigUint,
    /// Run even when the budget is exceeded.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl RunArgs {
    fn config(&self) -> ChooseConfig {
        ChooseConfig {
            universe: match self.universe {
                Universe::PaperLiteral => UniverseMode::PaperLiteral,
                Universe::Normalized => UniverseMode::Normalized,
            },
            solver: self.solver.into(),
            budget: self.budget.clone(),
            force: self.force,
            workers: self.workers.max(1),
        }
    }
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveModel {
    List,
    Mu,
    Gammamu,
    Precolor,
    Kcolor,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChooseModel {
    Interval,
    Classical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Universe {
    PaperLiteral,
    Normalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Pruned,
    PaperLiteral,
}

impl From<Solver> for SolverMode {
    fn from(s: Solver) -> Self {
        match s {
            Solver::Pruned => SolverMode::Pruned,
            Solver::PaperLiteral => SolverMode::PaperLiteral,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new();
    match run(cli.command, &mut report) {
        Ok(Some(outcome)) => {
            emit(&report.render(cli.human, None));
            ExitCode::from(outcome.code())
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            emit(&report.render(cli.human, Some(&e)));
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Adds the override hint to budget refusals.
fn budget_hint(e: listcol::Error) -> anyhow::Error {
    match e {
        listcol::Error::BudgetExceeded { .. } => {
            anyhow!(e).context("refusing to run; pass --force or raise --budget (LISTCOL_BUDGET)")
        }
        other => other.into(),
    }
}

fn load_graph(report: &mut Report, path: &Path) -> Result<Graph> {
    Ok(parse_graph(&report.read_input(path)?)?)
}

fn load_assignment(report: &mut Report, path: &Path) -> Result<Assignment> {
    Ok(parse_assignment(&report.read_input(path)?)?)
}

fn colors(c: &Coloring) -> Value {
    json!(c.as_slice())
}

/// Runs one command. `None` means the command already wrote its output and
/// no report should be printed.
fn run(command: Command, report: &mut Report) -> Result<Option<Outcome>> {
    match command {
        Command::Generate { family, params, output } => {
            let g = generate(family, &params)?;
            emit_graph(report, &g, output, json!({ "family": family.name(), "params": params }))
        }
        Command::Random {
            n,
            p,
            seed,
            bipartite,
            output,
        } => {
            if !(0.0..=1.0).contains(&p) {
                bail!("edge probability {p} is outside [0, 1]");
            }
            let g = if bipartite {
                random_bipartite(n, p, seed)
            } else {
                random_gnp(n, p, seed)
            };
            emit_graph(
                report,
                &g,
                output,
                json!({ "n": n, "p": p, "seed": seed, "bipartite": bipartite }),
            )
        }
        Command::Solve {
            model,
            graph,
            assignment,
            k,
            solver,
        } => cmd_solve(report, model, &graph, assignment.as_deref(), k, solver.into()).map(Some),
        Command::Choosable {
            model,
            graph,
            k,
            pool,
            run,
            emit_counterexample,
        } => cmd_choosable(report, model, &graph, k, pool, &run, emit_counterexample.as_deref()).map(Some),
        Command::ChoosabilityNumber {
            graph,
            strict_start,
            run,
        } => {
            let g = load_graph(report, &graph)?;
            let start = if strict_start {
                StartPolicy::FromTwo
            } else {
                StartPolicy::FromOne
            };
            let number = gamma_mu_choosability_number(&g, &run.config(), start).map_err(budget_hint)?;
            report.set("choosability_number", number);
            report.summary(format!("the graph is {number}-(γ,μ)-choosable and no smaller k works"));
            Ok(Some(Outcome::Yes))
        }
        Command::Reduce(Reduce::Psi {
            graph,
            assignment,
            out_graph,
            out_assignment,
        }) => cmd_psi(
            report,
            &graph,
            &assignment,
            out_graph.as_deref(),
            out_assignment.as_deref(),
        )
        .map(Some),
        Command::Reduce(Reduce::Lift {
            graph,
            assignment,
            k,
            coloring,
        }) => cmd_lift(report, &graph, &assignment, k, coloring.as_deref()).map(Some),
        Command::Chromatic { graph } => {
            let g = load_graph(report, &graph)?;
            let chi = chromatic_number(&g);
            report.set("chromatic_number", chi);
            if let Some(c) = k_coloring(&g, chi).witness {
                report.set("witness", colors(&c));
            }
            report.summary(format!("chromatic number {chi}"));
            Ok(Some(Outcome::Yes))
        }
        Command::Count { n, k } => {
            if k == 0 || k > n {
                bail!("interval size k = {k} must lie in 1..={n}");
            }
            let count = BigUint::from(n - k + 1).pow(n as u32);
            report.set("n", n);
            report.set("k", k);
            report.set("count", count.to_string());
            report.summary(format!("{} interval assignments", count));
            Ok(Some(Outcome::Yes))
        }
    }
}

fn emit_graph(report: &mut Report, g: &Graph, output: Option<PathBuf>, params: Value) -> Result<Option<Outcome>> {
    let text = serialize_graph(g);
    match output {
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            Ok(None)
        }
        Some(path) => {
            write_output(&path, &text)?;
            report.set("generator", params);
            report.set("output", path.display().to_string());
            report.set("vertices", g.vertex_count());
            report.set("edges", g.edge_count());
            report.summary(format!(
                "wrote {} vertices and {} edges to {}",
                g.vertex_count(),
                g.edge_count(),
                path.display()
            ));
            Ok(Some(Outcome::Yes))
        }
    }
}

fn record_solve(report: &mut Report, r: &SolveResult) -> Outcome {
    report.set("satisfiable", r.satisfiable);
    report.set("witness", r.witness.as_ref().map_or(Value::Null, colors));
    report.stat("nodes", r.stats.nodes);
    report.stat("leaves", r.stats.leaves);
    report.summary(match &r.witness {
        Some(c) => format!("satisfiable, coloring {:?}", c.as_slice()),
        None => "unsatisfiable".to_owned(),
    });
    Outcome::from_bool(r.satisfiable)
}

fn cmd_solve(
    report: &mut Report,
    model: SolveModel,
    graph: &Path,
    assignment: Option<&Path>,
    k: Option<usize>,
    mode: SolverMode,
) -> Result<Outcome> {
    let g = load_graph(report, graph)?;
    let doc = match (model, assignment) {
        (SolveModel::Kcolor, Some(_)) => bail!("model kcolor takes --k, not an assignment"),
        (SolveModel::Kcolor, None) => None,
        (_, Some(path)) => Some(load_assignment(report, path)?),
        (_, None) => bail!("--assignment is required for this model"),
    };
    let result = match (model, doc) {
        (SolveModel::Kcolor, _) => {
            let k = k.ok_or_else(|| anyhow!("model kcolor requires --k"))?;
            report.set("k", k);
            k_coloring(&g, k)
        }
        (SolveModel::List, Some(Assignment::List(l))) => exists_list_coloring(&g, &l, mode)?,
        (SolveModel::Mu, Some(Assignment::Mu(m))) => mu_coloring(&g, &m, mode)?,
        (SolveModel::Gammamu, Some(Assignment::Interval(i))) => gamma_mu_coloring(&g, &i, mode)?,
        (SolveModel::Precolor, Some(Assignment::Precoloring(p))) => precoloring_extension(&g, &p, mode)?,
        (m, Some(a)) => bail!(
            "model {} expects a {} assignment, got {}",
            m.to_possible_value().unwrap().get_name(),
            expected_kind(m),
            a.kind()
        ),
        (_, None) => unreachable!("assignment presence checked above"),
    };
    Ok(record_solve(report, &result))
}

fn expected_kind(m: SolveModel) -> &'static str {
    match m {
        SolveModel::List => "list",
        SolveModel::Mu => "mu",
        SolveModel::Gammamu => "interval",
        SolveModel::Precolor => "precoloring",
        SolveModel::Kcolor => "none",
    }
}

fn cmd_choosable(
    report: &mut Report,
    model: ChooseModel,
    graph: &Path,
    k: usize,
    pool: Option<usize>,
    run: &RunArgs,
    emit: Option<&Path>,
) -> Result<Outcome> {
    let g = load_graph(report, graph)?;
    let config = run.config();
    report.set("k", k);
    let (choosable, counterexample, index, checked, stats) = match model {
        ChooseModel::Interval => {
            let v = is_k_gamma_mu_choosable(&g, k, &config).map_err(budget_hint)?;
            let doc = v.counterexample.map(|a| Assignment::Interval(a.into_intervals()));
            (v.choosable, doc, v.counterexample_index, v.assignments_checked, v.stats)
        }
        ChooseModel::Classical => {
            let pool = pool.unwrap_or(g.vertex_count() * k);
            report.set("pool", pool);
            let v = is_k_choosable(&g, k, pool, &config).map_err(budget_hint)?;
            let doc = v.counterexample.map(Assignment::List);
            (v.choosable, doc, v.counterexample_index, v.assignments_checked, v.stats)
        }
    };
    report.set("choosable", choosable);
    let counter_doc = counterexample.as_ref().map(serialize_assignment);
    report.set(
        "counterexample",
        counter_doc.as_deref().map_or(Value::Null, |d| {
            serde_json::from_str(d).expect("serialized assignment is JSON")
        }),
    );
    report.set("counterexample_index", index);
    report.stat("assignments_checked", checked);
    report.stat("nodes", stats.nodes);
    report.stat("leaves", stats.leaves);
    if let (Some(path), Some(doc)) = (emit, &counter_doc) {
        write_output(path, doc)?;
        report.set("counterexample_path", path.display().to_string());
    }
    report.summary(if choosable {
        format!("{k}-choosable: all {checked} assignments admit a coloring")
    } else {
        format!(
            "not {k}-choosable: assignment #{} admits no coloring",
            index.unwrap_or_default()
        )
    });
    Ok(Outcome::from_bool(choosable))
}

fn cmd_psi(
    report: &mut Report,
    graph: &Path,
    assignment: &Path,
    out_graph: Option<&Path>,
    out_assignment: Option<&Path>,
) -> Result<Outcome> {
    let g = load_graph(report, graph)?;
    let Assignment::List(lists) = load_assignment(report, assignment)? else {
        bail!("reduce psi expects a list assignment");
    };
    let r = psi_transform(&g, &lists)?;
    let Some(intervals) = r.interval.clone() else {
        bail!("every list is empty, so the instance is unsatisfiable and has no interval form");
    };
    let graph_text = serialize_graph(&r.graph);
    let assignment_text = serialize_assignment(&Assignment::Interval(intervals));
    match out_graph {
        Some(p) => write_output(p, &graph_text)?,
        None => report.set("graph", graph_text),
    }
    match out_assignment {
        Some(p) => write_output(p, &assignment_text)?,
        None => report.set(
            "assignment",
            serde_json::from_str::<Value>(&assignment_text).expect("serialized assignment is JSON"),
        ),
    }
    let pendants: Vec<Value> = r
        .pendant_map
        .iter()
        .map(|(&(v, c), &w)| json!({ "vertex": v, "color": c, "pendant": w }))
        .collect();
    report.set("c_max", r.c_max);
    report.set("vertices", r.graph.vertex_count());
    report.set("pendant_map", pendants);
    report.summary(format!(
        "{} pendants added, every original vertex gets [1, {}]",
        r.pendant_map.len(),
        r.c_max
    ));
    Ok(Outcome::Yes)
}

fn cmd_lift(
    report: &mut Report,
    graph: &Path,
    assignment: &Path,
    k: usize,
    coloring: Option<&Path>,
) -> Result<Outcome> {
    let g = load_graph(report, graph)?;
    let Assignment::Interval(intervals) = load_assignment(report, assignment)? else {
        bail!("reduce lift expects an interval assignment");
    };
    report.set("k", k);
    let c = match coloring {
        Some(path) => match load_assignment(report, path)? {
            Assignment::Coloring(c) => c,
            other => bail!("--coloring expects a coloring document, got {}", other.kind()),
        },
        None => match k_coloring(&g, k).witness {
            Some(c) => c,
            None => {
                report.set("lifted", Value::Null);
                report.summary(format!("the graph has no proper {k}-coloring to lift"));
                return Ok(Outcome::No);
            }
        },
    };
    let lifted = modular_lift(&g, &c, k, &intervals)?;
    report.set("coloring", colors(&c));
    report.set("lifted", colors(&lifted.coloring));
    report.stat("inspections", lifted.inspections);
    report.summary(format!("lifted coloring {:?}", lifted.coloring.as_slice()));
    Ok(Outcome::Yes)
}
