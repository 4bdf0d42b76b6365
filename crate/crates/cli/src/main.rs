//! `zxr`: check, rewrite and verify ZX diagrams from the command line.
//!
//! Exit codes: 0 equal/holds/success, 1 unequal/fails, 2 usage or input
//! error, 3 resource limit.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use report::{AxiomRow, EqualityReport, GraphCase, Report, VerifyReport};
use zxr_core::derived::{replay, Hypothesis, ProofScript, ReplayOptions, Step, StepRule};
use zxr_core::graphstate::{check_fixpoint, check_vdn, graph_state, local_complement, SimpleGraph};
use zxr_core::random::{random_graph, rng};
use zxr_core::rules::{Config, Params, RuleId};
use zxr_core::semantics::{axiom_report, evaluate, scalar_fit, ModelN, TOL};
use zxr_core::{zxd, Colour, Diagram, Error, NodeId, Phase};

/// Largest graph size swept exhaustively.
const EXHAUSTIVE_CAP: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "zxr", version, about = "ZX-calculus rewriting and semantic verification")]
struct Cli {
    /// Scale every spider phase by this integer when evaluating.
    #[arg(long, global = true, visible_alias = "model")]
    model_n: Option<u32>,
    /// Tolerance for equality up to a global scalar.
    #[arg(long, global = true, default_value_t = TOL)]
    tol: f64,
    /// Allow the Euler decomposition rules.
    #[arg(long, global = true)]
    enable_euler: bool,
    /// Largest graph size for exhaustive sweeps.
    #[arg(long, global = true, default_value_t = 5)]
    max_vertices: usize,
    /// Seed for sampled graphs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of additional sampled graphs, slightly larger than --max-vertices.
    #[arg(long, global = true, default_value_t = 0)]
    random: usize,
    /// Write a JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two diagrams up to a global scalar.
    CheckEqual { a: PathBuf, b: PathBuf },
    /// Apply one rule, or replay a proof script.
    Rewrite {
        input: PathBuf,
        #[arg(long, conflicts_with = "script", requires = "at")]
        rule: Option<String>,
        /// Anchor node ids or names, comma separated.
        #[arg(long)]
        at: Option<String>,
        /// Phase parameter, e.g. `1/2` (spider-split).
        #[arg(long, allow_hyphen_values = true)]
        phase: Option<String>,
        /// Colour parameter, `z` or `x` (id-insert).
        #[arg(long)]
        colour: Option<String>,
        /// JSON-lines proof script.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Check every step against the semantics.
        #[arg(long)]
        check: bool,
        /// Accept steps that use the named hypothesis.
        #[arg(long)]
        assume: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the graph-state diagram of a `.edges` graph.
    GraphState {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Local complementation of a `.edges` graph at a vertex.
    LocalComp {
        graph: PathBuf,
        vertex: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification sweep.
    Verify { suite: Suite },
    /// Emit Graphviz DOT for a diagram.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Axioms,
    Fixpoint,
    Vdn,
    Independence,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Fixpoint => "fixpoint",
            Suite::Vdn => "vdn",
            Suite::Independence => "independence",
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_diagram(path: &Path) -> anyhow::Result<(Diagram, std::collections::BTreeMap<String, NodeId>)> {
    let text = read(path)?;
    zxd::parse_named(&text).map_err(Error::from).with_context(|| path.display().to_string())
}

fn read_graph(path: &Path) -> anyhow::Result<SimpleGraph> {
    SimpleGraph::parse(&read(path)?).map_err(Error::from).with_context(|| path.display().to_string())
}

fn emit(output: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_report(cli: &Cli, report: &Report) -> anyhow::Result<()> {
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(report)?;
        fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn check_equal(cli: &Cli, a: &Path, b: &Path) -> anyhow::Result<bool> {
    let model = ModelN(cli.model_n.unwrap_or(1));
    let (da, _) = read_diagram(a)?;
    let (db, _) = read_diagram(b)?;
    let fit = scalar_fit(&evaluate(&da, model)?, &evaluate(&db, model)?, cli.tol)?;
    println!("equal: {}", fit.equal);
    println!("lambda: {} {}", fit.lambda.re, fit.lambda.im);
    println!("residual: {:.3e}", fit.residual);
    write_report(
        cli,
        &Report::CheckEqual(EqualityReport {
            model_n: model.0,
            tol: cli.tol,
            equal: fit.equal,
            lambda: [fit.lambda.re, fit.lambda.im],
            residual: fit.residual,
        }),
    )?;
    Ok(fit.equal)
}

fn parse_anchor(text: &str, names: &std::collections::BTreeMap<String, NodeId>) -> anyhow::Result<Vec<NodeId>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match names.get(t) {
            Some(&v) => Ok(v),
            None => t.parse::<NodeId>().map_err(|_| Error::UnknownVertex(t.to_string()).into()),
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn rewrite(
    cli: &Cli,
    input: &Path,
    rule: &Option<String>,
    at: &Option<String>,
    phase: &Option<String>,
    colour: &Option<String>,
    script: &Option<PathBuf>,
    check: bool,
    assume: &[String],
    output: &Option<PathBuf>,
) -> anyhow::Result<bool> {
    let (d, names) = read_diagram(input)?;
    for h in assume {
        if Hypothesis::from_name(h).is_none() {
            bail!(Error::UnknownRule(h.clone()));
        }
    }
    let script = match (rule, script) {
        (Some(rule), None) => {
            let rule: RuleId = rule.parse()?;
            let anchor = parse_anchor(at.as_deref().unwrap_or(""), &names)?;
            let phase = phase.as_deref().map(str::parse::<Phase>).transpose().map_err(Error::from)?;
            let colour = match colour.as_deref() {
                None => None,
                Some("z") => Some(Colour::Z),
                Some("x") => Some(Colour::X),
                Some(c) => bail!(Error::BadAnchor(format!("invalid colour `{c}`"))),
            };
            let mut s = ProofScript::new("rewrite", "");
            s.steps.push(Step { rule: StepRule::Rule(rule), anchor, params: Params { phase, colour } });
            s
        }
        (None, Some(path)) => ProofScript::from_json_lines(&path.display().to_string(), &read(path)?)?,
        _ => bail!(Error::BadAnchor("give either --rule with --at, or --script".to_string())),
    };
    let opts = ReplayOptions {
        config: Config { euler_axiom: cli.enable_euler },
        allow_hypotheses: !assume.is_empty(),
        check,
        tol: cli.tol,
    };
    let end = replay(&script, &d, &opts)?;
    emit(output, &zxd::serialize(&end))?;
    Ok(true)
}

fn graphs_up_to(max: usize) -> Vec<SimpleGraph> {
    (1..=max).flat_map(|n| (0..1u64 << (n * (n - 1) / 2)).map(move |m| SimpleGraph::from_mask(n, m))).collect()
}

fn graph_sweep(cli: &Cli, suite: Suite) -> anyhow::Result<VerifyReport> {
    if cli.max_vertices > EXHAUSTIVE_CAP {
        bail!(Error::CapExceeded(cli.max_vertices, EXHAUSTIVE_CAP));
    }
    let mut graphs = graphs_up_to(cli.max_vertices);
    let mut r = rng(cli.seed);
    for i in 0..cli.random {
        graphs.push(random_graph(&mut r, cli.max_vertices + 1 + i % 2));
    }
    let check = match suite {
        Suite::Fixpoint => check_fixpoint,
        _ => check_vdn,
    };
    let results: Vec<(usize, Vec<GraphCase>)> = graphs
        .par_iter()
        .map(|g| -> zxr_core::Result<(usize, Vec<GraphCase>)> {
            let mut failures = Vec::new();
            for v in g.vertices() {
                if !check(g, v)? {
                    failures.push(GraphCase { graph: g.serialize(), vertex: v.clone() });
                }
            }
            Ok((g.vertices().len(), failures))
        })
        .collect::<zxr_core::Result<_>>()?;
    let cases = results.iter().map(|(n, _)| n).sum();
    let failures: Vec<GraphCase> = results.into_iter().flat_map(|(_, f)| f).collect();
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        passed: failures.is_empty(),
        cases,
        unexpected: failures.len(),
        axioms: Vec::new(),
        failures,
    })
}

fn axiom_sweep(cli: &Cli, suite: Suite) -> anyhow::Result<VerifyReport> {
    let models: Vec<u32> = match (suite, cli.model_n) {
        (Suite::Axioms, Some(n)) => vec![n],
        _ => vec![1, 2, 3],
    };
    let include_euler = matches!(suite, Suite::Independence) || cli.enable_euler;
    let rows: Vec<AxiomRow> = axiom_report(&models)?
        .into_iter()
        .filter(|r| include_euler || !r.axiom.parse::<RuleId>().map_or(false, RuleId::is_euler))
        .map(|r| AxiomRow {
            model_n: r.model_n,
            expected: r.as_expected(),
            holds: r.holds,
            max_residual: r.max_residual,
            axiom: r.axiom,
        })
        .collect();
    let unexpected = rows.iter().filter(|r| !r.expected).count();
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        passed: unexpected == 0,
        cases: rows.len(),
        unexpected,
        axioms: rows,
        failures: Vec::new(),
    })
}

fn verify(cli: &Cli, suite: Suite) -> anyhow::Result<bool> {
    let report = match suite {
        Suite::Axioms | Suite::Independence => axiom_sweep(cli, suite)?,
        Suite::Fixpoint | Suite::Vdn => graph_sweep(cli, suite)?,
    };
    for row in &report.axioms {
        let verdict = if row.holds { "holds" } else { "fails" };
        let note = if row.expected { "" } else { "  UNEXPECTED" };
        println!("n={} {:<14} {verdict}  residual {:.2e}{note}", row.model_n, row.axiom, row.max_residual);
    }
    for f in &report.failures {
        println!("failure at vertex {}:\n{}", f.vertex, f.graph);
    }
    println!(
        "{}: {} cases, {} unexpected: {}",
        report.suite,
        report.cases,
        report.unexpected,
        if report.passed { "PASS" } else { "FAIL" }
    );
    let passed = report.passed;
    write_report(cli, &Report::Verify(report))?;
    Ok(passed)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::CheckEqual { a, b } => check_equal(cli, a, b),
        Command::Rewrite { input, rule, at, phase, colour, script, check, assume, output } => {
            rewrite(cli, input, rule, at, phase, colour, script, *check, assume, output)
        }
        Command::GraphState { graph, output } => {
            emit(output, &zxd::serialize(&graph_state(&read_graph(graph)?)))?;
            Ok(true)
        }
        Command::LocalComp { graph, vertex, output } => {
            emit(output, &local_complement(&read_graph(graph)?, vertex)?.serialize())?;
            Ok(true)
        }
        Command::Verify { suite } => verify(cli, *suite),
        Command::Render { input, output } => {
            emit(output, &zxd::to_dot(&read_diagram(input)?.0))?;
            Ok(true)
        }
    }
}

/// Maps an error to its exit code.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ResourceLimit(..) | Error::CapExceeded(..)) => 3,
        Some(Error::NoMatch { .. } | Error::EulerGated(_) | Error::Step { .. } | Error::Drift { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
