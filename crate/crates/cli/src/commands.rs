//! Subcommand definitions and their implementations.
//!
//! Every subcommand computes its entire output before printing, so a run
//! either produces the full deterministic text or a typed [`CliError`]
//! carrying the exit code (and, for truncations and failed verifications,
//! the partial output still worth showing).

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cls_engine::{CLSDefinition, ExplorationLimits, RewriteGraph, Rule};
use duplicative_forests::{forest_interval, fr, interval_cardinality, parse_forest};
use enumeration::{sequence, SequenceName};
use lattice_analysis::Poset;
use mockingbird_poset::{comb, poset_of, MockTerm};
use num_bigint::BigUint;

use crate::criteria::{run_report, Suite};
use crate::error::CliError;
use crate::rules_file::parse_rules;

/// Largest chain degree built without `--force`; the next one up spans
/// 3 263 442 elements.
const MAX_UNFORCED_DEGREE: usize = 6;

/// Largest predicted element count built from a forest or term without
/// `--force`; mirrors the degree guard above.
const MAX_UNFORCED_ELEMENTS: u64 = 3_263_442;

/// Stats keep one bitset row per element while counting intervals, so the
/// quadratic memory gets its own much lower unforced ceiling.
const MAX_STATS_ELEMENTS: u64 = 100_000;

/// Mockingbird lattices, duplicative forests, and combinatory rewriting.
#[derive(Debug, Parser)]
#[command(name = "mockingbird", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a counting sequence, one decimal value per line
    Seq(SeqArgs),
    /// Build a lattice and export it as DOT, JSON, or one-line statistics
    Lattice(LatticeArgs),
    /// Explore a bounded rewrite graph under chosen combinator rules
    Rewrite(RewriteArgs),
    /// Run the verification suite, one pass/fail line per criterion
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(after_help = sequence_help())]
pub struct SeqArgs {
    /// Sequence name (see the list below)
    pub name: String,
    /// How many leading values to print
    #[arg(short = 'n', long = "count", default_value_t = 8)]
    pub count: usize,
}

/// Per-name indexing notes shown under `seq --help`; the sequences keep
/// their natural indexing instead of being renumbered to a common one.
fn sequence_help() -> String {
    let mut help = String::from("Sequence names:\n");
    for name in SequenceName::ALL {
        help.push_str(&format!("  {:<10} {}\n", name.as_str(), name.description()));
    }
    help
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeFormat {
    /// Graphviz DOT, covers pointing upward
    Dot,
    /// Elements, covers, and bottom index as a JSON document
    Json,
    /// One line: elements covers intervals shortest longest
    Stats,
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("source").required(true).args(["degree", "forest", "term"]))]
pub struct LatticeArgs {
    /// Build the lattice above the canonical chain term of this degree
    #[arg(short = 'd', long)]
    pub degree: Option<usize>,
    /// Build the interval above this forest, e.g. "o[o[]]o[]"
    #[arg(short = 'f', long)]
    pub forest: Option<String>,
    /// Build the lattice above this term, e.g. "M(MM)"
    #[arg(short = 't', long)]
    pub term: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "stats")]
    pub format: LatticeFormat,
    /// Build even when the predicted size exceeds the memory guard
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct RewriteArgs {
    /// Builtin combinators to include, e.g. "I" or "K,S"
    #[arg(long, value_delimiter = ',', value_name = "NAMES")]
    pub cls: Vec<String>,
    /// File of additional rules, one `X n := rhs` per line
    #[arg(long, value_name = "FILE")]
    pub rules: Option<PathBuf>,
    /// Start term, e.g. "II(III)"
    #[arg(long)]
    pub term: String,
    /// Step budget for the exploration
    #[arg(long)]
    pub steps: Option<usize>,
    /// Emit Graphviz DOT instead of adjacency text
    #[arg(long)]
    pub dot: bool,
    /// Record self-loops as explicit arcs
    #[arg(long)]
    pub keep_loops: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verification scale
    #[arg(long, value_enum, default_value = "fast")]
    pub suite: Suite,
}

/// Runs one parsed subcommand to completion, returning the stdout text.
pub fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Seq(args) => cmd_seq(args),
        Command::Lattice(args) => cmd_lattice(args),
        Command::Rewrite(args) => cmd_rewrite(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_seq(args: SeqArgs) -> Result<String, CliError> {
    let name: SequenceName = args
        .name
        .parse()
        .map_err(|error: enumeration::EnumerationError| CliError::usage(error.to_string()))?;
    Ok(sequence(name, args.count).to_string())
}

fn cmd_lattice(args: LatticeArgs) -> Result<String, CliError> {
    if let Some(degree) = args.degree {
        if degree > MAX_UNFORCED_DEGREE && !args.force {
            return Err(CliError::limit(format!(
                "a degree-{degree} lattice is past the guard of degree {MAX_UNFORCED_DEGREE} \
                 (already 3263442 elements); rerun with --force"
            )));
        }
        let predicted = sequence(SequenceName::Elements, degree + 1).values()[degree]
            .to_biguint()
            .expect("element counts are nonnegative");
        check_stats_guard(&predicted, &args)?;
        return render_poset(&poset_of(&comb(degree)), args.format);
    }
    if let Some(text) = &args.forest {
        let forest = parse_forest(text).map_err(|error| CliError::usage(error.to_string()))?;
        let predicted = interval_cardinality(&forest);
        check_build_guard(&predicted, &args)?;
        check_stats_guard(&predicted, &args)?;
        return render_poset(&forest_interval(&forest), args.format);
    }
    let text = args.term.as_ref().expect("clap enforces one source");
    let term = MockTerm::parse(text).map_err(|error| CliError::usage(error.to_string()))?;
    let forest = fr(term.term()).map_err(|error| CliError::usage(error.to_string()))?;
    let predicted = interval_cardinality(&forest);
    check_build_guard(&predicted, &args)?;
    check_stats_guard(&predicted, &args)?;
    render_poset(&poset_of(&term), args.format)
}

/// Refuses to build forest- or term-sourced lattices predicted to exceed the
/// unforced ceiling; the degree source has its own direct degree guard.
fn check_build_guard(predicted: &BigUint, args: &LatticeArgs) -> Result<(), CliError> {
    if !args.force && *predicted > BigUint::from(MAX_UNFORCED_ELEMENTS) {
        return Err(CliError::limit(format!(
            "the requested lattice spans {predicted} elements, past the guard of \
             {MAX_UNFORCED_ELEMENTS}; rerun with --force"
        )));
    }
    Ok(())
}

/// Refuses the stats format when the interval count would need too much
/// quadratic bookkeeping.
fn check_stats_guard(predicted: &BigUint, args: &LatticeArgs) -> Result<(), CliError> {
    if args.format == LatticeFormat::Stats
        && !args.force
        && *predicted > BigUint::from(MAX_STATS_ELEMENTS)
    {
        return Err(CliError::limit(format!(
            "statistics on {predicted} elements exceed the guard of {MAX_STATS_ELEMENTS} \
             (interval counting is quadratic); rerun with --force"
        )));
    }
    Ok(())
}

fn render_poset<E: Display>(poset: &Poset<E>, format: LatticeFormat) -> Result<String, CliError> {
    match format {
        LatticeFormat::Dot => Ok(poset.to_dot()),
        LatticeFormat::Json => Ok(format!("{}\n", poset.to_json())),
        LatticeFormat::Stats => {
            let stats = poset.stats();
            let intervals = poset.count_intervals();
            let extrema = poset
                .chain_extrema()
                .expect("generated lattices have a unique maximum");
            Ok(format!(
                "{} {} {} {} {}\n",
                stats.elements,
                stats.covers,
                intervals,
                extrema.shortest_edges,
                extrema.longest_edges
            ))
        }
    }
}

fn cmd_rewrite(args: RewriteArgs) -> Result<String, CliError> {
    if args.cls.is_empty() && args.rules.is_none() {
        return Err(CliError::usage(
            "no rules chosen: pass --cls with builtin names and/or --rules with a file",
        ));
    }
    let mut rules: Vec<Rule> = Vec::new();
    if !args.cls.is_empty() {
        let names: Vec<&str> = args.cls.iter().map(String::as_str).collect();
        let builtin =
            CLSDefinition::builtin(&names).map_err(|error| CliError::usage(error.to_string()))?;
        rules.extend(builtin.rules().cloned());
    }
    if let Some(path) = &args.rules {
        let text = fs::read_to_string(path).map_err(|error| {
            CliError::usage(format!("cannot read {}: {error}", path.display()))
        })?;
        rules.extend(parse_rules(&text)?);
    }
    let system = CLSDefinition::new(rules).map_err(|error| CliError::usage(error.to_string()))?;
    let start = system
        .parse(&args.term)
        .map_err(|error| CliError::usage(error.to_string()))?;
    let limits = match args.steps {
        Some(max_steps) => ExplorationLimits {
            max_steps,
            ..ExplorationLimits::default()
        },
        None => ExplorationLimits::default(),
    };
    let graph = system.rewrite_graph(&start, limits, args.keep_loops);
    let rendered = if args.dot {
        graph.to_dot()
    } else {
        render_adjacency(&graph)
    };
    if graph.is_truncated() {
        return Err(CliError::Limit {
            message: "exploration budget exhausted; the printed graph is only a lower portion"
                .into(),
            partial: Some(rendered),
        });
    }
    Ok(rendered)
}

/// Plain-text graph: counts first, then one line per node and per arc.
fn render_adjacency(graph: &RewriteGraph) -> String {
    let mut out = format!("nodes {}\narcs {}\n", graph.nodes().len(), graph.arcs().len());
    for (index, node) in graph.nodes().iter().enumerate() {
        out.push_str(&format!("{index} {node}\n"));
    }
    for (from, to) in graph.arcs() {
        out.push_str(&format!("{from} -> {to}\n"));
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<String, CliError> {
    let (report, failures) = run_report(args.suite);
    if failures == 0 {
        Ok(report)
    } else {
        Err(CliError::Verification { report })
    }
}
