//! `cubecover`: exact cycle-cover analysis of cubic graphs from the command
//! line. Graphs are read as graph6 (one per line) or as an edge list; `-`
//! reads stdin. Results are JSON lines, one per input graph, except for the
//! human-readable `analyze` report.
//!
//! Exit codes: 0 success, 1 unreadable input or bad arguments, 2 hypothesis
//! violated, 3 search aborted at the node limit.

mod analyze;
mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cover_core::families::{generate, write_adjacency, write_graph6, FamilySpec};
use cover_core::solvers::{SccOptions, DEFAULT_NODE_LIMIT};
use cover_core::CubicGraph;
use rayon::prelude::*;
use serde_json::Value;

use analyze::{analyze, render_text, AnalyzeOptions};
use commands::{CdcArgs, ConstructArgs, Via};
use input::{read_graphs, read_text, CliError, Format};

#[derive(Parser)]
#[command(name = "cubecover", version, about = "Exact cycle covers of cubic graphs")]
struct Cli {
    /// Largest edge weight allowed in shortest cycle covers (2 or 3).
    #[arg(long, global = true, default_value_t = 2)]
    cap: u32,
    /// Search-node budget for branch-and-bound solvers.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Shuffle exploration order with this seed; results do not change.
    #[arg(long, global = true)]
    seed_order: Option<u64>,
    /// Graph format for input (detected when omitted) and for `generate`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants of every input graph.
    Analyze {
        input: String,
        #[arg(long)]
        json: bool,
        /// Validate the cover in this JSON file (e.g. `construct` output).
        #[arg(long)]
        verify_cover: Option<String>,
        /// Omit wall-clock timings, making output byte-deterministic.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = 5)]
        tau_limit: usize,
    },
    /// Shortest cycle cover.
    Scc { input: String },
    /// Perfect matching index with witness matchings.
    Tau {
        input: String,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
    /// Oddness with a witness 2-factor.
    Oddness { input: String },
    /// Longest circuit.
    Circ { input: String },
    /// Cycle double cover under constraints.
    Cdc {
        input: String,
        /// Circuit (vertex sequence, e.g. "0,1,2,3,4") the CDC must contain.
        #[arg(long)]
        contains: Vec<String>,
        /// Group the CDC into this many even-subgraph classes.
        #[arg(long)]
        k: Option<usize>,
        /// Require the last class to be a 2-factor.
        #[arg(long)]
        two_factor_class: bool,
        /// Forbid empty classes.
        #[arg(long)]
        nonempty: bool,
    },
    /// Weights each edge takes over all shortest cycle covers.
    Spectrum { input: String },
    /// Build a short cover from a structural certificate.
    Construct {
        #[arg(long, value_enum)]
        via: Via,
        input: String,
        /// Circuit for `--via circumference` (default: a longest one).
        #[arg(long)]
        circuit: Option<String>,
        /// Skip the three-consecutive-vertices refinement for `--via oddness2`.
        #[arg(long)]
        no_refine: bool,
    },
    /// Print a named graph.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Petersen colourings.
    Pcolour {
        #[command(subcommand)]
        action: Pcolour,
    },
}

#[derive(Subcommand)]
enum Family {
    Petersen,
    Flower {
        k: usize,
    },
    Goldberg {
        k: usize,
    },
    /// Outer cycle, inner cycle and the matching i -- k + perm[i].
    Permutation {
        /// Comma- or space-separated permutation of 0..k.
        perm: String,
    },
}

#[derive(Subcommand)]
enum Pcolour {
    Find {
        input: String,
        /// Write the colouring as `u v -> p q` lines.
        #[arg(long)]
        out: Option<String>,
    },
    Verify {
        input: String,
        colouring: String,
    },
    /// Best pullback of an optimal Petersen cover; searches for a colouring
    /// when none is given.
    Pullback {
        input: String,
        #[arg(long)]
        colouring: Option<String>,
    },
}

/// Runs `f` on every input graph in parallel and prints one JSON line per
/// graph in input order. Returns the largest exit code.
fn each_json<F>(path: &str, format: Option<Format>, f: F) -> Result<i32, CliError>
where
    F: Fn(&CubicGraph) -> Result<Value, CliError> + Sync,
{
    let inputs = read_graphs(path, format)?;
    let results: Vec<_> = inputs.par_iter().map(|i| (i.label.clone(), f(&i.graph))).collect();
    let mut code = 0;
    for (label, r) in results {
        match r {
            Ok(mut v) => {
                if let Value::Object(map) = &mut v {
                    map.insert("source".into(), Value::String(label));
                }
                println!("{v}");
            }
            Err(e) => {
                eprintln!("{label}: {}", e.message());
                code = code.max(e.code());
            }
        }
    }
    Ok(code)
}

fn parse_perm(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Parse(format!("not an index: {t:?}"))))
        .collect()
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let fmt = cli.format;
    let scc_opts = SccOptions { cap: cli.cap, node_limit: cli.node_limit };
    let limit = cli.node_limit;
    match cli.command {
        Command::Analyze { input, json, verify_cover, no_timing, tau_limit } => {
            let cover = verify_cover.map(|p| read_text(&p).and_then(|t| commands::cover_from_json(&t))).transpose()?;
            let opts = AnalyzeOptions { scc: scc_opts, tau_limit, seed: cli.seed_order, timing: !no_timing, cover };
            let inputs = read_graphs(&input, fmt)?;
            let reports: Vec<_> = inputs.par_iter().map(|i| analyze(&i.label, &i.graph, &opts)).collect();
            let mut code = 0;
            for (report, failure) in reports {
                if json {
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                } else {
                    print!("{}", render_text(&report));
                }
                if let Some(e) = failure {
                    code = code.max(e.code());
                }
                if report.cover_check.as_ref().is_some_and(|c| !c.valid) {
                    code = code.max(2);
                }
            }
            Ok(code)
        }
        Command::Scc { input } => each_json(&input, fmt, |g| commands::scc(g, scc_opts)),
        Command::Tau { input, limit: l } => each_json(&input, fmt, |g| commands::tau(g, l)),
        Command::Oddness { input } => each_json(&input, fmt, commands::oddness_cmd),
        Command::Circ { input } => each_json(&input, fmt, commands::circ),
        Command::Cdc { input, contains, k, two_factor_class, nonempty } => {
            let args = CdcArgs { contains: &contains, k, two_factor_class, nonempty, node_limit: limit };
            each_json(&input, fmt, |g| commands::cdc(g, &args))
        }
        Command::Spectrum { input } => each_json(&input, fmt, |g| commands::spectrum(g, scc_opts)),
        Command::Construct { via, input, circuit, no_refine } => {
            let args = ConstructArgs { via, circuit: circuit.as_deref(), refine: !no_refine, node_limit: limit };
            each_json(&input, fmt, |g| commands::construct(g, &args))
        }
        Command::Generate { family } => {
            let spec = match family {
                Family::Petersen => FamilySpec::Petersen,
                Family::Flower { k } => FamilySpec::Flower(k),
                Family::Goldberg { k } => FamilySpec::Goldberg(k),
                Family::Permutation { perm } => FamilySpec::Permutation(parse_perm(&perm)?),
            };
            let g = generate(&spec)?;
            match fmt.unwrap_or(Format::G6) {
                Format::G6 => println!("{}", write_graph6(&g)?),
                Format::Adj => print!("{}", write_adjacency(&g)),
            }
            Ok(0)
        }
        Command::Pcolour { action } => match action {
            Pcolour::Find { input, out } => {
                each_json(&input, fmt, |g| commands::pcolour_find(g, limit, out.as_deref()))
            }
            Pcolour::Verify { input, colouring } => each_json(&input, fmt, |g| commands::pcolour_verify(g, &colouring)),
            Pcolour::Pullback { input, colouring } => {
                each_json(&input, fmt, |g| commands::pcolour_pullback(g, colouring.as_deref(), limit))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {}", e.message());
        e.code()
    });
    ExitCode::from(code as u8)
}
