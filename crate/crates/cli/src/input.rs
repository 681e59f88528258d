use std::fs;
use std::io::Read;

use clap::ValueEnum;
use cover_core::constructions::ConstructionError;
use cover_core::families::{parse_adjacency, parse_graph6, FormatError};
use cover_core::petersen::PetersenError;
use cover_core::solvers::SolverError;
use cover_core::{Circuit, CubicGraph, EdgeId, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Adj,
}

/// Failure of one command, carrying its exit code.
#[derive(Debug, Clone)]
pub enum CliError {
    /// Unreadable input or bad arguments (exit 1).
    Parse(String),
    /// The graph does not satisfy what the command needs (exit 2).
    Hypothesis(String),
    /// A search hit its node limit (exit 3).
    Aborted(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Hypothesis(_) => 2,
            CliError::Aborted(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Hypothesis(m) | CliError::Aborted(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::NodeLimitExceeded { .. } => CliError::Aborted(e.to_string()),
            SolverError::UnsupportedCap { .. } | SolverError::BadConstraint(_) | SolverError::Graph(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Aborted(_) | ConstructionError::StrongCdcNotFound { aborted: true } => {
                CliError::Aborted(e.to_string())
            }
            ConstructionError::Solver(s) => s.into(),
            ConstructionError::Graph(g) => g.into(),
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<PetersenError> for CliError {
    fn from(e: PetersenError) -> Self {
        match e {
            PetersenError::Aborted { .. } => CliError::Aborted(e.to_string()),
            PetersenError::Parse { .. } | PetersenError::PartialAssignment { .. } | PetersenError::BadImage { .. } => {
                CliError::Parse(e.to_string())
            }
            PetersenError::Construction(c) => c.into(),
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

pub struct Input {
    pub label: String,
    pub graph: CubicGraph,
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

fn looks_like_adjacency(text: &str) -> bool {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).is_some_and(|l| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    })
}

/// One graph for an edge-list file, one per line for graph6.
pub fn read_graphs(path: &str, format: Option<Format>) -> Result<Vec<Input>, CliError> {
    let text = read_text(path)?;
    let name = if path == "-" { "stdin" } else { path };
    let format = format.unwrap_or(if looks_like_adjacency(&text) { Format::Adj } else { Format::G6 });
    let graphs = match format {
        Format::Adj => vec![Input { label: name.to_string(), graph: parse_adjacency(&text)? }],
        Format::G6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let graph = parse_graph6(l.trim()).map_err(|e| CliError::Parse(format!("{name}:{}: {e}", i + 1)))?;
                Ok(Input { label: format!("{name}:{}", i + 1), graph })
            })
            .collect::<Result<Vec<_>, CliError>>()?,
    };
    if graphs.is_empty() {
        return Err(CliError::Parse(format!("{name}: no graphs")));
    }
    Ok(graphs)
}

/// A circuit given as its vertex sequence, separated by spaces or commas.
/// Between consecutive vertices the lowest unused edge id is taken.
pub fn parse_vertex_circuit(g: &CubicGraph, spec: &str) -> Result<Circuit, CliError> {
    let vs: Vec<usize> = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Parse(format!("not a vertex id: {t:?}"))))
        .collect::<Result<_, _>>()?;
    if vs.len() < 2 {
        return Err(CliError::Parse("a circuit needs at least two vertices".into()));
    }
    let mut used: Vec<EdgeId> = Vec::new();
    for i in 0..vs.len() {
        let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
        let e = (0..g.m())
            .find(|&e| {
                !used.contains(&e) && {
                    let [a, b] = g.ends(e);
                    (a, b) == (u, v) || (a, b) == (v, u)
                }
            })
            .ok_or_else(|| CliError::Parse(format!("no free edge between {u} and {v}")))?;
        used.push(e);
    }
    Ok(Circuit::from_edges(g, &used)?)
}
