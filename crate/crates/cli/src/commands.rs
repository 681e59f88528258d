use cover_core::constructions::{
    cover_via_circumference, cover_via_oddness2, scc_cover_from_tau4, ConstructionResult, OddnessOptions,
};
use cover_core::petersen::{
    best_pullback_cover, find_petersen_colouring, parse_colouring, verify_petersen_colouring, write_colouring,
    PetersenColouring, Search,
};
use cover_core::solvers::{
    circumference, edge_weight_spectrum, find_cdc, oddness, perfect_matching_index, shortest_cycle_cover,
    CdcConstraints, SccOptions,
};
use cover_core::CubicGraph;
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{parse_vertex_circuit, read_text, CliError};

pub fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn scc(g: &CubicGraph, opts: SccOptions) -> Result<Value, CliError> {
    Ok(to_value(shortest_cycle_cover(g, opts)?))
}

pub fn tau(g: &CubicGraph, limit: usize) -> Result<Value, CliError> {
    Ok(to_value(perfect_matching_index(g, limit)))
}

pub fn oddness_cmd(g: &CubicGraph) -> Result<Value, CliError> {
    let (o, f) = oddness(g)?;
    Ok(json!({ "oddness": o, "two_factor": f, "circuits": f.circuits(g)? }))
}

pub fn circ(g: &CubicGraph) -> Result<Value, CliError> {
    match circumference(g) {
        Some((len, c)) => Ok(json!({ "circumference": len, "circuit": c })),
        None => Err(CliError::Hypothesis("graph has no circuit".into())),
    }
}

pub struct CdcArgs<'a> {
    pub contains: &'a [String],
    pub k: Option<usize>,
    pub two_factor_class: bool,
    pub nonempty: bool,
    pub node_limit: u64,
}

pub fn cdc(g: &CubicGraph, a: &CdcArgs) -> Result<Value, CliError> {
    let must_contain = a.contains.iter().map(|s| parse_vertex_circuit(g, s)).collect::<Result<Vec<_>, _>>()?;
    let constraints = CdcConstraints {
        must_contain,
        classes: a.k,
        two_factor_class: a.two_factor_class,
        nonempty_classes: a.nonempty,
        node_limit: a.node_limit,
    };
    Ok(to_value(find_cdc(g, &constraints)?))
}

pub fn spectrum(g: &CubicGraph, opts: SccOptions) -> Result<Value, CliError> {
    let s = edge_weight_spectrum(g, opts)?;
    let forced = s.forced_edges();
    Ok(json!({
        "optimal_length": s.optimal_length,
        "per_edge": s.per_edge,
        "forced_edges": forced,
        "edges": g.edge_list(),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Via {
    Circumference,
    Oddness2,
    Tau4,
    Petersen,
}

pub struct ConstructArgs<'a> {
    pub via: Via,
    pub circuit: Option<&'a str>,
    pub refine: bool,
    pub node_limit: u64,
}

pub fn construct(g: &CubicGraph, a: &ConstructArgs) -> Result<Value, CliError> {
    let result: ConstructionResult = match a.via {
        Via::Circumference => {
            let c = match a.circuit {
                Some(spec) => parse_vertex_circuit(g, spec)?,
                None => circumference(g).ok_or_else(|| CliError::Hypothesis("graph has no circuit".into()))?.1,
            };
            cover_via_circumference(g, &c, a.node_limit)?
        }
        Via::Oddness2 => {
            let (o, f) = oddness(g)?;
            if o != 2 {
                return Err(CliError::Hypothesis(format!("oddness is {o}, not 2")));
            }
            let opts = OddnessOptions { refine: a.refine, node_limit: a.node_limit, ..Default::default() };
            cover_via_oddness2(g, f, &opts)?
        }
        Via::Tau4 => scc_cover_from_tau4(g)?,
        Via::Petersen => best_pullback_cover(g, &find_colouring(g, a.node_limit)?)?,
    };
    Ok(to_value(result))
}

fn find_colouring(g: &CubicGraph, node_limit: u64) -> Result<PetersenColouring, CliError> {
    match find_petersen_colouring(g, node_limit)? {
        Search::Found(c) => Ok(c),
        Search::NotFound => Err(CliError::Hypothesis("no Petersen colouring exists".into())),
    }
}

pub fn pcolour_find(g: &CubicGraph, node_limit: u64, out: Option<&str>) -> Result<Value, CliError> {
    let c = find_colouring(g, node_limit)?;
    if let Some(path) = out {
        std::fs::write(path, write_colouring(g, &c)).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
    }
    Ok(json!({
        "assignment": c.assignment,
        "fibers": c.fibers(),
        "balanced": c.is_balanced(),
    }))
}

pub fn pcolour_verify(g: &CubicGraph, path: &str) -> Result<Value, CliError> {
    let c = parse_colouring(g, &read_text(path)?)?;
    match verify_petersen_colouring(g, &c)? {
        None => Ok(json!({ "valid": true, "fibers": c.fibers(), "balanced": c.is_balanced() })),
        Some(v) => Err(CliError::Hypothesis(format!("not a Petersen colouring: vertex {v} fails"))),
    }
}

pub fn pcolour_pullback(g: &CubicGraph, path: Option<&str>, node_limit: u64) -> Result<Value, CliError> {
    let c = match path {
        Some(p) => parse_colouring(g, &read_text(p)?)?,
        None => find_colouring(g, node_limit)?,
    };
    Ok(to_value(best_pullback_cover(g, &c)?))
}

/// Circuits of the first `cover` object found in a JSON document, as edge
/// id lists.
pub fn cover_from_json(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    fn find(v: &Value) -> Option<&Value> {
        match v {
            Value::Object(map) => {
                map.get("cover").filter(|c| c.get("circuits").is_some()).or_else(|| map.values().find_map(find))
            }
            Value::Array(xs) => xs.iter().find_map(find),
            _ => None,
        }
    }
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let doc: Value = serde_json::from_str(text)
        .or_else(|_| serde_json::from_str(first))
        .map_err(|e| CliError::Parse(format!("cover file: {e}")))?;
    let circuits = find(&doc)
        .and_then(|c| c.get("circuits"))
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("cover file has no cover.circuits".into()))?;
    circuits
        .iter()
        .map(|c| {
            c.get("edges")
                .and_then(Value::as_array)
                .and_then(|es| es.iter().map(|e| e.as_u64().map(|x| x as usize)).collect::<Option<Vec<_>>>())
                .ok_or_else(|| CliError::Parse("circuit without an edges list".into()))
        })
        .collect()
}
