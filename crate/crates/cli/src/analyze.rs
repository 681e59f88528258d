use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use cover_core::graph::{cyclic_connectivity_at_least, girth, is_bridgeless, CoverReport};
use cover_core::solvers::{
    circumference, edge_colouring_3, enumerate_perfect_matchings_seeded, oddness, perfect_matching_index,
    shortest_cycle_cover, SccOptions, SolverError, Tau,
};
use cover_core::{Circuit, CubicGraph, CycleCover};
use serde::Serialize;

use crate::input::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub bridgeless: bool,
    pub cyclically_4_edge_connected: bool,
    pub three_edge_colourable: bool,
    pub perfect_matchings: usize,
    pub scc: Option<usize>,
    pub scc_optimal: Option<bool>,
    pub tau: Tau,
    pub oddness: Option<usize>,
    pub circumference: Option<usize>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover_check: Option<CoverReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, u128>>,
}

pub struct AnalyzeOptions {
    pub scc: SccOptions,
    pub tau_limit: usize,
    pub seed: Option<u64>,
    pub timing: bool,
    pub cover: Option<Vec<Vec<usize>>>,
}

fn timed<T>(timing: &mut BTreeMap<&'static str, u128>, key: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timing.insert(key, start.elapsed().as_millis());
    out
}

/// Runs every solver on `g`. Aborted searches leave their field empty, add a
/// note and make the result an abort.
pub fn analyze(label: &str, g: &CubicGraph, opts: &AnalyzeOptions) -> (AnalysisReport, Option<CliError>) {
    let mut timing = BTreeMap::new();
    let mut notes = Vec::new();
    let mut failure = None;
    let bridgeless = is_bridgeless(g);
    let cyclic4 = timed(&mut timing, "cyclic_connectivity", || cyclic_connectivity_at_least(g, 4).unwrap_or(false));
    let colourable = timed(&mut timing, "colouring", || edge_colouring_3(g).is_some());
    let pms = timed(&mut timing, "perfect_matchings", || enumerate_perfect_matchings_seeded(g, opts.seed).len());
    let (scc, scc_optimal) = match timed(&mut timing, "scc", || shortest_cycle_cover(g, opts.scc)) {
        Ok(r) => (Some(r.length), Some(r.optimal)),
        Err(SolverError::Bridged { edge }) => {
            notes.push(format!("edge {edge} is a bridge; no cycle cover"));
            (None, None)
        }
        Err(e) => {
            notes.push(format!("scc: {e}"));
            failure = Some(CliError::from(e));
            (None, None)
        }
    };
    let tau = timed(&mut timing, "tau", || perfect_matching_index(g, opts.tau_limit)).tau;
    let odd = match timed(&mut timing, "oddness", || oddness(g)) {
        Ok((o, _)) => Some(o),
        Err(e) => {
            notes.push(format!("oddness: {e}"));
            None
        }
    };
    let circ = timed(&mut timing, "circumference", || circumference(g)).map(|(l, _)| l);
    let cover_check = opts.cover.as_ref().map(|circuits| {
        let parsed: Result<Vec<Circuit>, _> = circuits.iter().map(|es| Circuit::from_edges(g, es)).collect();
        match parsed {
            Ok(cs) => CycleCover::new(cs).validate(g),
            Err(e) => {
                notes.push(format!("cover: {e}"));
                CycleCover::default().validate(g)
            }
        }
    });
    let report = AnalysisReport {
        source: label.to_string(),
        n: g.n(),
        m: g.m(),
        girth: girth(g),
        bridgeless,
        cyclically_4_edge_connected: cyclic4,
        three_edge_colourable: colourable,
        perfect_matchings: pms,
        scc,
        scc_optimal,
        tau,
        oddness: odd,
        circumference: circ,
        notes,
        cover_check,
        timing_ms: opts.timing.then_some(timing),
    };
    (report, failure)
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let tau = match r.tau {
        Tau::Exact(k) => k.to_string(),
        Tau::AboveLimit(k) => format!("> {k}"),
    };
    let _ = writeln!(s, "source: {}", r.source);
    let _ = writeln!(s, "n: {}  m: {}  girth: {}", r.n, r.m, opt(&r.girth));
    let _ = writeln!(
        s,
        "bridgeless: {}  cyclically 4-edge-connected: {}  3-edge-colourable: {}",
        yes(r.bridgeless),
        yes(r.cyclically_4_edge_connected),
        yes(r.three_edge_colourable)
    );
    let _ = writeln!(s, "perfect matchings: {}", r.perfect_matchings);
    let scc = match (r.scc, r.scc_optimal) {
        (Some(l), Some(false)) => format!("{l} (not proven optimal)"),
        (l, _) => opt(&l),
    };
    let _ = writeln!(s, "scc: {scc}");
    let _ = writeln!(s, "tau: {tau}");
    let _ = writeln!(s, "oddness: {}", opt(&r.oddness));
    let _ = writeln!(s, "circumference: {}", opt(&r.circumference));
    if let Some(c) = &r.cover_check {
        let _ = writeln!(
            s,
            "cover: {} (length {}, (1,2)-cover: {})",
            if c.valid { "valid" } else { "INVALID" },
            c.length,
            yes(c.is_one_two_cover)
        );
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if let Some(t) = &r.timing_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}ms")).collect();
        let _ = writeln!(s, "timing: {}", parts.join(" "));
    }
    s
}
