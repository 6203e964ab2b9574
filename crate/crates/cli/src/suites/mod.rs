//! Invariant suites run by `hamforge verify`, one report per graph.

mod lemmas;
mod replays;
mod structure;

use crate::report::{Checks, RunReport, Sample, Status, TOOL_VERSION};
use hamforge::ham::HamError;
use hamforge::indset::IndSetError;
use hamforge::plane_graph::{NearTriangulation, PlaneGraph};
use hamforge::replay::ReplayError;
use hamforge::structures::{cycles_of_length, has_separating_triangle};
use hamforge::tutte::TutteError;
use serde_json::{json, Value};
use std::fmt::Display;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Euler,
    Connectivity,
    Tutte,
    #[value(name = "lemma-edgesetF", alias = "lemma-edgesetf")]
    LemmaEdgesetF,
    LemmaUwpath,
    LemmaUvpath,
    LemmaDiamond4,
    #[value(name = "lemma-4edges")]
    Lemma4edges,
    #[value(name = "lemma-2edge")]
    Lemma2edge,
    Conjecture,
    Theorem1,
    Theorem2,
}

impl Suite {
    pub fn name(self) -> String {
        clap::ValueEnum::to_possible_value(&self).expect("no skipped variants").get_name().to_string()
    }
}

/// Knobs shared by the suites.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub seed: u64,
    /// Sampled instances per graph where a suite samples.
    pub samples: usize,
    pub tree_nodes: usize,
}

/// Why a graph produced no verdict.
#[derive(Debug)]
pub enum Skip {
    NotApplicable(String),
    /// Operational: budget exhausted and the like.
    Error(String),
}

pub type SuiteResult = Result<Value, Skip>;

/// Errors that can mean "the search budget ran out" rather than "the claim failed".
pub trait BudgetAware: Display {
    fn is_timeout(&self) -> bool;
}

impl BudgetAware for HamError {
    fn is_timeout(&self) -> bool {
        matches!(self, HamError::Timeout(_))
    }
}

impl BudgetAware for TutteError {
    fn is_timeout(&self) -> bool {
        matches!(self, TutteError::Timeout(_) | TutteError::Ham(HamError::Timeout(_)))
    }
}

impl BudgetAware for IndSetError {
    fn is_timeout(&self) -> bool {
        matches!(self, IndSetError::ColoringTimeout(_) | IndSetError::Ham(HamError::Timeout(_)))
    }
}

impl BudgetAware for ReplayError {
    fn is_timeout(&self) -> bool {
        match self {
            ReplayError::Timeout(_) => true,
            ReplayError::Tutte(e) => e.is_timeout(),
            ReplayError::IndSet(e) => e.is_timeout(),
            ReplayError::Ham(e) => e.is_timeout(),
            _ => false,
        }
    }
}

/// A call that must succeed: timeouts abort the graph, any other error is a failed
/// assertion named `name`.
pub fn must<T, E: BudgetAware>(checks: &mut Checks, name: &str, r: Result<T, E>, params: impl FnOnce() -> Value) -> Result<Option<T>, Skip> {
    match r {
        Ok(t) => {
            checks.check(name, true, || Value::Null);
            Ok(Some(t))
        }
        Err(e) if e.is_timeout() => Err(Skip::Error(e.to_string())),
        Err(e) => {
            let mut p = params();
            p["error"] = json!(e.to_string());
            checks.check(name, false, || p);
            Ok(None)
        }
    }
}

/// Timeouts abort; other errors propagate as operational too.
pub fn op<T, E: BudgetAware>(r: Result<T, E>) -> Result<T, Skip> {
    r.map_err(|e| Skip::Error(e.to_string()))
}

/// Both sides of every 4-cycle, closed off, without separating triangles.
pub fn four_cycle_regions(pg: &PlaneGraph) -> Vec<NearTriangulation> {
    let mut out = Vec::new();
    for c in cycles_of_length(pg.graph(), 4) {
        let rev: Vec<usize> = c.iter().rev().copied().collect();
        for cyc in [c.clone(), rev] {
            let Ok(side) = pg.right_side(&cyc) else { continue };
            let Ok(nt) = pg.closure_of_side(&side) else { continue };
            if !has_separating_triangle(nt.graph()) {
                out.push(nt);
            }
        }
    }
    out
}

/// The eight role assignments `[u, v, w, x]` of a 4-cycle read either way from each corner.
pub fn role_lists(outer: &[usize]) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for s in 0..4 {
        out.push([outer[s], outer[(s + 1) % 4], outer[(s + 2) % 4], outer[(s + 3) % 4]]);
        out.push([outer[s], outer[(s + 3) % 4], outer[(s + 2) % 4], outer[(s + 1) % 4]]);
    }
    out
}

pub fn run(suite: Suite, sample: &Sample, ctx: &Ctx) -> RunReport {
    let start = Instant::now();
    let mut checks = Checks::new(&sample.graph);
    let outcome = match suite {
        Suite::Euler => structure::euler(sample, &mut checks),
        Suite::Connectivity => structure::connectivity(sample, &mut checks),
        Suite::Conjecture => structure::conjecture(sample, &mut checks),
        Suite::Tutte => lemmas::tutte(sample, &mut checks),
        Suite::LemmaEdgesetF => lemmas::edgeset_f(sample, &mut checks),
        Suite::LemmaUwpath => lemmas::uw_path(sample, &mut checks),
        Suite::LemmaUvpath => lemmas::uv_path(sample, &mut checks),
        Suite::LemmaDiamond4 => lemmas::diamond4(sample, &mut checks),
        Suite::Lemma4edges => lemmas::four_edges(sample, ctx, &mut checks),
        Suite::Lemma2edge => replays::lemma_2edge(sample, ctx, &mut checks),
        Suite::Theorem1 => replays::theorem1(sample, &mut checks),
        Suite::Theorem2 => replays::theorem2(sample, ctx, &mut checks),
    };
    // a failed assertion outranks whatever stopped the run afterwards
    let (status, result) = match outcome {
        Ok(v) if checks.failed() => (Status::Failed, v),
        Ok(v) => (Status::Ok, v),
        Err(Skip::NotApplicable(why)) if checks.failed() => (Status::Failed, json!({ "reason": why })),
        Err(Skip::Error(why)) if checks.failed() => (Status::Failed, json!({ "error": why })),
        Err(Skip::NotApplicable(why)) => (Status::NotApplicable, json!({ "reason": why })),
        Err(Skip::Error(why)) => (Status::Error, json!({ "error": why })),
    };
    RunReport {
        tool_version: TOOL_VERSION,
        graph_id: sample.id.clone(),
        n: sample.graph.n(),
        canonical_hash: sample.canonical_hash(),
        operation: suite.name(),
        status,
        result,
        assertions: checks.items,
        seconds: start.elapsed().as_secs_f64(),
    }
}
