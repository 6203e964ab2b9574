//! `hamforge count` and `hamforge analyze`: one report per graph, no assertions.

use crate::report::{RunReport, Sample, Status, TOOL_VERSION};
use hamforge::ham::{count_ham_cycles, Constraints, HamError};
use hamforge::indset::special_set;
use hamforge::plane_graph::{vertex_connectivity, Edge};
use hamforge::structures::{find_diamonds, max_common_neighborhood_pair, separating_cycles, DiamondKind};
use serde_json::{json, Value};
use std::time::Instant;

fn report(sample: &Sample, operation: &str, start: Instant, outcome: Result<Value, String>) -> RunReport {
    let (status, result) = match outcome {
        Ok(v) => (Status::Ok, v),
        Err(e) => (Status::Error, json!({ "error": e })),
    };
    RunReport {
        tool_version: TOOL_VERSION,
        graph_id: sample.id.clone(),
        n: sample.graph.n(),
        canonical_hash: sample.canonical_hash(),
        operation: operation.to_string(),
        status,
        result,
        assertions: vec![],
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Exact Hamiltonian cycle count, through every edge of `required`.
pub fn count(sample: &Sample, required: &[Edge]) -> RunReport {
    let start = Instant::now();
    let g = sample.graph.graph();
    let outcome = count_ham_cycles(g, &Constraints::requiring(required))
        .map(|c| json!({ "count": c, "required": required }))
        .map_err(|e: HamError| e.to_string());
    report(sample, "count", start, outcome)
}

pub fn analyze(sample: &Sample) -> RunReport {
    let start = Instant::now();
    let g = sample.graph.graph();
    let pair = max_common_neighborhood_pair(g);
    // the special-set dichotomy is stated for minimum degree at least 5 and is reported as is otherwise
    let special = match special_set(g) {
        Ok(s) => json!(s.branch()),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let result = json!({
        "connectivity": vertex_connectivity(g),
        "min_degree": g.min_degree(),
        "sep3": separating_cycles(g, 3).len(),
        "sep4": separating_cycles(g, 4).len(),
        "diamond4": find_diamonds(g, DiamondKind::Diamond4).len(),
        "diamond6": find_diamonds(g, DiamondKind::Diamond6).len(),
        "max_common": pair.as_ref().map_or(0, |p| p.size()),
        "max_common_pair": pair.map(|p| [p.v, p.x]),
        "special_set": special,
    });
    report(sample, "analyze", start, Ok(result))
}
