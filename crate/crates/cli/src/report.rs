//! JSON-lines and CSV reports, one record per graph and operation.

use hamforge::corpus::planar_code::{encode_record, HEADER};
use hamforge::plane_graph::{canonical_code, PlaneGraph};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A labelled input graph.
#[derive(Clone, Debug)]
pub struct Sample {
    pub id: String,
    pub graph: PlaneGraph,
}

impl Sample {
    pub fn new(id: impl Into<String>, graph: PlaneGraph) -> Self {
        Sample { id: id.into(), graph }
    }

    /// SHA-256 of the canonical code up to mirroring, hex encoded.
    pub fn canonical_hash(&self) -> String {
        hex::encode(Sha256::digest(canonical_code(&self.graph, true)))
    }
}

/// Everything needed to rerun a failed check: the graph and the parameters.
#[derive(Clone, Debug, Serialize)]
pub struct Bundle {
    pub planar_code_hex: String,
    pub params: Value,
}

impl Bundle {
    pub fn new(graph: &PlaneGraph, params: Value) -> Self {
        Bundle { planar_code_hex: hex::encode(encode_record(graph)), params }
    }
}

/// One named check over every instance it was applied to on a graph.
#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: usize,
    /// Reproduction bundles for the first few failing instances.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bundles: Vec<Bundle>,
}

/// How one graph fared under one operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// An assertion failed: a potential counterexample.
    Failed,
    /// The graph falls outside the statement being checked.
    NotApplicable,
    /// Budget exhausted or another operational error.
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: &'static str,
    pub graph_id: String,
    pub n: usize,
    pub canonical_hash: String,
    pub operation: String,
    pub status: Status,
    pub result: Value,
    pub assertions: Vec<Assertion>,
    /// Excluded from determinism comparisons.
    pub seconds: f64,
}

/// Bundles kept per assertion name.
const BUNDLES_KEPT: usize = 3;

/// Collects assertion outcomes for one graph, grouped by name in first-use order.
pub struct Checks<'a> {
    graph: &'a PlaneGraph,
    pub items: Vec<Assertion>,
}

impl<'a> Checks<'a> {
    pub fn new(graph: &'a PlaneGraph) -> Self {
        Checks { graph, items: Vec::new() }
    }

    /// Records one outcome; `params` is only built for a kept failure.
    pub fn check(&mut self, name: &str, passed: bool, params: impl FnOnce() -> Value) {
        let i = match self.items.iter().position(|a| a.name == name) {
            Some(i) => i,
            None => {
                self.items.push(Assertion { name: name.to_string(), passed: true, checked: 0, failures: 0, bundles: vec![] });
                self.items.len() - 1
            }
        };
        let a = &mut self.items[i];
        a.checked += 1;
        if !passed {
            a.passed = false;
            a.failures += 1;
            if a.bundles.len() < BUNDLES_KEPT {
                a.bundles.push(Bundle::new(self.graph, params()));
            }
        }
    }

    pub fn failed(&self) -> bool {
        self.items.iter().any(|a| !a.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph_id: &'a str,
    n: usize,
    operation: &'a str,
    status: Status,
    assertions: usize,
    failed: usize,
    seconds: f64,
}

#[derive(Serialize)]
struct CountRow<'a> {
    graph_id: &'a str,
    n: usize,
    count: &'a Value,
    seconds: f64,
}

pub fn write_reports(reports: &[RunReport], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let counting = reports.iter().all(|r| r.operation == "count");
            for r in reports {
                if counting {
                    let count = r.result.get("count").unwrap_or(&Value::Null);
                    w.serialize(CountRow { graph_id: &r.graph_id, n: r.n, count, seconds: r.seconds })?;
                } else {
                    let failed = r.assertions.iter().map(|a| a.failures).sum();
                    w.serialize(CsvRow {
                        graph_id: &r.graph_id,
                        n: r.n,
                        operation: &r.operation,
                        status: r.status,
                        assertions: r.assertions.iter().map(|a| a.checked).sum(),
                        failed,
                        seconds: r.seconds,
                    })?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes one planar_code file and one JSON file per failed report into `dir`.
pub fn write_bundles(reports: &[RunReport], dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for r in reports.iter().filter(|r| r.status == Status::Failed) {
        std::fs::create_dir_all(dir)?;
        let stem: String = format!("{}-{}", r.operation, r.graph_id).chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
        let json = dir.join(format!("{stem}.json"));
        std::fs::write(&json, serde_json::to_vec_pretty(r)?)?;
        if let Some(b) = r.assertions.iter().find_map(|a| a.bundles.first()) {
            let pc = dir.join(format!("{stem}.pc"));
            let mut bytes = HEADER.to_vec();
            bytes.extend(hex::decode(&b.planar_code_hex).map_err(io::Error::other)?);
            std::fs::write(&pc, bytes)?;
            written.push(pc);
        }
        written.push(json);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hamforge::corpus::{octahedron, planar_code::decode};
    use serde_json::json;

    fn failed_report() -> RunReport {
        let s = Sample::new("oct", octahedron());
        let mut checks = Checks::new(&s.graph);
        for i in 0..5 {
            checks.check("holds", true, || json!({}));
            checks.check("breaks", i % 2 == 1, || json!({ "i": i }));
        }
        assert!(checks.failed());
        RunReport {
            tool_version: TOOL_VERSION,
            graph_id: s.id.clone(),
            n: 6,
            canonical_hash: s.canonical_hash(),
            operation: "demo".into(),
            status: Status::Failed,
            result: Value::Null,
            assertions: checks.items,
            seconds: 0.0,
        }
    }

    #[test]
    fn failures_are_counted_and_bundles_capped() {
        let r = failed_report();
        let breaks = r.assertions.iter().find(|a| a.name == "breaks").unwrap();
        assert_eq!((breaks.checked, breaks.failures, breaks.bundles.len()), (5, 3, 3));
        assert_eq!(breaks.bundles[1].params, json!({ "i": 2 }));
        let holds = &r.assertions[0];
        assert!(holds.passed && holds.bundles.is_empty());
    }

    #[test]
    fn bundles_round_trip_through_planar_code() {
        let dir = tempfile::tempdir().unwrap();
        let written = write_bundles(&[failed_report()], dir.path()).unwrap();
        let pc = written.iter().find(|p| p.extension().is_some_and(|e| e == "pc")).unwrap();
        let back = decode(&std::fs::read(pc).unwrap()).unwrap();
        assert!(hamforge::plane_graph::same_up_to_mirror(&back[0], &octahedron()));
        assert!(written.iter().any(|p| p.extension().is_some_and(|e| e == "json")));
    }
}
