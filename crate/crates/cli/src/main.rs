mod analyze;
mod inputs;
mod report;
mod suites;

use clap::{Args, Parser, Subcommand};
use hamforge::corpus::PlanarCodeWriter;
use hamforge::ham::BUDGET_ENV;
use hamforge::plane_graph::{edge, Edge};
use inputs::CorpusArgs;
use rayon::prelude::*;
use report::{Format, RunReport, Status};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use suites::{Ctx, Suite};

pub const EXIT_OK: u8 = 0;
/// An assertion failed: a potential counterexample.
pub const EXIT_ASSERTION: u8 = 1;
/// Budget exhausted, unreadable input and the like.
pub const EXIT_OPERATIONAL: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

#[derive(Debug, Parser)]
#[command(name = "hamforge", version, about = "Hamiltonian cycles in planar triangulations: counts, lemma suites, proof replays")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Seed for sampled instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search nodes per exhaustive search; overrides HAMFORGE_BUDGET.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// jsonl by default; csv by default for `count`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an invariant suite over the selected graphs.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Sampled instances per graph for the sampling suites.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Node budget of the theorem2 cycle tree.
        #[arg(long, default_value_t = 100_000)]
        tree_nodes: usize,
        /// Where reproduction bundles of failed graphs go.
        #[arg(long, default_value = "bundles")]
        bundle_dir: PathBuf,
    },
    /// Exact Hamiltonian cycle counts.
    Count {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Count only cycles through this edge, given as `u-v`; repeatable.
        #[arg(long = "require", value_parser = parse_edge)]
        required: Vec<Edge>,
    },
    /// Structural summary per graph.
    Analyze {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Write the selected graphs as planar_code.
    Generate {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once('-').ok_or_else(|| format!("expected u-v, got {s:?}"))?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?, b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?);
    if a == b {
        return Err(format!("{s:?} is a loop"));
    }
    Ok(edge(a, b))
}

/// Failed outranks error, error outranks success.
fn exit_for(reports: &[RunReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Failed) {
        EXIT_ASSERTION
    } else if reports.iter().any(|r| r.status == Status::Error) {
        EXIT_OPERATIONAL
    } else {
        EXIT_OK
    }
}

fn sink(out: &Option<PathBuf>) -> std::io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    let operational = |e: std::io::Error| (EXIT_OPERATIONAL, e.to_string());
    if let Some(nodes) = cli.common.budget_nodes {
        // read by every search through default_budget; set before any worker starts
        std::env::set_var(BUDGET_ENV, nodes.to_string());
    }
    let corpus = match &cli.command {
        Command::Verify { corpus, .. } | Command::Count { corpus, .. } | Command::Analyze { corpus } | Command::Generate { corpus } => corpus,
    };
    let samples = corpus.load().map_err(|e| (e.exit_code(), e.to_string()))?;
    let (reports, default_format) = match &cli.command {
        Command::Verify { suite, samples: per_graph, tree_nodes, .. } => {
            let ctx = Ctx { seed: cli.common.seed, samples: *per_graph, tree_nodes: *tree_nodes };
            (samples.par_iter().map(|s| suites::run(*suite, s, &ctx)).collect::<Vec<_>>(), Format::Jsonl)
        }
        Command::Count { required, .. } => (samples.par_iter().map(|s| analyze::count(s, required)).collect(), Format::Csv),
        Command::Analyze { .. } => (samples.par_iter().map(analyze::analyze).collect(), Format::Jsonl),
        Command::Generate { .. } => {
            let mut w = PlanarCodeWriter::new(sink(&cli.common.out).map_err(operational)?);
            for s in &samples {
                w.write(&s.graph).map_err(operational)?;
            }
            w.finish().map_err(operational)?;
            eprintln!("wrote {} graphs", samples.len());
            return Ok(EXIT_OK);
        }
    };
    let mut out = sink(&cli.common.out).map_err(operational)?;
    report::write_reports(&reports, cli.common.format.unwrap_or(default_format), &mut out).map_err(operational)?;
    out.flush().map_err(operational)?;
    if let Command::Verify { bundle_dir, .. } = &cli.command {
        for p in report::write_bundles(&reports, bundle_dir).map_err(operational)? {
            eprintln!("reproduction bundle: {}", p.display());
        }
    }
    Ok(exit_for(&reports))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("hamforge: {msg}");
            ExitCode::from(code)
        }
    }
}
