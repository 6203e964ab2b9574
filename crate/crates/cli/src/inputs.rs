//! Where the graphs come from: a planar_code file, a named graph, or the enumerated corpus.

use crate::report::Sample;
use hamforge::corpus::{
    double_wheel, enumerate_range, icosahedron, k4, octahedron, CorpusFilter, FilterError, GenerationError, NamedGraphError,
    PlanarCodeError, PlanarCodeReader, DEFAULT_MAX_N,
};
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Malformed { path: PathBuf, source: PlanarCodeError },
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error(transparent)]
    Named(#[from] NamedGraphError),
}

impl InputError {
    /// Bad input data maps to 65; anything else is operational.
    pub fn exit_code(&self) -> u8 {
        match self {
            InputError::Malformed { .. } => crate::EXIT_DATA,
            InputError::Filter(_) | InputError::Named(_) => crate::EXIT_USAGE,
            InputError::Io { .. } | InputError::Generation(_) => crate::EXIT_OPERATIONAL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Named {
    K4,
    Octahedron,
    Icosahedron,
}

#[derive(Clone, Debug, clap::Args)]
pub struct CorpusArgs {
    /// Read graphs from a planar_code file instead of enumerating.
    #[arg(long, conflicts_with_all = ["double_wheel", "named"])]
    pub file: Option<PathBuf>,
    /// Use the double wheel on this many vertices.
    #[arg(long, value_name = "N", conflicts_with = "named")]
    pub double_wheel: Option<usize>,
    #[arg(long, value_enum)]
    pub named: Option<Named>,
    #[arg(long)]
    pub n_min: Option<usize>,
    /// Largest vertex count; 10 when enumerating.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Minimum degree; enumeration then keeps only graphs meeting it.
    #[arg(long)]
    pub min_degree: Option<usize>,
    /// Vertex connectivity lower bound, 3 to 5; 4 when enumerating.
    #[arg(long)]
    pub min_connectivity: Option<usize>,
}

impl CorpusArgs {
    /// Unset bounds are open for files and take the enumeration defaults otherwise.
    pub fn filter(&self, enumerating: bool) -> Result<CorpusFilter, FilterError> {
        let k = self.min_connectivity.unwrap_or(if enumerating { 4 } else { 3 });
        let hi = self.n_max.unwrap_or(if enumerating { 10 } else { 64 });
        // a k-connected graph has minimum degree at least k
        let d = self.min_degree.unwrap_or(0).max(k);
        CorpusFilter::new(k, d, None, self.n_min.unwrap_or(4)..=hi)
    }

    /// The selected graphs in a fixed order.
    pub fn load(&self) -> Result<Vec<Sample>, InputError> {
        if let Some(n) = self.double_wheel {
            return Ok(vec![Sample::new(format!("dw{n}"), double_wheel(n)?)]);
        }
        if let Some(named) = self.named {
            let (id, g) = match named {
                Named::K4 => ("k4", k4()),
                Named::Octahedron => ("octahedron", octahedron()),
                Named::Icosahedron => ("icosahedron", icosahedron()),
            };
            return Ok(vec![Sample::new(id, g)]);
        }
        if let Some(path) = &self.file {
            let filter = self.filter(false)?;
            let file = std::fs::File::open(path).map_err(|source| InputError::Io { path: path.clone(), source })?;
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input").to_string();
            let mut out = Vec::new();
            for (i, g) in PlanarCodeReader::new(std::io::BufReader::new(file)).enumerate() {
                let g = g.map_err(|source| InputError::Malformed { path: path.clone(), source })?;
                if filter.accepts(&g) {
                    out.push(Sample::new(format!("{stem}#{i}"), g));
                }
            }
            return Ok(out);
        }
        let filter = self.filter(true)?;
        let range = filter.n_range();
        let lo = (*range.start()).max(4);
        let levels = enumerate_range(lo, *range.end(), &filter, DEFAULT_MAX_N)?;
        Ok(levels
            .into_iter()
            .flat_map(|level| level.into_iter().enumerate().map(|(i, g)| Sample::new(format!("n{}-{i}", g.n()), g)).collect::<Vec<_>>())
            .collect())
    }
}
