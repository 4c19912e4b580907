use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{louvain, LouvainVariant};
use crate::{Error, Graph, Result};

/// Summary of repeated runs, serialized as the benchmark record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub variant: String,
    pub runs: usize,
    pub q_values: Vec<f64>,
    pub max: f64,
    pub min: f64,
    pub mean: f64,
    pub mean_runtime_ms: f64,
}

impl RunStats {
    /// Aggregates per-run scores and wall-clock times (milliseconds).
    pub fn from_runs(
        variant: impl Into<String>,
        q_values: Vec<f64>,
        runtimes_ms: &[f64],
    ) -> Result<Self> {
        if q_values.is_empty() || q_values.len() != runtimes_ms.len() {
            return Err(Error::InvalidParameter(
                "need one runtime per score and at least one run".into(),
            ));
        }
        let runs = q_values.len();
        let max = q_values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = q_values.iter().copied().fold(f64::INFINITY, f64::min);
        let mean = q_values.iter().sum::<f64>() / runs as f64;
        let mean_runtime_ms = runtimes_ms.iter().sum::<f64>() / runs as f64;
        Ok(RunStats {
            variant: variant.into(),
            runs,
            q_values,
            max,
            min,
            mean,
            mean_runtime_ms,
        })
    }
}

/// Runs `variant` with seeds `base_seed..base_seed + runs`, one after the
/// other. Only the algorithm call is timed.
pub fn run_stats(
    g: &Graph,
    variant: LouvainVariant,
    runs: usize,
    base_seed: u64,
) -> Result<RunStats> {
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    let mut q_values = Vec::with_capacity(runs);
    let mut times = Vec::with_capacity(runs);
    for r in 0..runs as u64 {
        let start = Instant::now();
        let out = louvain(g, variant, base_seed + r)?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
        q_values.push(out.modularity);
    }
    RunStats::from_runs(variant.label(), q_values, &times)
}
