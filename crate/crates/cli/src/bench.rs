use std::fmt::Write;
use std::thread;
use std::time::Instant;

use anyhow::Result;
use commdetect::louvain::{louvain, LouvainVariant, RunStats};
use commdetect::{modularity, Graph};
use serde::{Deserialize, Serialize};

use crate::config::{Algorithm, Mode, RunConfig};
use crate::run::execute;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub environment: String,
    pub dataset: String,
    pub records: Vec<RunStats>,
}

impl BenchReport {
    /// Aligned text table: variant, runs, max, min, mean, mean runtime.
    pub fn table(&self) -> String {
        let width = self
            .records
            .iter()
            .map(|r| r.variant.len())
            .chain(["variant".len()])
            .max()
            .unwrap_or(7);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>5}  {:>9}  {:>9}  {:>9}  {:>12}",
            "variant", "runs", "max Q", "min Q", "mean Q", "avg ms"
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:<width$}  {:>5}  {:>9.5}  {:>9.5}  {:>9.5}  {:>12.4}",
                r.variant, r.runs, r.max, r.min, r.mean, r.mean_runtime_ms
            );
        }
        out
    }
}

/// Worker threads for bench: `COMMDETECT_THREADS` if set, otherwise the
/// available parallelism.
pub fn thread_cap() -> usize {
    let available = thread::available_parallelism().map_or(1, |n| n.get());
    std::env::var("COMMDETECT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(available, |cap| cap.max(1))
}

fn environment(threads: usize) -> String {
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    format!(
        "{}-{}, {profile} build, {threads} worker thread(s)",
        std::env::consts::OS,
        std::env::consts::ARCH
    )
}

/// Seeded Louvain runs spread over up to `threads` workers. Scores do not
/// depend on the split.
fn louvain_runs(
    g: &Graph,
    variant: LouvainVariant,
    runs: usize,
    base_seed: u64,
    threads: usize,
) -> Result<RunStats> {
    let seeds: Vec<u64> = (0..runs as u64).map(|r| base_seed + r).collect();
    let chunk = runs.div_ceil(threads.max(1));
    let parts: Vec<commdetect::Result<Vec<(f64, f64)>>> = thread::scope(|s| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|&seed| {
                            let start = Instant::now();
                            let out = louvain(g, variant, seed)?;
                            Ok((out.modularity, start.elapsed().as_secs_f64() * 1e3))
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .collect()
    });
    let mut q = Vec::with_capacity(runs);
    let mut ms = Vec::with_capacity(runs);
    for part in parts {
        for (qi, ti) in part? {
            q.push(qi);
            ms.push(ti);
        }
    }
    Ok(RunStats::from_runs(variant.label(), q, &ms)?)
}

/// Repeated runs of the configured algorithm. Louvain runs every requested
/// variant with seeds `seed..seed + runs`; the deterministic algorithms are
/// simply repeated for timing. Only the algorithm call is timed.
pub fn bench(config: &RunConfig) -> Result<BenchReport> {
    config.validate(Mode::Bench)?;
    let g = config.dataset.load()?;
    let runs = config.runs();
    let threads = thread_cap();
    let mut records = Vec::new();
    if config.algorithm == Algorithm::Louvain {
        for v in config.variants(Mode::Bench) {
            records.push(louvain_runs(&g, v, runs, config.seed(), threads)?);
        }
    } else {
        let mut q = Vec::with_capacity(runs);
        let mut ms = Vec::with_capacity(runs);
        for _ in 0..runs {
            let start = Instant::now();
            let exec = execute(config, &g)?;
            ms.push(start.elapsed().as_secs_f64() * 1e3);
            q.push(modularity(&g, &exec.partition)?);
        }
        records.push(RunStats::from_runs(config.algorithm.name(), q, &ms)?);
    }
    Ok(BenchReport {
        environment: environment(threads),
        dataset: config.dataset.to_string(),
        records,
    })
}
