use std::fmt;
use std::path::PathBuf;

use anyhow::Result;
use commdetect::agglomerative::agglomerate;
use commdetect::fastgreedy::{fastgreedy, trace_to_json};
use commdetect::girvan_newman::{cuts_to_json, girvan_newman, girvan_newman_static};
use commdetect::louvain::louvain;
use commdetect::{Graph, Partition, PartitionRecord};
use serde::{Deserialize, Serialize};

use crate::config::{Algorithm, Mode, RunConfig};
use crate::output::{sibling, write_files};

/// Partition file contents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub dataset: String,
    #[serde(flatten)]
    pub partition: PartitionRecord,
}

/// Result of one algorithm call plus the side outputs it produces, keyed by
/// file suffix.
pub struct Execution {
    pub partition: Partition,
    pub extras: Vec<(&'static str, String)>,
}

/// Runs the configured algorithm on `g`. The config must be valid.
pub fn execute(config: &RunConfig, g: &Graph) -> Result<Execution> {
    let (partition, extras) = match config.algorithm {
        Algorithm::Agglomerative => {
            let d = agglomerate(g, config.linkage(), config.params.self_neighboring)?;
            let p = commdetect::agglomerative::cut(&d, config.hsl()?)?;
            (p, vec![("dendrogram.json", d.to_json())])
        }
        Algorithm::GirvanNewman | Algorithm::GirvanNewmanStatic => {
            let target = config.params.target_communities.unwrap_or(1);
            let div = if config.algorithm == Algorithm::GirvanNewman {
                girvan_newman(g, target)?
            } else {
                girvan_newman_static(g, target)?
            };
            (div.partition, vec![("cuts.json", cuts_to_json(&div.cuts))])
        }
        Algorithm::Louvain => {
            let variant = config.variants(Mode::Run)[0];
            (louvain(g, variant, config.seed())?.partition, Vec::new())
        }
        Algorithm::Fastgreedy => {
            let out = fastgreedy(g)?;
            (
                out.best,
                vec![
                    ("dendrogram.json", out.dendrogram.to_json()),
                    ("trace.json", trace_to_json(&out.trace)),
                ],
            )
        }
    };
    Ok(Execution { partition, extras })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub num_communities: usize,
    pub modularity: Option<f64>,
    pub written: Vec<PathBuf>,
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "communities: {}", self.num_communities)?;
        match self.modularity {
            Some(q) => writeln!(f, "modularity: {q:.6}")?,
            None => writeln!(f, "modularity: undefined (no edges)")?,
        }
        for path in &self.written {
            writeln!(f, "wrote {}", path.display())?;
        }
        Ok(())
    }
}

/// Validates, loads, runs and writes the partition plus side outputs.
pub fn run(config: &RunConfig) -> Result<RunSummary> {
    config.validate(Mode::Run)?;
    let g = config.dataset.load()?;
    let exec = execute(config, &g)?;
    let record = RunRecord {
        algorithm: config.algorithm.name().to_string(),
        dataset: config.dataset.to_string(),
        partition: exec.partition.record(&g)?,
    };
    let mut files = Vec::new();
    if let Some(out) = &config.out {
        files.push((out.clone(), serde_json::to_string_pretty(&record)? + "\n"));
        for (suffix, body) in exec.extras {
            files.push((sibling(out, suffix), body + "\n"));
        }
    }
    write_files(&files)?;
    Ok(RunSummary {
        num_communities: record.partition.num_communities,
        modularity: record.partition.modularity,
        written: files.into_iter().map(|(p, _)| p).collect(),
    })
}
