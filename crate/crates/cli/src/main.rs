use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use commdetect::agglomerative::LinkageKind;
use commdetect::louvain::LouvainVariant;
use commdetect_cli::{
    bench, plot_data, run, sibling, write_files, Algorithm, Dataset, HslMode, Params, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "commdetect",
    version,
    about = "Community detection on undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm and write its partition.
    Run(AlgoArgs),
    /// Repeat runs and report score and runtime statistics.
    Bench(AlgoArgs),
    /// Convert a bench report or a fastgreedy trace to CSV.
    PlotData {
        /// Bench report JSON or trace JSON.
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct AlgoArgs {
    /// agglomerative, girvan-newman, girvan-newman-static, louvain or fastgreedy
    #[arg(long)]
    algorithm: Option<Algorithm>,
    /// karate, edgelist:<path> or random:<n,p,seed>
    #[arg(long, default_value = "karate")]
    dataset: Dataset,
    /// single, complete or average (agglomerative; default complete)
    #[arg(long)]
    linkage: Option<LinkageKind>,
    /// Count every node as its own neighbor (agglomerative)
    #[arg(long)]
    self_neighboring: bool,
    /// absolute or relative (agglomerative; default relative)
    #[arg(long)]
    hsl_mode: Option<HslMode>,
    /// Merges to undo, or a level in [0, 1] (agglomerative)
    #[arg(long)]
    hsl_value: Option<f64>,
    /// Stop once this many components exist (girvan-newman)
    #[arg(long)]
    target_communities: Option<usize>,
    /// Louvain variant(s), comma separated
    #[arg(long, value_delimiter = ',')]
    variant: Vec<LouvainVariant>,
    /// Louvain seed; the first seed for bench (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Runs per variant (bench; default 100)
    #[arg(long)]
    runs: Option<usize>,
    /// Output file
    #[arg(long)]
    out: Option<PathBuf>,
}

impl AlgoArgs {
    fn into_config(self, default_algorithm: Option<Algorithm>) -> Result<RunConfig> {
        let algorithm = self
            .algorithm
            .or(default_algorithm)
            .context("--algorithm is required")?;
        Ok(RunConfig {
            algorithm,
            dataset: self.dataset,
            params: Params {
                linkage: self.linkage,
                self_neighboring: self.self_neighboring,
                hsl_mode: self.hsl_mode,
                hsl_value: self.hsl_value,
                target_communities: self.target_communities,
                variants: self.variant,
                seed: self.seed,
                runs: self.runs,
            },
            out: self.out,
        })
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Run(args) => {
            let config = args.into_config(None)?;
            if config.out.is_none() {
                anyhow::bail!("--out is required for run");
            }
            print!("{}", run(&config)?);
        }
        Command::Bench(args) => {
            let config = args.into_config(Some(Algorithm::Louvain))?;
            let report = bench(&config)?;
            let table = report.table();
            if let Some(out) = &config.out {
                write_files(&[
                    (out.clone(), serde_json::to_string_pretty(&report)? + "\n"),
                    (sibling(out, "txt"), table.clone()),
                ])?;
            }
            println!("# {} on {}", report.environment, report.dataset);
            print!("{table}");
        }
        Command::PlotData { input, out } => {
            let rows = plot_data(&input, &out)?;
            println!("wrote {rows} rows to {}", out.display());
        }
    }
    Ok(())
}
