//! Library side of the `commdetect` binary: argument validation, runs,
//! benchmarks and plot data. The binary only parses flags.

mod bench;
mod config;
mod output;
mod plot;
mod run;

pub use bench::{bench, thread_cap, BenchReport};
pub use config::{Algorithm, Dataset, HslMode, Mode, Params, RunConfig};
pub use output::{sibling, write_files};
pub use plot::{plot_data, to_csv, PlotInput};
pub use run::{execute, run, RunRecord, RunSummary};
