use std::path::Path;

use anyhow::{bail, Context, Result};
use commdetect::fastgreedy::TraceStep;

use crate::bench::BenchReport;
use crate::output::write_files;

#[derive(Clone, Debug, PartialEq)]
pub enum PlotInput {
    Report(BenchReport),
    Trace(Vec<TraceStep>),
}

impl PlotInput {
    /// A JSON array is a trace, an object a bench report.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).context("input is not JSON")?;
        match value {
            serde_json::Value::Array(_) => Ok(PlotInput::Trace(
                serde_json::from_value(value).context("not a trace")?,
            )),
            serde_json::Value::Object(_) => Ok(PlotInput::Report(
                serde_json::from_value(value).context("not a bench report")?,
            )),
            _ => bail!("expected a bench report or a trace"),
        }
    }
}

/// One row per run (`variant,run_index,q`) or per join
/// (`step,q,num_communities`).
pub fn to_csv(input: &PlotInput) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match input {
        PlotInput::Report(report) => {
            w.write_record(["variant", "run_index", "q"])?;
            for r in &report.records {
                for (k, q) in r.q_values.iter().enumerate() {
                    w.write_record([r.variant.clone(), k.to_string(), q.to_string()])?;
                }
            }
        }
        PlotInput::Trace(trace) => {
            w.write_record(["step", "q", "num_communities"])?;
            for s in trace {
                w.write_record([
                    s.step.to_string(),
                    s.q.to_string(),
                    s.num_communities.to_string(),
                ])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Reads a report or trace file and writes its CSV. Returns the number of
/// data rows.
pub fn plot_data(input: &Path, out: &Path) -> Result<usize> {
    let text =
        std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let parsed =
        PlotInput::from_json(&text).with_context(|| format!("parsing {}", input.display()))?;
    let csv = to_csv(&parsed)?;
    write_files(&[(out.to_path_buf(), csv.clone())])?;
    Ok(csv.lines().count() - 1)
}
