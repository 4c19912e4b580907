use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use commdetect::agglomerative::{HslSpec, LinkageKind};
use commdetect::datasets::{karate_club, random_graph};
use commdetect::io::load_edge_list;
use commdetect::louvain::LouvainVariant;
use commdetect::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Agglomerative,
    GirvanNewman,
    GirvanNewmanStatic,
    Louvain,
    Fastgreedy,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Agglomerative,
        Algorithm::GirvanNewman,
        Algorithm::GirvanNewmanStatic,
        Algorithm::Louvain,
        Algorithm::Fastgreedy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Agglomerative => "agglomerative",
            Algorithm::GirvanNewman => "girvan-newman",
            Algorithm::GirvanNewmanStatic => "girvan-newman-static",
            Algorithm::Louvain => "louvain",
            Algorithm::Fastgreedy => "fastgreedy",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                anyhow!(
                    "unknown algorithm {s:?}; expected one of {}",
                    names(&Algorithm::ALL)
                )
            })
    }
}

fn names(all: &[Algorithm]) -> String {
    all.iter().map(|a| a.name()).collect::<Vec<_>>().join(", ")
}

/// Where the graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum Dataset {
    Karate,
    EdgeList(PathBuf),
    Random { n: usize, p: f64, seed: u64 },
}

impl Dataset {
    pub fn load(&self) -> Result<Graph> {
        match self {
            Dataset::Karate => Ok(karate_club()),
            Dataset::EdgeList(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                load_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
            }
            Dataset::Random { n, p, seed } => Ok(random_graph(*n, *p, *seed)?),
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dataset::Karate => f.write_str("karate"),
            Dataset::EdgeList(path) => write!(f, "edgelist:{}", path.display()),
            Dataset::Random { n, p, seed } => write!(f, "random:{n},{p},{seed}"),
        }
    }
}

impl FromStr for Dataset {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "karate" {
            return Ok(Dataset::Karate);
        }
        if let Some(path) = s.strip_prefix("edgelist:") {
            if path.is_empty() {
                bail!("edgelist: needs a path");
            }
            return Ok(Dataset::EdgeList(PathBuf::from(path)));
        }
        if let Some(spec) = s.strip_prefix("random:") {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let [n, p, seed] = parts[..] else {
                bail!("random dataset takes n,p,seed, got {spec:?}");
            };
            let n = n.parse().with_context(|| format!("bad node count {n:?}"))?;
            let p: f64 = p
                .parse()
                .with_context(|| format!("bad edge probability {p:?}"))?;
            if !(0.0..=1.0).contains(&p) {
                bail!("edge probability {p} not in [0, 1]");
            }
            let seed = seed.parse().with_context(|| format!("bad seed {seed:?}"))?;
            return Ok(Dataset::Random { n, p, seed });
        }
        bail!("unknown dataset {s:?}; expected karate, edgelist:<path> or random:<n,p,seed>")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HslMode {
    Absolute,
    Relative,
}

impl FromStr for HslMode {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "absolute" | "abs" => Ok(HslMode::Absolute),
            "relative" | "rel" => Ok(HslMode::Relative),
            _ => bail!("unknown HSL mode {s:?}; expected absolute or relative"),
        }
    }
}

/// Algorithm parameters as given on the command line; `None` means the flag
/// was not passed.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub linkage: Option<LinkageKind>,
    pub self_neighboring: bool,
    pub hsl_mode: Option<HslMode>,
    pub hsl_value: Option<f64>,
    pub target_communities: Option<usize>,
    pub variants: Vec<LouvainVariant>,
    pub seed: Option<u64>,
    pub runs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Run,
    Bench,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub dataset: Dataset,
    pub params: Params,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, dataset: Dataset) -> Self {
        RunConfig {
            algorithm,
            dataset,
            params: Params::default(),
            out: None,
        }
    }

    /// Rejects flags the algorithm does not take and missing or out-of-range
    /// values. Nothing is loaded or computed.
    pub fn validate(&self, mode: Mode) -> Result<()> {
        use Algorithm::*;
        let p = &self.params;
        let given = [
            (
                "linkage",
                p.linkage.is_some(),
                matches!(self.algorithm, Agglomerative),
            ),
            (
                "self-neighboring",
                p.self_neighboring,
                matches!(self.algorithm, Agglomerative),
            ),
            (
                "hsl-mode",
                p.hsl_mode.is_some(),
                matches!(self.algorithm, Agglomerative),
            ),
            (
                "hsl-value",
                p.hsl_value.is_some(),
                matches!(self.algorithm, Agglomerative),
            ),
            (
                "target-communities",
                p.target_communities.is_some(),
                matches!(self.algorithm, GirvanNewman | GirvanNewmanStatic),
            ),
            (
                "variant",
                !p.variants.is_empty(),
                matches!(self.algorithm, Louvain),
            ),
            ("seed", p.seed.is_some(), matches!(self.algorithm, Louvain)),
            ("runs", p.runs.is_some(), mode == Mode::Bench),
        ];
        for (flag, present, accepted) in given {
            if present && !accepted {
                match (flag, mode) {
                    ("runs", Mode::Run) => bail!("--runs only applies to bench"),
                    _ => bail!("--{flag} does not apply to {}", self.algorithm),
                }
            }
        }
        match self.algorithm {
            Agglomerative => {
                let value = p
                    .hsl_value
                    .ok_or_else(|| anyhow!("agglomerative needs --hsl-value"))?;
                self.hsl_for(value)?;
            }
            GirvanNewman | GirvanNewmanStatic => {
                let t = p
                    .target_communities
                    .ok_or_else(|| anyhow!("{} needs --target-communities", self.algorithm))?;
                if t == 0 {
                    bail!("--target-communities must be at least 1");
                }
            }
            Louvain if mode == Mode::Run && p.variants.len() > 1 => {
                bail!("run takes a single --variant")
            }
            _ => {}
        }
        if p.runs == Some(0) {
            bail!("--runs must be at least 1");
        }
        Ok(())
    }

    fn hsl_for(&self, value: f64) -> Result<HslSpec> {
        match self.params.hsl_mode.unwrap_or(HslMode::Relative) {
            HslMode::Relative if (0.0..=1.0).contains(&value) => Ok(HslSpec::Relative(value)),
            HslMode::Relative => bail!("relative --hsl-value {value} not in [0, 1]"),
            HslMode::Absolute if value >= 0.0 && value.fract() == 0.0 => {
                Ok(HslSpec::Absolute(value as usize))
            }
            HslMode::Absolute => {
                bail!("absolute --hsl-value must be a whole number of merges, got {value}")
            }
        }
    }

    /// Cut level for agglomerative runs.
    pub fn hsl(&self) -> Result<HslSpec> {
        self.hsl_for(
            self.params
                .hsl_value
                .ok_or_else(|| anyhow!("agglomerative needs --hsl-value"))?,
        )
    }

    pub fn linkage(&self) -> LinkageKind {
        self.params.linkage.unwrap_or(LinkageKind::Complete)
    }

    /// Louvain variants to run; defaults to `normal` for run and to every
    /// variant for bench.
    pub fn variants(&self, mode: Mode) -> Vec<LouvainVariant> {
        match (&self.params.variants[..], mode) {
            ([], Mode::Run) => vec![LouvainVariant::Normal],
            ([], Mode::Bench) => LouvainVariant::ALL.to_vec(),
            (v, _) => v.to_vec(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.params.seed.unwrap_or(0)
    }

    pub fn runs(&self) -> usize {
        self.params.runs.unwrap_or(100)
    }
}
