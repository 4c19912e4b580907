//! Louvain modularity optimisation.
//!
//! Each level repeats local-move passes until nothing moves, then contracts
//! every community to one node and starts over on the smaller graph. The
//! variants differ in how candidate moves are scored, whether the
//! contraction happens, and how moves are applied:
//!
//! | variant        | gains                     | aggregation | moves                 |
//! |----------------|---------------------------|-------------|-----------------------|
//! | `Normal`       | incremental               | yes         | one node at a time    |
//! | `Total`        | full modularity per probe | yes         | one node at a time    |
//! | `NoMerge`      | incremental               | no          | one node at a time    |
//! | `TotalNoMerge` | full modularity per probe | no          | one node at a time    |
//! | `Exp`          | incremental               | yes         | chained, per pass     |
//!
//! All sequential variants visit nodes in a seed-derived random order; `Exp`
//! ignores the seed.

mod aggregate;
mod state;
mod stats;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use aggregate::{aggregate, AggregateGraph};
pub use state::{chained_move_pass, local_move_pass, CommunityState, GainRule};
pub use stats::{run_stats, RunStats};

use crate::{modularity, Error, Graph, Partition, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LouvainVariant {
    Normal,
    Total,
    NoMerge,
    TotalNoMerge,
    Exp,
}

impl LouvainVariant {
    pub const ALL: [LouvainVariant; 5] = [
        LouvainVariant::Normal,
        LouvainVariant::Total,
        LouvainVariant::NoMerge,
        LouvainVariant::TotalNoMerge,
        LouvainVariant::Exp,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LouvainVariant::Normal => "normal",
            LouvainVariant::Total => "total",
            LouvainVariant::NoMerge => "noMerge",
            LouvainVariant::TotalNoMerge => "totalNoMerge",
            LouvainVariant::Exp => "Exp",
        }
    }

    fn gain_rule(self) -> GainRule {
        match self {
            LouvainVariant::Total | LouvainVariant::TotalNoMerge => GainRule::Total,
            _ => GainRule::Incremental,
        }
    }

    fn aggregates(self) -> bool {
        !matches!(self, LouvainVariant::NoMerge | LouvainVariant::TotalNoMerge)
    }
}

impl fmt::Display for LouvainVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LouvainVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "normal" => Ok(LouvainVariant::Normal),
            "total" => Ok(LouvainVariant::Total),
            "nomerge" => Ok(LouvainVariant::NoMerge),
            "totalnomerge" => Ok(LouvainVariant::TotalNoMerge),
            "exp" | "chained" => Ok(LouvainVariant::Exp),
            _ => Err(Error::InvalidParameter(format!(
                "unknown Louvain variant {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LouvainOutcome {
    pub partition: Partition,
    pub modularity: f64,
    /// Local-move passes over all levels, including the final idle one.
    pub passes: usize,
    /// Levels that moved at least one node.
    pub levels: usize,
}

/// Runs one Louvain variant on `g`.
pub fn louvain(g: &Graph, variant: LouvainVariant, seed: u64) -> Result<LouvainOutcome> {
    if g.total_weight() <= 0.0 {
        return Err(Error::NoEdges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut membership: Vec<usize> = (0..g.node_count()).collect();
    let mut level_graph = std::borrow::Cow::Borrowed(g);
    let mut passes = 0;
    let mut levels = 0;

    loop {
        let lg: &Graph = &level_graph;
        let mut state = CommunityState::singletons(lg)?;
        let mut moved = false;
        if variant == LouvainVariant::Exp {
            loop {
                passes += 1;
                if !chained_move_pass(lg, &mut state) {
                    break;
                }
                moved = true;
            }
        } else {
            let mut order: Vec<usize> = (0..lg.node_count()).collect();
            order.shuffle(&mut rng);
            loop {
                passes += 1;
                if !local_move_pass(lg, &mut state, &order, variant.gain_rule()) {
                    break;
                }
                moved = true;
            }
        }
        if !moved {
            break;
        }
        levels += 1;
        let agg = aggregate(lg, &state.partition())?;
        for m in membership.iter_mut() {
            *m = agg.membership[*m];
        }
        if !variant.aggregates() || agg.graph.node_count() == lg.node_count() {
            break;
        }
        level_graph = std::borrow::Cow::Owned(agg.graph);
    }

    let partition = Partition::new(membership).canonical();
    let q = modularity(g, &partition)?;
    Ok(LouvainOutcome {
        partition,
        modularity: q,
        passes,
        levels,
    })
}
