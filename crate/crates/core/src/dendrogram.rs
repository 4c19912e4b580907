//! Merge trees and horizontal cuts through them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::unionfind::UnionFind;
use crate::{Error, Partition, Result};

/// One join in a dendrogram. Leaves are clusters `0..n`; merge `k` creates
/// cluster `n + k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub left_cluster_id: usize,
    pub right_cluster_id: usize,
    pub new_cluster_id: usize,
    pub merge_distance: f64,
    pub step_index: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dendrogram {
    leaves: usize,
    merges: Vec<Merge>,
}

impl Dendrogram {
    pub(crate) fn with_leaves(leaves: usize) -> Self {
        Dendrogram {
            leaves,
            merges: Vec::with_capacity(leaves.saturating_sub(1)),
        }
    }

    /// Records a join of two live clusters and returns the new cluster id.
    pub(crate) fn push(&mut self, a: usize, b: usize, distance: f64) -> usize {
        let new_cluster_id = self.leaves + self.merges.len();
        self.merges.push(Merge {
            left_cluster_id: a.min(b),
            right_cluster_id: a.max(b),
            new_cluster_id,
            merge_distance: distance,
            step_index: self.merges.len(),
        });
        new_cluster_id
    }

    /// Rebuilds a dendrogram from serialized merges, checking that every
    /// cluster is consumed at most once and only after it exists.
    pub fn from_merges(leaves: usize, merges: Vec<Merge>) -> Result<Self> {
        let mut used = HashSet::new();
        for (k, m) in merges.iter().enumerate() {
            let bad = |msg: &str| Error::InvalidParameter(format!("merge {k}: {msg}"));
            if m.new_cluster_id != leaves + k || m.step_index != k {
                return Err(bad(
                    "cluster ids must be numbered consecutively after the leaves",
                ));
            }
            for c in [m.left_cluster_id, m.right_cluster_id] {
                if c >= m.new_cluster_id {
                    return Err(bad("refers to a cluster that does not exist yet"));
                }
                if !used.insert(c) {
                    return Err(bad("cluster merged twice"));
                }
            }
            if m.left_cluster_id == m.right_cluster_id {
                return Err(bad("cluster merged with itself"));
            }
        }
        if merges.len() > leaves.saturating_sub(1) {
            return Err(Error::InvalidParameter(
                "more merges than leaves allow".into(),
            ));
        }
        Ok(Dendrogram { leaves, merges })
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.merges).expect("merges serialize")
    }
}

/// Where to place the horizontal separation line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HslSpec {
    /// Number of merges to undo, counted from the top.
    Absolute(usize),
    /// `0` is the very top (one cluster), `1` the very bottom (singletons).
    Relative(f64),
}

impl HslSpec {
    fn steps_from_top(self, total: usize) -> Result<usize> {
        match self {
            HslSpec::Absolute(s) if s > total => Err(Error::InvalidParameter(format!(
                "cannot undo {s} merges of a dendrogram with {total}"
            ))),
            HslSpec::Absolute(s) => Ok(s),
            HslSpec::Relative(r) if !(0.0..=1.0).contains(&r) => Err(Error::InvalidParameter(
                format!("relative level {r} not in [0, 1]"),
            )),
            // round half up
            HslSpec::Relative(r) => Ok(((r * total as f64) + 0.5).floor() as usize),
        }
    }
}

/// Partition obtained by undoing the top merges of `d` as `spec` says.
pub fn cut(d: &Dendrogram, spec: HslSpec) -> Result<Partition> {
    let undo = spec.steps_from_top(d.merges.len())?;
    let keep = d.merges.len() - undo;
    let mut uf = UnionFind::new(d.leaves + keep);
    for m in &d.merges[..keep] {
        uf.union(m.left_cluster_id, m.new_cluster_id);
        uf.union(m.right_cluster_id, m.new_cluster_id);
    }
    let labels = (0..d.leaves).map(|leaf| uf.find(leaf)).collect();
    Ok(Partition::new(labels).canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_leaves() -> Dendrogram {
        let mut d = Dendrogram::with_leaves(3);
        let c = d.push(0, 1, 1.0);
        d.push(c, 2, 2.0);
        d
    }

    #[test]
    fn relative_extremes() {
        let d = three_leaves();
        assert_eq!(
            cut(&d, HslSpec::Relative(0.0)).unwrap().num_communities(),
            1
        );
        assert_eq!(
            cut(&d, HslSpec::Relative(1.0)).unwrap().num_communities(),
            3
        );
    }

    #[test]
    fn absolute_undo_one() {
        let p = cut(&three_leaves(), HslSpec::Absolute(1)).unwrap();
        assert_eq!(p.labels(), &[0, 0, 1]);
    }

    #[test]
    fn invalid_specs() {
        let d = three_leaves();
        assert!(cut(&d, HslSpec::Absolute(3)).is_err());
        assert!(cut(&d, HslSpec::Relative(1.5)).is_err());
        assert!(cut(&d, HslSpec::Relative(-0.1)).is_err());
    }

    #[test]
    fn relative_rounds_half_up() {
        // 2 merges, rel 0.25 -> 0.5 steps -> rounds to 1
        let p = cut(&three_leaves(), HslSpec::Relative(0.25)).unwrap();
        assert_eq!(p.num_communities(), 2);
    }

    #[test]
    fn from_merges_validates() {
        let d = three_leaves();
        assert_eq!(Dendrogram::from_merges(3, d.merges().to_vec()).unwrap(), d);
        let mut twice = d.merges().to_vec();
        twice[1].right_cluster_id = 0;
        assert!(Dendrogram::from_merges(3, twice).is_err());
    }

    #[test]
    fn single_leaf() {
        let d = Dendrogram::with_leaves(1);
        assert_eq!(cut(&d, HslSpec::Relative(0.0)).unwrap().labels(), &[0]);
    }
}
