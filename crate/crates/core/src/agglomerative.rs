//! Bottom-up hierarchical clustering over degree-based node distances.
//!
//! Node distance is the network-centric Euclidean distance
//! `d_ij = k_i + k_j - 2 n_ij` on a [`NeighborMatrix`]; cluster distance is a
//! [`LinkageKind`] over all cross pairs. The closest pair of clusters is
//! joined until one cluster is left, and [`cut`] turns the resulting
//! dendrogram back into a partition.

use std::fmt;
use std::str::FromStr;

pub use crate::dendrogram::{cut, Dendrogram, HslSpec, Merge};
use crate::neighbor::{neighbor_matrix, NeighborMatrix};
use crate::{Error, Graph, NodeId, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkageKind {
    /// Minimum over cross pairs.
    Single,
    /// Maximum over cross pairs.
    Complete,
    /// Mean over cross pairs.
    Average,
}

impl LinkageKind {
    pub const ALL: [LinkageKind; 3] = [
        LinkageKind::Single,
        LinkageKind::Complete,
        LinkageKind::Average,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LinkageKind::Single => "single",
            LinkageKind::Complete => "complete",
            LinkageKind::Average => "average",
        }
    }
}

impl fmt::Display for LinkageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LinkageKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "single" | "min" | "minimum" => Ok(LinkageKind::Single),
            "complete" | "max" | "maximum" => Ok(LinkageKind::Complete),
            "average" | "mean" => Ok(LinkageKind::Average),
            other => Err(Error::InvalidParameter(format!(
                "unknown linkage {other:?}"
            ))),
        }
    }
}

/// `k_i + k_j - 2 n_ij` using the matrix's effective degrees.
pub fn euclidean_distance(nm: &NeighborMatrix, i: NodeId, j: NodeId) -> Result<f64> {
    let n = nm.node_count();
    for node in [i, j] {
        if node >= n {
            return Err(Error::NodeOutOfRange {
                node,
                node_count: n,
            });
        }
    }
    if i == j {
        return Err(Error::InvalidParameter(format!(
            "distance of node {i} to itself"
        )));
    }
    let d = i64::from(nm.effective_degree(i)) + i64::from(nm.effective_degree(j))
        - 2 * i64::from(nm.shared(i, j));
    Ok(d as f64)
}

/// Distance between two disjoint, non-empty clusters.
pub fn linkage_distance<F>(
    kind: LinkageKind,
    a: &[NodeId],
    b: &[NodeId],
    pairwise: F,
) -> Result<f64>
where
    F: Fn(NodeId, NodeId) -> f64,
{
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidParameter(
            "linkage of an empty cluster".into(),
        ));
    }
    let pairs = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y)));
    Ok(match kind {
        LinkageKind::Single => pairs
            .map(|(x, y)| pairwise(x, y))
            .fold(f64::INFINITY, f64::min),
        LinkageKind::Complete => pairs
            .map(|(x, y)| pairwise(x, y))
            .fold(f64::NEG_INFINITY, f64::max),
        LinkageKind::Average => {
            pairs.map(|(x, y)| pairwise(x, y)).sum::<f64>() / (a.len() * b.len()) as f64
        }
    })
}

/// Joins the closest clusters until one remains.
///
/// Equal distances are resolved in favour of the pair with the smallest
/// `(min cluster id, max cluster id)`.
pub fn agglomerate(g: &Graph, kind: LinkageKind, self_neighboring: bool) -> Result<Dendrogram> {
    let nm = neighbor_matrix(g, self_neighboring)?;
    let n = g.node_count();
    let mut dendrogram = Dendrogram::with_leaves(n);
    if n < 2 {
        return Ok(dendrogram);
    }

    // Slot s starts as leaf s; after a merge the surviving slot holds the new
    // cluster. `table` keeps min/max, or the pair sum for average linkage,
    // which stays an exact integer.
    let mut table = vec![0.0f64; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = euclidean_distance(&nm, i, j)?;
            table[i * n + j] = d;
            table[j * n + i] = d;
        }
    }
    let mut cluster_id: Vec<usize> = (0..n).collect();
    let mut size = vec![1usize; n];
    let mut alive: Vec<usize> = (0..n).collect();

    let value = |table: &[f64], size: &[usize], a: usize, b: usize| match kind {
        LinkageKind::Average => table[a * n + b] / (size[a] * size[b]) as f64,
        _ => table[a * n + b],
    };

    while alive.len() > 1 {
        let mut best: Option<(f64, (usize, usize), usize, usize)> = None;
        for (x, &a) in alive.iter().enumerate() {
            for &b in &alive[x + 1..] {
                let v = value(&table, &size, a, b);
                let ids = (
                    cluster_id[a].min(cluster_id[b]),
                    cluster_id[a].max(cluster_id[b]),
                );
                let better = match best {
                    None => true,
                    Some((bv, bids, _, _)) => v < bv || (v == bv && ids < bids),
                };
                if better {
                    best = Some((v, ids, a, b));
                }
            }
        }
        let (distance, _, keep, gone) = best.expect("at least two clusters alive");
        for &c in &alive {
            if c == keep || c == gone {
                continue;
            }
            let merged = match kind {
                LinkageKind::Single => table[keep * n + c].min(table[gone * n + c]),
                LinkageKind::Complete => table[keep * n + c].max(table[gone * n + c]),
                LinkageKind::Average => table[keep * n + c] + table[gone * n + c],
            };
            table[keep * n + c] = merged;
            table[c * n + keep] = merged;
        }
        cluster_id[keep] = dendrogram.push(cluster_id[keep], cluster_id[gone], distance);
        size[keep] += size[gone];
        alive.retain(|&s| s != gone);
    }
    Ok(dendrogram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_examples() {
        let edge = Graph::from_unweighted(2, &[(0, 1)]).unwrap();
        let plain = neighbor_matrix(&edge, false).unwrap();
        assert_eq!(euclidean_distance(&plain, 0, 1).unwrap(), 2.0);
        let selfn = neighbor_matrix(&edge, true).unwrap();
        assert_eq!(euclidean_distance(&selfn, 0, 1).unwrap(), 0.0);

        let path = Graph::from_unweighted(3, &[(0, 1), (1, 2)]).unwrap();
        let nm = neighbor_matrix(&path, false).unwrap();
        assert_eq!(euclidean_distance(&nm, 0, 2).unwrap(), 0.0);
        assert!(euclidean_distance(&nm, 1, 1).is_err());
    }

    #[test]
    fn self_neighboring_reverses_the_three_small_graphs() {
        // lone edge A-B; A and B sharing one neighbor C; A and B on separate edges
        let graphs = [
            Graph::from_unweighted(2, &[(0, 1)]).unwrap(),
            Graph::from_unweighted(3, &[(0, 2), (1, 2)]).unwrap(),
            Graph::from_unweighted(4, &[(0, 2), (1, 3)]).unwrap(),
        ];
        let mut before = Vec::new();
        let mut after = Vec::new();
        for g in &graphs {
            before.push(euclidean_distance(&neighbor_matrix(g, false).unwrap(), 0, 1).unwrap());
            after.push(euclidean_distance(&neighbor_matrix(g, true).unwrap(), 0, 1).unwrap());
        }
        assert_eq!(before, vec![2.0, 0.0, 2.0]);
        assert_eq!(after, vec![0.0, 2.0, 4.0]);
    }

    #[test]
    fn linkage_examples() {
        let d = |a: usize, b: usize| [[0.0, 0.0, 0.0], [0.0, 0.0, 4.0], [0.0, 4.0, 0.0]][a][b];
        assert_eq!(
            linkage_distance(LinkageKind::Single, &[0, 1], &[2], d).unwrap(),
            0.0
        );
        assert_eq!(
            linkage_distance(LinkageKind::Complete, &[0, 1], &[2], d).unwrap(),
            4.0
        );
        assert_eq!(
            linkage_distance(LinkageKind::Average, &[0, 1], &[2], d).unwrap(),
            2.0
        );
        for kind in LinkageKind::ALL {
            assert_eq!(linkage_distance(kind, &[1], &[2], d).unwrap(), 4.0);
        }
        assert!(linkage_distance(LinkageKind::Single, &[], &[2], d).is_err());
    }

    #[test]
    fn trivial_graphs() {
        let d = agglomerate(&Graph::empty(1), LinkageKind::Complete, false).unwrap();
        assert!(d.merges().is_empty());
        let d = agglomerate(&Graph::empty(2), LinkageKind::Single, false).unwrap();
        assert_eq!(d.merges().len(), 1);
        assert_eq!(d.merges()[0].merge_distance, 0.0);
    }

    #[test]
    fn linkage_names_parse() {
        for kind in LinkageKind::ALL {
            assert_eq!(kind.name().parse::<LinkageKind>().unwrap(), kind);
        }
        assert!("ward".parse::<LinkageKind>().is_err());
    }
}
