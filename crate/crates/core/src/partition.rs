use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, NodeId, Result};

/// Assignment of every node to a community label.
///
/// Labels are arbitrary non-negative integers; two partitions describe the
/// same grouping iff their [`canonical`](Partition::canonical) forms are
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn new(labels: Vec<usize>) -> Self {
        Partition { labels }
    }

    /// Every node on its own.
    pub fn singletons(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    /// Everything in community 0.
    pub fn single(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, node: NodeId) -> usize {
        self.labels[node]
    }

    pub fn num_communities(&self) -> usize {
        let mut seen: Vec<usize> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels to `0..k` in order of first appearance.
    pub fn canonical(&self) -> Partition {
        let mut map = HashMap::new();
        let labels = self
            .labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition { labels }
    }

    /// Whether both partitions group the nodes identically.
    pub fn same_grouping(&self, other: &Partition) -> bool {
        self.canonical() == other.canonical()
    }

    /// Member lists, ordered by each community's first node.
    pub fn communities(&self) -> Vec<Vec<NodeId>> {
        let canon = self.canonical();
        let mut groups: Vec<Vec<NodeId>> = Vec::new();
        for (node, &l) in canon.labels.iter().enumerate() {
            if l == groups.len() {
                groups.push(Vec::new());
            }
            groups[l].push(node);
        }
        groups
    }

    /// JSON-ready summary; `modularity` is `None` when the graph has no edges.
    pub fn record(&self, g: &Graph) -> Result<PartitionRecord> {
        let modularity = match modularity(g, self) {
            Ok(q) => Some(q),
            Err(Error::NoEdges) => None,
            Err(e) => return Err(e),
        };
        Ok(PartitionRecord {
            labels: self.labels.clone(),
            num_communities: self.num_communities(),
            modularity,
        })
    }
}

/// Serialized form of a partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub labels: Vec<usize>,
    pub num_communities: usize,
    pub modularity: Option<f64>,
}

/// Labels nodes by connected component, numbered in order of their smallest
/// node.
pub fn connected_components(g: &Graph) -> Partition {
    let n = g.node_count();
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = next;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.neighbors(x) {
                if labels[y] == usize::MAX {
                    labels[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    Partition { labels }
}

/// Newman modularity `Q = 1/2m Σ_ij [A_ij - k_i k_j / 2m] δ(c_i, c_j)`.
///
/// Evaluated per community as `Σ_c [L_c / m - (D_c / 2m)^2]`, where `L_c` is
/// the weight of edges inside `c` and `D_c` the degree sum of its members.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if p.len() != g.node_count() {
        return Err(Error::PartitionSize {
            expected: g.node_count(),
            got: p.len(),
        });
    }
    if g.total_weight() <= 0.0 {
        return Err(Error::NoEdges);
    }
    let canon = p.canonical();
    let k = canon.labels.iter().copied().max().map_or(0, |x| x + 1);
    Ok(modularity_dense(g, &canon.labels, k))
}

/// Modularity for labels already known to lie in `0..num_labels`; `g` must
/// have edges.
pub(crate) fn modularity_dense(g: &Graph, labels: &[usize], num_labels: usize) -> f64 {
    let mut inside = vec![0.0; num_labels];
    let mut degree = vec![0.0; num_labels];
    for e in g.edges() {
        if labels[e.u] == labels[e.v] {
            inside[labels[e.u]] += e.weight;
        }
    }
    for (node, &d) in g.degrees().iter().enumerate() {
        degree[labels[node]] += d;
    }
    let m = g.total_weight();
    inside
        .iter()
        .zip(&degree)
        .map(|(&l, &d)| l / m - (d / (2.0 * m)).powi(2))
        .sum()
}
