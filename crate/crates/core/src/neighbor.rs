//! Shared-neighbor counts for degree-based node distances.

use crate::{Graph, NodeId, Result};

/// Symmetric table of shared-neighbor counts `n_ij`.
///
/// With self-neighboring every node is treated as a member of its own
/// neighbor set: effective degrees grow by one and adjacent pairs gain two
/// shared neighbors (each endpoint now appears in both sets).
#[derive(Clone, Debug, PartialEq)]
pub struct NeighborMatrix {
    n: usize,
    counts: Vec<u32>,
    effective_degree: Vec<u32>,
    self_neighboring: bool,
}

impl NeighborMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn shared(&self, i: NodeId, j: NodeId) -> u32 {
        self.counts[i * self.n + j]
    }

    pub fn effective_degree(&self, i: NodeId) -> u32 {
        self.effective_degree[i]
    }

    pub fn self_neighboring(&self) -> bool {
        self.self_neighboring
    }
}

/// Builds the neighbor matrix of a graph without self-loops.
pub fn neighbor_matrix(g: &Graph, self_neighboring: bool) -> Result<NeighborMatrix> {
    g.require_simple()?;
    let n = g.node_count();
    let mut counts = vec![0u32; n * n];
    // every node w is a shared neighbor of each pair among its neighbors
    for w in 0..n {
        let nbrs = g.neighbors(w);
        for (x, &(a, _)) in nbrs.iter().enumerate() {
            for &(b, _) in &nbrs[x + 1..] {
                counts[a * n + b] += 1;
                counts[b * n + a] += 1;
            }
        }
    }
    let extra = u32::from(self_neighboring);
    let mut effective_degree = Vec::with_capacity(n);
    for i in 0..n {
        let deg = g.degree(i) as u32;
        counts[i * n + i] = deg + extra;
        effective_degree.push(deg + extra);
    }
    if self_neighboring {
        for e in g.edges() {
            counts[e.u * n + e.v] += 2;
            counts[e.v * n + e.u] += 2;
        }
    }
    Ok(NeighborMatrix {
        n,
        counts,
        effective_degree,
        self_neighboring,
    })
}
