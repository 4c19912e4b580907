use std::collections::HashSet;

use crate::{Error, Result};

/// Index of a node, always `< node_count` of its graph.
pub type NodeId = usize;

/// One undirected edge, stored with `u <= v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: NodeId,
    pub v: NodeId,
    pub weight: f64,
}

impl Edge {
    pub fn is_self_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Undirected weighted graph with contiguous node ids.
///
/// Parallel edges are rejected; self-loops are allowed because Louvain
/// aggregation produces them. A self-loop of weight `w` adds `2w` to the
/// weighted degree of its node, so the degrees always sum to `2m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    node_count: usize,
    // sorted by (u, v)
    edges: Vec<Edge>,
    // per node, sorted by neighbor; a self-loop appears once
    adjacency: Vec<Vec<(NodeId, f64)>>,
    degrees: Vec<f64>,
    self_loops: Vec<f64>,
    total_weight: f64,
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples.
    pub fn new<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b, weight) in edges {
            for node in [a, b] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if !(weight > 0.0 && weight.is_finite()) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a}, {b}}} has non-positive weight {weight}"
                )));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
            list.push(Edge { u, v, weight });
        }
        list.sort_by_key(|e| (e.u, e.v));

        let mut adjacency = vec![Vec::new(); node_count];
        let mut degrees = vec![0.0; node_count];
        let mut self_loops = vec![0.0; node_count];
        let mut total_weight = 0.0;
        for e in &list {
            total_weight += e.weight;
            if e.is_self_loop() {
                adjacency[e.u].push((e.u, e.weight));
                degrees[e.u] += 2.0 * e.weight;
                self_loops[e.u] = e.weight;
            } else {
                adjacency[e.u].push((e.v, e.weight));
                adjacency[e.v].push((e.u, e.weight));
                degrees[e.u] += e.weight;
                degrees[e.v] += e.weight;
            }
        }
        for row in &mut adjacency {
            row.sort_by_key(|&(n, _)| n);
        }
        Ok(Graph {
            node_count,
            edges: list,
            adjacency,
            degrees,
            self_loops,
            total_weight,
        })
    }

    /// Unit-weight graph from `(u, v)` pairs.
    pub fn from_unweighted(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        Graph::new(node_count, edges.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    pub fn empty(node_count: usize) -> Self {
        Graph::new(node_count, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`; the position in this slice is the edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: NodeId, v: NodeId) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search_by_key(&key, |e| (e.u, e.v)).ok()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Neighbors of `i` with edge weights, sorted by neighbor id. A self-loop
    /// shows up as `(i, w)`.
    pub fn neighbors(&self, i: NodeId) -> &[(NodeId, f64)] {
        &self.adjacency[i]
    }

    /// Number of distinct neighbors, ignoring a self-loop.
    pub fn degree(&self, i: NodeId) -> usize {
        self.adjacency[i].iter().filter(|&&(n, _)| n != i).count()
    }

    /// Sum of incident edge weights, self-loops counted twice.
    pub fn weighted_degree(&self, i: NodeId) -> Result<f64> {
        self.degrees.get(i).copied().ok_or(Error::NodeOutOfRange {
            node: i,
            node_count: self.node_count,
        })
    }

    pub(crate) fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Self-loop weight of `i`, zero if none.
    pub fn self_loop(&self, i: NodeId) -> f64 {
        self.self_loops[i]
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_self_loop)
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        match self.edges.iter().find(|e| e.is_self_loop()) {
            Some(e) => Err(Error::SelfLoop(e.u)),
            None => Ok(()),
        }
    }

    /// Total edge weight `m`; a self-loop counts once.
    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// Same graph without the edges whose ids are in `removed`.
    pub fn without_edges(&self, removed: &HashSet<usize>) -> Graph {
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !removed.contains(id))
            .map(|(_, e)| (e.u, e.v, e.weight));
        Graph::new(self.node_count, kept).expect("subgraph of a valid graph is valid")
    }
}
