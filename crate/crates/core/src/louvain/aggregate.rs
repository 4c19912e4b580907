use std::collections::HashMap;

use crate::{Graph, Partition, Result};

/// Graph of communities: one node per community of the input partition.
#[derive(Clone, Debug, PartialEq)]
pub struct AggregateGraph {
    pub graph: Graph,
    /// Aggregate node of every input node.
    pub membership: Vec<usize>,
}

/// Contracts every community of `p` to a single node.
///
/// Edges inside a community (self-loops included) become one self-loop
/// carrying their total weight; edges between two communities are summed
/// into one edge. Aggregate nodes are numbered by first appearance in `p`.
pub fn aggregate(g: &Graph, p: &Partition) -> Result<AggregateGraph> {
    if p.len() != g.node_count() {
        return Err(crate::Error::PartitionSize {
            expected: g.node_count(),
            got: p.len(),
        });
    }
    let membership = p.canonical().labels().to_vec();
    let count = membership.iter().copied().max().map_or(0, |x| x + 1);
    let mut weights: HashMap<(usize, usize), f64> = HashMap::new();
    for e in g.edges() {
        let (a, b) = (membership[e.u], membership[e.v]);
        *weights.entry((a.min(b), a.max(b))).or_insert(0.0) += e.weight;
    }
    let mut edges: Vec<_> = weights.into_iter().map(|((a, b), w)| (a, b, w)).collect();
    edges.sort_by_key(|&(a, b, _)| (a, b));
    let graph = Graph::new(count, edges)?;
    Ok(AggregateGraph { graph, membership })
}
