//! Divisive clustering by edge betweenness.
//!
//! Betweenness is computed per root in three phases: a breadth-first tree,
//! shortest-path counts top-down, and edge credits bottom-up. A node `i`
//! below parent `j` sends `s_j / s_i * (1 + Σ credit from its children)` up
//! the edge `{i, j}`. Summing over every root counts each pair of endpoints
//! twice, so the totals are halved.

use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::{Error, Graph, NodeId, Partition, Result};

/// Breadth-first tree from `root`. Unreachable nodes have no level.
#[derive(Clone, Debug, PartialEq)]
pub struct BfsTree {
    pub root: NodeId,
    pub level: Vec<Option<usize>>,
    /// Number of shortest paths from the root; zero when unreachable.
    pub paths: Vec<f64>,
    pub parents: Vec<Vec<NodeId>>,
}

/// Betweenness score per edge, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeScores {
    edges: Vec<(NodeId, NodeId)>,
    scores: Vec<f64>,
}

impl EdgeScores {
    pub fn get(&self, u: NodeId, v: NodeId) -> Option<f64> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.scores[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((NodeId, NodeId), f64)> + '_ {
        self.edges.iter().copied().zip(self.scores.iter().copied())
    }

    /// Scores in edge-id order.
    pub fn as_slice(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// One removed edge with the score that selected it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cut {
    pub u: NodeId,
    pub v: NodeId,
    pub score: f64,
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(3)?;
        t.serialize_element(&self.u)?;
        t.serialize_element(&self.v)?;
        t.serialize_element(&self.score)?;
        t.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub partition: Partition,
    /// Removed edges in removal order.
    pub cuts: Vec<Cut>,
}

/// Graph whose edges can be switched off, with per-root scratch space.
struct Working {
    // (neighbor, edge id); self-loops left out
    adj: Vec<Vec<(NodeId, usize)>>,
    alive: Vec<bool>,
    // scratch
    order: Vec<NodeId>,
    level: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    preds: Vec<Vec<(NodeId, usize)>>,
}

impl Working {
    fn new(g: &Graph) -> Self {
        let n = g.node_count();
        let mut adj = vec![Vec::new(); n];
        for (id, e) in g.edges().iter().enumerate() {
            if !e.is_self_loop() {
                adj[e.u].push((e.v, id));
                adj[e.v].push((e.u, id));
            }
        }
        Working {
            adj,
            alive: vec![true; g.edge_count()],
            order: Vec::with_capacity(n),
            level: vec![usize::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            preds: vec![Vec::new(); n],
        }
    }

    /// Phases one and two: levels and path counts from `root`.
    fn bfs(&mut self, root: NodeId) {
        for &x in &self.order {
            self.level[x] = usize::MAX;
            self.sigma[x] = 0.0;
            self.delta[x] = 0.0;
            self.preds[x].clear();
        }
        self.order.clear();
        self.level[root] = 0;
        self.sigma[root] = 1.0;
        self.order.push(root);
        let mut head = 0;
        while head < self.order.len() {
            let x = self.order[head];
            head += 1;
            for &(y, id) in &self.adj[x] {
                if !self.alive[id] {
                    continue;
                }
                if self.level[y] == usize::MAX {
                    self.level[y] = self.level[x] + 1;
                    self.order.push(y);
                }
                if self.level[y] == self.level[x] + 1 {
                    self.sigma[y] += self.sigma[x];
                    self.preds[y].push((x, id));
                }
            }
        }
    }

    /// Phase three: adds this root's credit to `scores` (not yet halved).
    fn accumulate(&mut self, root: NodeId, scores: &mut [f64]) {
        self.bfs(root);
        for &w in self.order.iter().rev() {
            let up = 1.0 + self.delta[w];
            for &(v, id) in &self.preds[w] {
                let credit = self.sigma[v] / self.sigma[w] * up;
                scores[id] += credit;
                self.delta[v] += credit;
            }
        }
    }

    /// Nodes reachable from `start` over live edges.
    fn component(&self, start: NodeId) -> Vec<NodeId> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &(y, id) in &self.adj[x] {
                if self.alive[id] && !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out
    }

    fn components(&self) -> Partition {
        let n = self.adj.len();
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if labels[start] == usize::MAX {
                for x in self.component(start) {
                    labels[x] = next;
                }
                next += 1;
            }
        }
        Partition::new(labels)
    }

    fn component_count(&self) -> usize {
        self.components().num_communities()
    }
}

/// Breadth-first tree with shortest-path counts.
pub fn bfs_tree(g: &Graph, root: NodeId) -> Result<BfsTree> {
    if root >= g.node_count() {
        return Err(Error::NodeOutOfRange {
            node: root,
            node_count: g.node_count(),
        });
    }
    let mut w = Working::new(g);
    w.bfs(root);
    let n = g.node_count();
    let mut tree = BfsTree {
        root,
        level: vec![None; n],
        paths: vec![0.0; n],
        parents: vec![Vec::new(); n],
    };
    for &x in &w.order {
        tree.level[x] = Some(w.level[x]);
        tree.paths[x] = w.sigma[x];
        tree.parents[x] = w.preds[x].iter().map(|&(p, _)| p).collect();
        tree.parents[x].sort_unstable();
    }
    Ok(tree)
}

/// Hop-count edge betweenness of every edge. Self-loops score zero.
pub fn edge_betweenness(g: &Graph) -> EdgeScores {
    let mut w = Working::new(g);
    let mut scores = vec![0.0; g.edge_count()];
    for root in 0..g.node_count() {
        w.accumulate(root, &mut scores);
    }
    for s in &mut scores {
        *s *= 0.5;
    }
    EdgeScores {
        edges: g.edges().iter().map(|e| (e.u, e.v)).collect(),
        scores,
    }
}

fn check_target(g: &Graph, target: usize) -> Result<()> {
    g.require_simple()?;
    if target == 0 || target > g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "target of {target} communities for a graph with {} nodes",
            g.node_count()
        )));
    }
    Ok(())
}

/// Highest live score, ties to the lowest edge id.
// Scores reached by different summation orders can disagree in the last
// bits, so values within this relative distance of each other are ties.
const TIE_TOLERANCE: f64 = 1e-9;

fn ties_with(top: f64, s: f64) -> bool {
    s >= top - TIE_TOLERANCE * top.abs().max(1.0)
}

/// Alive edge with the highest score, ties to the lowest edge id.
fn strongest(alive: &[bool], scores: &[f64]) -> Option<usize> {
    let top = scores
        .iter()
        .zip(alive)
        .filter(|(_, &a)| a)
        .map(|(&s, _)| s)
        .fold(None, |m: Option<f64>, s| Some(m.map_or(s, |m| m.max(s))))?;
    (0..scores.len()).find(|&id| alive[id] && ties_with(top, scores[id]))
}

/// Edge ids by decreasing score; each run of tied scores is ordered by id.
fn ranking(scores: &[f64]) -> Vec<usize> {
    let mut ranked: Vec<usize> = (0..scores.len()).collect();
    ranked.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    let mut start = 0;
    while start < ranked.len() {
        let top = scores[ranked[start]];
        let end = start
            + ranked[start..]
                .iter()
                .take_while(|&&id| ties_with(top, scores[id]))
                .count();
        ranked[start..end].sort_unstable();
        start = end;
    }
    ranked
}

/// Removes the highest-betweenness edge and rescores, until there are at
/// least `target` components or no edges are left.
///
/// After each removal only the component(s) that contained the removed edge
/// are rescored; betweenness never crosses components.
pub fn girvan_newman(g: &Graph, target: usize) -> Result<Division> {
    check_target(g, target)?;
    let mut w = Working::new(g);
    let mut scores = edge_betweenness(g).scores;
    let mut components = w.component_count();
    let mut cuts = Vec::new();
    let mut touched = vec![false; g.node_count()];

    while components < target {
        let Some(id) = strongest(&w.alive, &scores) else {
            break;
        };
        let e = g.edges()[id];
        cuts.push(Cut {
            u: e.u,
            v: e.v,
            score: scores[id],
        });
        w.alive[id] = false;
        scores[id] = 0.0;

        let mut affected = w.component(e.u);
        if !affected.contains(&e.v) {
            components += 1;
            affected.extend(w.component(e.v));
        }
        for &x in &affected {
            touched[x] = true;
        }
        for (eid, edge) in g.edges().iter().enumerate() {
            if w.alive[eid] && touched[edge.u] {
                scores[eid] = 0.0;
            }
        }
        for &root in &affected {
            w.accumulate(root, &mut scores);
        }
        for (eid, edge) in g.edges().iter().enumerate() {
            if w.alive[eid] && touched[edge.u] {
                scores[eid] *= 0.5;
            }
        }
        for &x in &affected {
            touched[x] = false;
        }
    }
    Ok(Division {
        partition: w.components(),
        cuts,
    })
}

/// Static variant: scores are computed once and edges are removed in
/// decreasing order of their initial score (ties by edge id) until there are
/// at least `target` components.
pub fn girvan_newman_static(g: &Graph, target: usize) -> Result<Division> {
    check_target(g, target)?;
    let scores = edge_betweenness(g).scores;
    let ranked = ranking(&scores);

    let mut w = Working::new(g);
    let mut components = w.component_count();
    let mut cuts = Vec::new();
    for id in ranked {
        if components >= target {
            break;
        }
        let e = g.edges()[id];
        w.alive[id] = false;
        cuts.push(Cut {
            u: e.u,
            v: e.v,
            score: scores[id],
        });
        if !w.component(e.u).contains(&e.v) {
            components += 1;
        }
    }
    Ok(Division {
        partition: w.components(),
        cuts,
    })
}

/// Cut sequence as a JSON list of `[u, v, score]` triples.
pub fn cuts_to_json(cuts: &[Cut]) -> String {
    serde_json::to_string_pretty(cuts).expect("cuts serialize")
}
