use crate::partition::modularity_dense;
use crate::unionfind::UnionFind;
use crate::{Error, Graph, NodeId, Partition, Result};

/// Marker for a node that has been taken out of every community.
const DETACHED: usize = usize::MAX;

/// Moves are applied only when their gain exceeds this.
pub(crate) const MIN_GAIN: f64 = 1e-12;

/// Per-community sums driving Louvain's incremental gains.
///
/// Community ids live in `0..node_count`. `sigma_in[c]` is
/// `Σ_{i,j in c} A_ij` (twice the internal edge weight, self-loops counted
/// twice as well) and `sigma_tot[c]` is the weighted degree sum of the
/// members, so `Σ_c sigma_tot[c] = 2m` while every node is attached.
#[derive(Clone, Debug, PartialEq)]
pub struct CommunityState {
    assignment: Vec<usize>,
    sigma_in: Vec<f64>,
    sigma_tot: Vec<f64>,
    k: Vec<f64>,
    self_loop: Vec<f64>,
    m: f64,
}

impl CommunityState {
    /// Every node in its own community `i`.
    pub fn singletons(g: &Graph) -> Result<Self> {
        Self::from_community_ids(g, (0..g.node_count()).collect())
    }

    /// State for an arbitrary partition of `g`'s nodes.
    pub fn from_partition(g: &Graph, p: &Partition) -> Result<Self> {
        if p.len() != g.node_count() {
            return Err(Error::PartitionSize {
                expected: g.node_count(),
                got: p.len(),
            });
        }
        Self::from_community_ids(g, p.canonical().labels().to_vec())
    }

    /// `ids[i]` must be `< node_count`; it is used as the community id as is.
    pub(crate) fn from_community_ids(g: &Graph, ids: Vec<usize>) -> Result<Self> {
        if g.total_weight() <= 0.0 {
            return Err(Error::NoEdges);
        }
        let n = g.node_count();
        debug_assert!(ids.iter().all(|&c| c < n));
        let k = g.degrees().to_vec();
        let self_loop: Vec<f64> = (0..n).map(|i| g.self_loop(i)).collect();
        let mut sigma_in = vec![0.0; n];
        let mut sigma_tot = vec![0.0; n];
        for i in 0..n {
            sigma_tot[ids[i]] += k[i];
        }
        for e in g.edges() {
            if ids[e.u] == ids[e.v] {
                sigma_in[ids[e.u]] += 2.0 * e.weight;
            }
        }
        Ok(CommunityState {
            assignment: ids,
            sigma_in,
            sigma_tot,
            k,
            self_loop,
            m: g.total_weight(),
        })
    }

    /// Community of `i`, or `None` while it is detached.
    pub fn community_of(&self, i: NodeId) -> Option<usize> {
        Some(self.assignment[i]).filter(|&c| c != DETACHED)
    }

    pub fn sigma_in(&self, c: usize) -> f64 {
        self.sigma_in[c]
    }

    pub fn sigma_tot(&self, c: usize) -> f64 {
        self.sigma_tot[c]
    }

    pub fn degree(&self, i: NodeId) -> f64 {
        self.k[i]
    }

    pub fn total_weight(&self) -> f64 {
        self.m
    }

    /// `k_{i,in}`: weight of the edges from `i` to attached members of `c`,
    /// not counting a self-loop on `i`.
    pub fn weight_to(&self, g: &Graph, i: NodeId, c: usize) -> f64 {
        g.neighbors(i)
            .iter()
            .filter(|&&(j, _)| j != i && self.assignment[j] == c)
            .map(|&(_, w)| w)
            .sum()
    }

    /// Gain of inserting `i` into `c`, treating `i` as an isolated community:
    ///
    /// `[(Σ_in + 2k_{i,in})/2m - ((Σ_tot + k_i)/2m)^2] - [Σ_in/2m - (Σ_tot/2m)^2 - (k_i/2m)^2]`,
    /// which reduces to `k_{i,in}/m - Σ_tot k_i / 2m^2`.
    ///
    /// This is exact only when `i` really is detached. Called on a node that
    /// still sits in `c`, it is the insertion-only estimate that ignores the
    /// cost of leaving `c`.
    pub fn delta_q_insert(&self, g: &Graph, i: NodeId, c: usize) -> f64 {
        insertion_gain(
            self.weight_to(g, i, c),
            self.sigma_tot[c],
            self.k[i],
            self.m,
        )
    }

    /// Exact modularity change of moving `i` from its community to `c`: the
    /// gain of inserting into `c` minus the gain of re-inserting into the old
    /// community, both evaluated with `i` removed. Zero for `c` equal to the
    /// current community.
    pub fn move_gain(&self, g: &Graph, i: NodeId, c: usize) -> f64 {
        let old = self.assignment[i];
        assert_ne!(old, DETACHED, "node {i} is detached");
        if c == old {
            return 0.0;
        }
        let back = insertion_gain(
            self.weight_to(g, i, old),
            self.sigma_tot[old] - self.k[i],
            self.k[i],
            self.m,
        );
        let there = insertion_gain(
            self.weight_to(g, i, c),
            self.sigma_tot[c],
            self.k[i],
            self.m,
        );
        there - back
    }

    /// Takes `i` out of its community.
    pub fn remove(&mut self, g: &Graph, i: NodeId) {
        let c = self.assignment[i];
        assert_ne!(c, DETACHED, "node {i} already detached");
        let link = self.weight_to(g, i, c);
        self.detach(i, link);
    }

    /// Puts a detached `i` into `c`.
    pub fn insert(&mut self, g: &Graph, i: NodeId, c: usize) {
        let link = self.weight_to(g, i, c);
        self.attach(i, c, link);
    }

    fn detach(&mut self, i: NodeId, link: f64) {
        let c = self.assignment[i];
        self.sigma_tot[c] -= self.k[i];
        self.sigma_in[c] -= 2.0 * link + 2.0 * self.self_loop[i];
        self.assignment[i] = DETACHED;
    }

    fn attach(&mut self, i: NodeId, c: usize, link: f64) {
        assert_eq!(self.assignment[i], DETACHED, "node {i} is still attached");
        self.sigma_tot[c] += self.k[i];
        self.sigma_in[c] += 2.0 * link + 2.0 * self.self_loop[i];
        self.assignment[i] = c;
    }

    /// `Σ_c [Σ_in/2m - (Σ_tot/2m)^2]` over the current sums.
    pub fn modularity(&self) -> f64 {
        let two_m = 2.0 * self.m;
        self.sigma_in
            .iter()
            .zip(&self.sigma_tot)
            .map(|(&inside, &tot)| inside / two_m - (tot / two_m).powi(2))
            .sum()
    }

    /// Current assignment. Panics if a node is detached.
    pub fn partition(&self) -> Partition {
        assert!(
            self.assignment.iter().all(|&c| c != DETACHED),
            "partition with detached nodes"
        );
        Partition::new(self.assignment.clone())
    }
}

fn insertion_gain(link: f64, sigma_tot: f64, k: f64, m: f64) -> f64 {
    link / m - sigma_tot * k / (2.0 * m * m)
}

/// How a local-move pass scores a candidate community.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GainRule {
    /// Remove-then-insert with the incremental formula.
    Incremental,
    /// Recompute the modularity of the whole graph for every candidate.
    Total,
}

/// Sparse accumulator for `i`'s edge weight per neighboring community.
#[derive(Debug, Default)]
pub(crate) struct Links {
    weight: Vec<f64>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl Links {
    pub(crate) fn new(n: usize) -> Self {
        Links {
            weight: vec![0.0; n],
            seen: vec![false; n],
            touched: Vec::new(),
        }
    }

    /// Fills in weights from `i` to every community adjacent to it, plus its
    /// own community (possibly at weight zero). Candidates end up sorted.
    fn gather(&mut self, g: &Graph, state: &CommunityState, i: NodeId) {
        for &c in &self.touched {
            self.weight[c] = 0.0;
            self.seen[c] = false;
        }
        self.touched.clear();
        let own = state.assignment[i];
        self.seen[own] = true;
        self.touched.push(own);
        for &(j, w) in g.neighbors(i) {
            if j == i {
                continue;
            }
            let c = state.assignment[j];
            if !self.seen[c] {
                self.seen[c] = true;
                self.touched.push(c);
            }
            self.weight[c] += w;
        }
        self.touched.sort_unstable();
    }
}

/// One sweep over `order`: every node is removed, scored against each
/// neighboring community and its own, and reinserted into the best one.
/// Returns whether any node changed community.
///
/// A candidate must beat the best so far by more than `1e-12`, so a node only
/// leaves its community for a real gain and near-ties go to the lowest
/// community id.
pub fn local_move_pass(
    g: &Graph,
    state: &mut CommunityState,
    order: &[NodeId],
    rule: GainRule,
) -> bool {
    let mut links = Links::new(g.node_count());
    let mut labels = match rule {
        GainRule::Total => state.assignment.clone(),
        GainRule::Incremental => Vec::new(),
    };
    let mut improved = false;
    for &i in order {
        links.gather(g, state, i);
        let old = state.assignment[i];
        let mut best = old;
        let mut best_gain = 0.0;
        match rule {
            GainRule::Incremental => {
                state.detach(i, links.weight[old]);
                let base =
                    insertion_gain(links.weight[old], state.sigma_tot[old], state.k[i], state.m);
                for &c in &links.touched {
                    if c == old {
                        continue;
                    }
                    let gain =
                        insertion_gain(links.weight[c], state.sigma_tot[c], state.k[i], state.m)
                            - base;
                    if gain > best_gain + MIN_GAIN {
                        best = c;
                        best_gain = gain;
                    }
                }
                state.attach(i, best, links.weight[best]);
            }
            GainRule::Total => {
                let n = g.node_count();
                let current = modularity_dense(g, &labels, n);
                for &c in &links.touched {
                    if c == old {
                        continue;
                    }
                    labels[i] = c;
                    let gain = modularity_dense(g, &labels, n) - current;
                    if gain > best_gain + MIN_GAIN {
                        best = c;
                        best_gain = gain;
                    }
                }
                labels[i] = best;
                if best != old {
                    state.detach(i, links.weight[old]);
                    state.attach(i, best, links.weight[best]);
                }
            }
        }
        improved |= best != old;
    }
    improved
}

/// Synchronous pass with chained assignments.
///
/// Every node picks its best community against the state at the start of
/// the pass. Community ids are node ids (a community is named after one of
/// its members), so a node choosing community `c` is united with node `c`,
/// and a chain like `1 -> c2, 2 -> c3, 3 -> c4` collapses into one community.
/// The result does not depend on any iteration order. The pass is kept only
/// if it raises modularity; returns whether it was kept.
pub fn chained_move_pass(g: &Graph, state: &mut CommunityState) -> bool {
    let n = g.node_count();
    let mut links = Links::new(n);
    let mut target = state.assignment.clone();
    let mut any = false;
    for i in 0..n {
        links.gather(g, state, i);
        let old = state.assignment[i];
        let base = insertion_gain(
            links.weight[old],
            state.sigma_tot[old] - state.k[i],
            state.k[i],
            state.m,
        );
        let mut best_gain = 0.0;
        for &c in &links.touched {
            if c == old {
                continue;
            }
            let gain =
                insertion_gain(links.weight[c], state.sigma_tot[c], state.k[i], state.m) - base;
            if gain > best_gain + MIN_GAIN {
                target[i] = c;
                best_gain = gain;
            }
        }
        any |= target[i] != old;
    }
    if !any {
        return false;
    }
    let mut uf = UnionFind::new(n);
    for (i, &t) in target.iter().enumerate() {
        uf.union(i, t);
    }
    let next = CommunityState::from_community_ids(g, uf.roots()).expect("graph has edges");
    if next.modularity() > state.modularity() + MIN_GAIN {
        *state = next;
        true
    } else {
        false
    }
}
