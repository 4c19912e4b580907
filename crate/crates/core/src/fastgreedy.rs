//! Greedy modularity agglomeration over a sparse gain store.
//!
//! Three structures evolve together:
//!
//! * [`DeltaQStore`]: one hash row per live community holding `ΔQ_ij` for
//!   every community `j` it shares an edge with. Pairs without an edge are
//!   never stored.
//! * [`GlobalHeap`]: a single max-heap over every stored pair. Entries are
//!   stamped with the row versions they were computed from; when a row
//!   changes, its entries go stale and are dropped the next time they reach
//!   the top.
//! * [`AArray`]: `a_i = k_i / 2m`, the degree share of each community.
//!
//! Gains are held internally in units of `1/(2m)^2`, where the initial value
//! of a connected pair is `2 (2m w_ij - k_i k_j)`. On integer-weighted graphs
//! every stored value is then an exact integer, so equal gains compare equal
//! and tie-breaking is reproducible.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::dendrogram::Dendrogram;
use crate::unionfind::UnionFind;
use crate::{Error, Graph, Partition, Result};

/// Sparse symmetric table of join gains between connected live communities.
#[derive(Clone, Debug)]
pub struct DeltaQStore {
    rows: Vec<HashMap<usize, f64>>,
    alive: Vec<bool>,
    // 1 / (2m)^2
    unit: f64,
}

impl DeltaQStore {
    /// Gain of joining `i` and `j`, if both are alive and connected.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.rows.get(i)?.get(&j).map(|s| s * self.unit)
    }

    pub fn is_alive(&self, c: usize) -> bool {
        self.alive.get(c).copied().unwrap_or(false)
    }

    pub fn live(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(c, _)| c)
    }

    /// Neighbors of `c` with their gains, in no particular order.
    pub fn row(&self, c: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.rows[c].iter().map(move |(&k, &s)| (k, s * self.unit))
    }

    /// Every stored pair once, as `(i, j, gain)` with `i < j`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize, f64)> {
        let mut out: Vec<_> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .filter(move |(&j, _)| i < j)
                    .map(move |(&j, &s)| (i, j, s * self.unit))
            })
            .collect();
        out.sort_by_key(|&(i, j, _)| (i, j));
        out
    }

    fn scaled(&self, i: usize, j: usize) -> Option<f64> {
        self.rows[i].get(&j).copied()
    }
}

/// Degree share `a_c = k_c / 2m` of every community.
#[derive(Clone, Debug)]
pub struct AArray {
    // k_c, in the same units as the store: a_c = mass_c / 2m
    mass: Vec<f64>,
    two_m: f64,
}

impl AArray {
    pub fn get(&self, c: usize) -> f64 {
        self.mass[c] / self.two_m
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mass.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
struct HeapEntry {
    gain: f64,
    i: usize,
    j: usize,
    stamp_i: u64,
    stamp_j: u64,
}

impl Ord for HeapEntry {
    // larger gain first, then smaller (i, j)
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .total_cmp(&other.gain)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

/// One max-heap over all stored pairs, pruned lazily.
#[derive(Clone, Debug)]
pub struct GlobalHeap {
    heap: BinaryHeap<HeapEntry>,
    version: Vec<u64>,
}

impl GlobalHeap {
    fn push(&mut self, gain: f64, a: usize, b: usize) {
        let (i, j) = (a.min(b), a.max(b));
        self.heap.push(HeapEntry {
            gain,
            i,
            j,
            stamp_i: self.version[i],
            stamp_j: self.version[j],
        });
    }

    fn is_current(&self, store: &DeltaQStore, e: &HeapEntry) -> bool {
        store.alive[e.i]
            && store.alive[e.j]
            && self.version[e.i] == e.stamp_i
            && self.version[e.j] == e.stamp_j
    }

    /// Entries currently held, stale ones included.
    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }
}

/// Singleton communities with the gains of every connected pair.
pub fn init_fastgreedy(g: &Graph) -> Result<(DeltaQStore, GlobalHeap, AArray)> {
    g.require_simple()?;
    if g.total_weight() <= 0.0 {
        return Err(Error::NoEdges);
    }
    let n = g.node_count();
    let two_m = 2.0 * g.total_weight();
    let mass: Vec<f64> = g.degrees().to_vec();
    let mut store = DeltaQStore {
        rows: vec![HashMap::new(); n],
        alive: vec![true; n],
        unit: 1.0 / (two_m * two_m),
    };
    let mut heap = GlobalHeap {
        heap: BinaryHeap::new(),
        version: vec![0; n],
    };
    for e in g.edges() {
        let gain = 2.0 * (two_m * e.weight - mass[e.u] * mass[e.v]);
        store.rows[e.u].insert(e.v, gain);
        store.rows[e.v].insert(e.u, gain);
        heap.push(gain, e.u, e.v);
    }
    Ok((store, heap, AArray { mass, two_m }))
}

/// Best joinable pair `(i, j, gain)` with `i < j`: the largest gain, ties to
/// the smallest `(i, j)`. Stale heap entries met on the way are discarded.
/// `None` when no live pair shares an edge.
pub fn best_join(store: &DeltaQStore, heap: &mut GlobalHeap) -> Option<(usize, usize, f64)> {
    while let Some(top) = heap.heap.peek() {
        if heap.is_current(store, top) {
            return Some((top.i, top.j, top.gain * store.unit));
        }
        heap.heap.pop();
    }
    None
}

/// Joins community `i` into `j`; the result keeps the label `j` and row `i`
/// is retired. For every other community `k` adjacent to either:
///
/// * adjacent to both: `ΔQ'_jk = ΔQ_ik + ΔQ_jk`
/// * adjacent to `i` only: `ΔQ'_jk = ΔQ_ik - 2 a_j a_k`
/// * adjacent to `j` only: `ΔQ'_jk = ΔQ_jk - 2 a_i a_k`
///
/// Returns the gain of this join. Unconnected live communities may also be
/// joined (gain `-2 a_i a_j`), which [`fastgreedy`] uses to finish
/// disconnected graphs.
pub fn join(
    store: &mut DeltaQStore,
    heap: &mut GlobalHeap,
    a: &mut AArray,
    i: usize,
    j: usize,
) -> Result<f64> {
    for c in [i, j] {
        if !store.is_alive(c) {
            return Err(Error::DeadCommunity(c));
        }
    }
    if i == j {
        return Err(Error::InvalidParameter(format!(
            "cannot join community {i} with itself"
        )));
    }
    let gain = store.scaled(i, j).unwrap_or(-2.0 * a.mass[i] * a.mass[j]);

    let row_i = std::mem::take(&mut store.rows[i]);
    let mut row_j = std::mem::take(&mut store.rows[j]);
    row_j.remove(&i);
    for (&k, &ik) in &row_i {
        if k == j {
            continue;
        }
        let updated = match row_j.get(&k) {
            Some(&jk) => ik + jk,
            None => ik - 2.0 * a.mass[j] * a.mass[k],
        };
        row_j.insert(k, updated);
    }
    for (&k, jk) in row_j.iter_mut() {
        if !row_i.contains_key(&k) {
            *jk -= 2.0 * a.mass[i] * a.mass[k];
        }
    }
    for &k in row_i.keys() {
        store.rows[k].remove(&i);
    }
    heap.version[j] += 1;
    for (&k, &jk) in &row_j {
        store.rows[k].insert(j, jk);
        heap.push(jk, j, k);
    }
    store.rows[j] = row_j;
    store.alive[i] = false;
    a.mass[j] += a.mass[i];
    a.mass[i] = 0.0;
    Ok(gain * store.unit)
}

/// Modularity after one step of the agglomeration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub q: f64,
    pub num_communities: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FastGreedyOutcome {
    /// One merge per join; `merge_distance` holds the join's modularity gain.
    pub dendrogram: Dendrogram,
    /// Joins as `(absorbed, absorbing)` community labels.
    pub joins: Vec<(usize, usize)>,
    pub initial_q: f64,
    /// One entry per join.
    pub trace: Vec<TraceStep>,
    pub best: Partition,
    pub best_q: f64,
}

/// Runs the agglomeration to a single community and reports the partition
/// with the highest modularity seen along the way (earliest on ties).
///
/// Once no live pair shares an edge, the remaining communities are joined in
/// ascending label order so the dendrogram is always complete.
pub fn fastgreedy(g: &Graph) -> Result<FastGreedyOutcome> {
    let (mut store, mut heap, mut a) = init_fastgreedy(g)?;
    let n = g.node_count();
    let unit = store.unit;

    let mut running: f64 = -a.mass.iter().map(|k| k * k).sum::<f64>();
    let initial_q = running * unit;
    let mut best_scaled = running;
    let mut best_step = 0;

    let mut dendrogram = Dendrogram::with_leaves(n);
    let mut cluster_of: Vec<usize> = (0..n).collect();
    let mut joins = Vec::with_capacity(n.saturating_sub(1));
    let mut trace = Vec::with_capacity(n.saturating_sub(1));

    let mut record =
        |i: usize, j: usize, scaled: f64, joins: &mut Vec<(usize, usize)>, running: &mut f64| {
            *running += scaled;
            cluster_of[j] = dendrogram.push(cluster_of[i], cluster_of[j], scaled * unit);
            joins.push((i, j));
            trace.push(TraceStep {
                step: joins.len(),
                q: *running * unit,
                num_communities: n - joins.len(),
            });
            if *running > best_scaled {
                best_scaled = *running;
                best_step = joins.len();
            }
        };

    while let Some((i, j, _)) = best_join(&store, &mut heap) {
        let gain = join(&mut store, &mut heap, &mut a, i, j)?;
        record(i, j, gain / unit, &mut joins, &mut running);
    }
    let rest: Vec<usize> = store.live().collect();
    for w in rest.windows(2) {
        let gain = join(&mut store, &mut heap, &mut a, w[0], w[1])?;
        record(w[0], w[1], gain / unit, &mut joins, &mut running);
    }

    let mut uf = UnionFind::new(n);
    for &(i, j) in &joins[..best_step] {
        uf.union(i, j);
    }
    let best = Partition::new(uf.roots()).canonical();
    Ok(FastGreedyOutcome {
        dendrogram,
        joins,
        initial_q,
        trace,
        best,
        best_q: best_scaled * unit,
    })
}

/// Trace as a JSON list of `{step, q, num_communities}` objects.
pub fn trace_to_json(trace: &[TraceStep]) -> String {
    serde_json::to_string_pretty(trace).expect("trace serializes")
}
