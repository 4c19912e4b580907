//! Brute-force reference computations.
//!
//! Everything here works on plain edge lists and recomputes its answer from
//! scratch, so it shares no code path with the `commdetect` implementations
//! it is used to check. None of it is meant to be fast.

use std::collections::BTreeSet;

/// Modularity by the literal double sum over a dense adjacency matrix.
///
/// A self-loop of weight `w` contributes `2w` to its diagonal cell.
pub fn modularity(n: usize, edges: &[(usize, usize, f64)], labels: &[usize]) -> f64 {
    assert_eq!(labels.len(), n);
    let mut a = vec![vec![0.0f64; n]; n];
    for &(u, v, w) in edges {
        if u == v {
            a[u][u] += 2.0 * w;
        } else {
            a[u][v] += w;
            a[v][u] += w;
        }
    }
    let k: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let two_m: f64 = k.iter().sum();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                q += a[i][j] - k[i] * k[j] / two_m;
            }
        }
    }
    q / two_m
}

/// Convenience wrapper for unit-weight edge lists.
pub fn modularity_unweighted(n: usize, edges: &[(usize, usize)], labels: &[usize]) -> f64 {
    let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
    modularity(n, &weighted, labels)
}

fn adjacency_sets(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    adj
}

fn hop_distances(adj: &[BTreeSet<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut frontier = vec![source];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &x in &frontier {
            for &y in &adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(depth);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn enumerate_paths(
    adj: &[BTreeSet<usize>],
    dist_to_target: &[Option<usize>],
    at: usize,
    target: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if at == target {
        out.push(path.clone());
        return;
    }
    let here = dist_to_target[at].expect("walk stays inside the target's component");
    for &next in &adj[at] {
        if dist_to_target[next] == Some(here - 1) {
            path.push(next);
            enumerate_paths(adj, dist_to_target, next, target, path, out);
            path.pop();
        }
    }
}

/// Edge betweenness by listing every shortest path between every unordered
/// pair of nodes. Each pair hands out a total credit of one per hop position,
/// split evenly over its shortest paths. Scores are returned in the order of
/// `edges`, which must be simple (no self-loops, no duplicates).
pub fn edge_betweenness(n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    let adj = adjacency_sets(n, edges);
    let index_of = |a: usize, b: usize| {
        edges
            .iter()
            .position(|&(u, v)| (u == a && v == b) || (u == b && v == a))
            .expect("path edge exists")
    };
    let mut scores = vec![0.0; edges.len()];
    for t in 0..n {
        let dist_to_t = hop_distances(&adj, t);
        for s in 0..t {
            if dist_to_t[s].is_none() {
                continue;
            }
            let mut paths = Vec::new();
            enumerate_paths(&adj, &dist_to_t, s, t, &mut vec![s], &mut paths);
            let share = 1.0 / paths.len() as f64;
            for p in &paths {
                for hop in p.windows(2) {
                    scores[index_of(hop[0], hop[1])] += share;
                }
            }
        }
    }
    scores
}

/// Number of shortest paths from `root` to each node, by explicit path
/// enumeration. Unreachable nodes get zero.
pub fn shortest_path_counts(n: usize, edges: &[(usize, usize)], root: usize) -> Vec<usize> {
    let adj = adjacency_sets(n, edges);
    (0..n)
        .map(|t| {
            let dist_to_t = hop_distances(&adj, t);
            if dist_to_t[root].is_none() {
                return 0;
            }
            let mut paths = Vec::new();
            enumerate_paths(&adj, &dist_to_t, root, t, &mut vec![root], &mut paths);
            paths.len()
        })
        .collect()
}

/// Network-centric Euclidean distance `k_i + k_j - 2 n_ij`, computed from
/// explicit neighbor sets. With `self_neighboring`, every node is put into
/// its own neighbor set before counting.
pub fn euclidean_distances(
    n: usize,
    edges: &[(usize, usize)],
    self_neighboring: bool,
) -> Vec<Vec<f64>> {
    let mut sets = adjacency_sets(n, edges);
    if self_neighboring {
        for (i, s) in sets.iter_mut().enumerate() {
            s.insert(i);
        }
    }
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let shared = sets[i].intersection(&sets[j]).count();
                d[i][j] = (sets[i].len() + sets[j].len()) as f64 - 2.0 * shared as f64;
            }
        }
    }
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linkage {
    Single,
    Complete,
    Average,
}

/// One merge of the brute-force agglomeration: `(left, right, new, distance)`
/// with `left < right`.
pub type OracleMerge = (usize, usize, usize, f64);

/// Agglomerative clustering that rebuilds the whole cluster-distance table
/// from the node distances before every merge. Leaves are clusters
/// `0..n`, the k-th merge creates cluster `n + k`. Ties go to the smallest
/// `(min id, max id)` pair.
pub fn agglomerate(dist: &[Vec<f64>], linkage: Linkage) -> Vec<OracleMerge> {
    let n = dist.len();
    let mut clusters: Vec<(usize, Vec<usize>)> = (0..n).map(|i| (i, vec![i])).collect();
    let mut merges = Vec::new();
    let mut next_id = n;
    while clusters.len() > 1 {
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for x in 0..clusters.len() {
            for y in (x + 1)..clusters.len() {
                let (ida, a) = &clusters[x];
                let (idb, b) = &clusters[y];
                let mut values = Vec::new();
                for &p in a {
                    for &q in b {
                        values.push(dist[p][q]);
                    }
                }
                let value = match linkage {
                    Linkage::Single => values.iter().cloned().fold(f64::INFINITY, f64::min),
                    Linkage::Complete => values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                    Linkage::Average => values.iter().sum::<f64>() / values.len() as f64,
                };
                let (lo, hi) = ((*ida).min(*idb), (*ida).max(*idb));
                let better = match best {
                    None => true,
                    Some((bv, blo, bhi, _, _)) => {
                        value < bv || (value == bv && (lo, hi) < (blo, bhi))
                    }
                };
                if better {
                    best = Some((value, lo, hi, x, y));
                }
            }
        }
        let (value, lo, hi, x, y) = best.unwrap();
        let mut members = clusters[x].1.clone();
        members.extend(clusters[y].1.iter().copied());
        clusters.remove(y);
        clusters.remove(x);
        clusters.push((next_id, members));
        merges.push((lo, hi, next_id, value));
        next_id += 1;
    }
    merges
}

/// One join of the naive greedy modularity agglomeration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreedyJoin {
    /// Community that disappears.
    pub from: usize,
    /// Community that absorbs `from` and keeps its label.
    pub into: usize,
    /// Modularity of the partition after the join.
    pub q: f64,
}

/// Greedy modularity agglomeration on a dense community-by-community edge
/// count matrix, recomputing every candidate gain from the matrix before each
/// join. Gains are kept as exact integers scaled by `(2m)^2`.
///
/// Only pairs with at least one edge between them are joinable. The best
/// pair is the maximum gain, ties to the smallest `(i, j)` with `i < j`, and
/// `i` is joined into `j`. Once no connected pair is left, the remaining
/// communities are chained together in ascending label order.
pub fn naive_greedy(n: usize, edges: &[(usize, usize)]) -> Vec<GreedyJoin> {
    let mut e = vec![vec![0i64; n]; n];
    let mut k = vec![0i64; n];
    for &(u, v) in edges {
        assert_ne!(u, v);
        e[u][v] += 1;
        e[v][u] += 1;
        k[u] += 1;
        k[v] += 1;
    }
    let two_m: i64 = k.iter().sum();
    let mut alive = vec![true; n];
    let mut intra = vec![0i64; n];
    let q_of = |alive: &[bool], intra: &[i64], k: &[i64]| -> f64 {
        let scaled: i64 = (0..n)
            .filter(|&c| alive[c])
            .map(|c| 2 * intra[c] * two_m - k[c] * k[c])
            .sum();
        scaled as f64 / (two_m * two_m) as f64
    };
    let mut joins = Vec::new();
    let merge = |i: usize,
                 j: usize,
                 e: &mut Vec<Vec<i64>>,
                 k: &mut Vec<i64>,
                 alive: &mut Vec<bool>,
                 intra: &mut Vec<i64>| {
        intra[j] += intra[i] + e[i][j];
        for c in 0..n {
            if c != i && c != j {
                e[j][c] += e[i][c];
                e[c][j] = e[j][c];
            }
            e[i][c] = 0;
            e[c][i] = 0;
        }
        e[j][j] = 0;
        k[j] += k[i];
        k[i] = 0;
        alive[i] = false;
    };
    loop {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in 0..n {
            if !alive[i] {
                continue;
            }
            for j in (i + 1)..n {
                if !alive[j] || e[i][j] == 0 {
                    continue;
                }
                let gain = 2 * (two_m * e[i][j] - k[i] * k[j]);
                if best.is_none_or(|(g, _, _)| gain > g) {
                    best = Some((gain, i, j));
                }
            }
        }
        let Some((_, i, j)) = best else { break };
        merge(i, j, &mut e, &mut k, &mut alive, &mut intra);
        joins.push(GreedyJoin {
            from: i,
            into: j,
            q: q_of(&alive, &intra, &k),
        });
    }
    let rest: Vec<usize> = (0..n).filter(|&c| alive[c]).collect();
    for w in rest.windows(2) {
        merge(w[0], w[1], &mut e, &mut k, &mut alive, &mut intra);
        joins.push(GreedyJoin {
            from: w[0],
            into: w[1],
            q: q_of(&alive, &intra, &k),
        });
    }
    joins
}

/// Every set partition of `0..n` as a label vector (restricted growth
/// strings). Only sensible for small `n`.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(labels: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            grow(labels, n, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        grow(&mut Vec::new(), n, 0, &mut out);
    }
    out
}

/// Maximum modularity over all partitions, by exhaustive enumeration.
pub fn max_modularity(n: usize, edges: &[(usize, usize)]) -> (f64, Vec<usize>) {
    all_partitions(n)
        .into_iter()
        .map(|p| (modularity_unweighted(n, edges, &p), p))
        .fold((f64::NEG_INFINITY, Vec::new()), |best, cand| {
            if cand.0 > best.0 + 1e-12 {
                cand
            } else {
                best
            }
        })
}

/// Deterministic pseudo-random simple graph (xorshift; no external RNG) for
/// test suites that need many small graphs.
pub fn random_simple_graph(n: usize, p: f64, seed: u64) -> Vec<(usize, usize)> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if next() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}
