#![allow(dead_code)]

use commdetect::Graph;
use commdetect_oracles::random_simple_graph;

pub struct Case {
    pub name: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Case {
    pub fn graph(&self) -> Graph {
        Graph::from_unweighted(self.n, &self.edges).unwrap()
    }

    /// Edges in the order the graph stores them.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        self.graph().edges().iter().map(|e| (e.u, e.v)).collect()
    }
}

pub fn path(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn star(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (0, i)).collect()
}

pub fn cycle(n: usize) -> Vec<(usize, usize)> {
    let mut e = path(n);
    e.push((0, n - 1));
    e
}

pub fn clique(offset: usize, size: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..size {
        for j in (i + 1)..size {
            e.push((offset + i, offset + j));
        }
    }
    e
}

/// Two cliques of `size` nodes joined by one edge.
pub fn bridged_cliques(size: usize) -> Vec<(usize, usize)> {
    let mut e = clique(0, size);
    e.extend(clique(size, size));
    e.push((size - 1, size));
    e
}

/// `count` random graphs with 2..=max_n nodes and p alternating 0.2 / 0.5.
pub fn random_suite(count: usize, max_n: usize, seed: u64) -> Vec<Case> {
    (0..count)
        .map(|k| {
            let n = 2 + k % (max_n - 1);
            let p = if k % 2 == 0 { 0.2 } else { 0.5 };
            let s = seed + k as u64;
            Case {
                name: format!("random n={n} p={p} seed={s}"),
                n,
                edges: random_simple_graph(n, p, s),
            }
        })
        .collect()
}

pub fn family_suite() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(Case {
            name: format!("path {n}"),
            n,
            edges: path(n),
        });
        out.push(Case {
            name: format!("star {n}"),
            n,
            edges: star(n),
        });
    }
    for n in 3..=12 {
        out.push(Case {
            name: format!("cycle {n}"),
            n,
            edges: cycle(n),
        });
    }
    for size in 2..=6 {
        out.push(Case {
            name: format!("bridged cliques {size}"),
            n: 2 * size,
            edges: bridged_cliques(size),
        });
    }
    out
}

/// Deterministic labels in `0..k` for `n` nodes.
pub fn random_labels(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut s = seed.wrapping_mul(0x2545_F491_4F6C_DD1D) | 1;
    (0..n)
        .map(|_| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s % k as u64) as usize
        })
        .collect()
}

pub fn weighted(edges: &[(usize, usize)]) -> Vec<(usize, usize, f64)> {
    edges.iter().map(|&(u, v)| (u, v, 1.0)).collect()
}
