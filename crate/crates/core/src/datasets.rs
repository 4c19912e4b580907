//! Built-in graphs: Zachary's karate club and seeded Erdős–Rényi graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, Result};

/// Friendships among the 34 club members, 0-indexed (member `k` is node
/// `k - 1`). This is the commonly distributed 78-edge version.
const KARATE_EDGES: [(usize, usize); 78] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 10),
    (0, 11),
    (0, 12),
    (0, 13),
    (0, 17),
    (0, 19),
    (0, 21),
    (0, 31),
    (1, 2),
    (1, 3),
    (1, 7),
    (1, 13),
    (1, 17),
    (1, 19),
    (1, 21),
    (1, 30),
    (2, 3),
    (2, 7),
    (2, 8),
    (2, 9),
    (2, 13),
    (2, 27),
    (2, 28),
    (2, 32),
    (3, 7),
    (3, 12),
    (3, 13),
    (4, 6),
    (4, 10),
    (5, 6),
    (5, 10),
    (5, 16),
    (6, 16),
    (8, 30),
    (8, 32),
    (8, 33),
    (9, 33),
    (13, 33),
    (14, 32),
    (14, 33),
    (15, 32),
    (15, 33),
    (18, 32),
    (18, 33),
    (19, 33),
    (20, 32),
    (20, 33),
    (22, 32),
    (22, 33),
    (23, 25),
    (23, 27),
    (23, 29),
    (23, 32),
    (23, 33),
    (24, 25),
    (24, 27),
    (24, 31),
    (25, 31),
    (26, 29),
    (26, 33),
    (27, 33),
    (28, 31),
    (28, 33),
    (29, 32),
    (29, 33),
    (30, 32),
    (30, 33),
    (31, 32),
    (31, 33),
    (32, 33),
];

/// Zachary's karate club: 34 nodes, 78 unit-weight edges.
pub fn karate_club() -> Graph {
    Graph::from_unweighted(34, &KARATE_EDGES).expect("fixture is a valid graph")
}

/// G(n, p) random graph. The same `(n, p, seed)` always yields the same
/// graph, on every platform.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_unweighted(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karate_shape() {
        let g = karate_club();
        assert_eq!(g.node_count(), 34);
        assert_eq!(g.total_weight(), 78.0);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_self_loops());
        // instructor and administrator are the two hubs
        assert_eq!(g.degree(0), 16);
        assert_eq!(g.degree(33), 17);
    }

    #[test]
    fn random_graph_extremes() {
        let g = random_graph(5, 0.0, 3).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (5, 0));
        let g = random_graph(4, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn random_graph_is_seed_deterministic() {
        let a = random_graph(30, 0.2, 11).unwrap();
        let b = random_graph(30, 0.2, 11).unwrap();
        assert_eq!(a, b);
        let c = random_graph(30, 0.2, 12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_graph_rejects_bad_probability() {
        assert!(random_graph(3, 1.5, 0).is_err());
        assert!(random_graph(3, -0.1, 0).is_err());
        assert!(random_graph(3, f64::NAN, 0).is_err());
    }
}
