mod common;

use commdetect::datasets::karate_club;
use commdetect::girvan_newman::{bfs_tree, edge_betweenness, girvan_newman, girvan_newman_static};
use commdetect::{connected_components, Graph};
use commdetect_oracles as oracle;
use common::{family_suite, random_suite, Case};
use proptest::prelude::*;

fn test_graphs() -> Vec<Case> {
    let mut cases = random_suite(100, 12, 900);
    cases.extend(family_suite());
    cases
}

#[test]
fn betweenness_matches_path_enumeration() {
    for case in test_graphs() {
        let g = case.graph();
        let edges = case.sorted_edges();
        let expected = oracle::edge_betweenness(case.n, &edges);
        let ours = edge_betweenness(&g);
        for (k, (&want, &got)) in expected.iter().zip(ours.as_slice()).enumerate() {
            assert!(
                (want - got).abs() < 1e-9,
                "{} edge {:?}: {got} vs {want}",
                case.name,
                edges[k]
            );
        }
    }
}

#[test]
fn path_counts_match_enumeration() {
    for case in random_suite(40, 10, 5) {
        let g = case.graph();
        for root in 0..case.n {
            let tree = bfs_tree(&g, root).unwrap();
            let expected = oracle::shortest_path_counts(case.n, &case.edges, root);
            let got: Vec<usize> = tree.paths.iter().map(|&p| p as usize).collect();
            assert_eq!(got, expected, "{} root {root}", case.name);
        }
    }
}

/// Removes the top edge by brute-force betweenness of the remaining graph,
/// ties to the lowest edge id.
fn reference_cuts(case: &Case, target: usize) -> Vec<(usize, usize)> {
    let mut edges = case.sorted_edges();
    let mut cuts = Vec::new();
    loop {
        let g = Graph::from_unweighted(case.n, &edges).unwrap();
        if connected_components(&g).num_communities() >= target || edges.is_empty() {
            return cuts;
        }
        let scores = oracle::edge_betweenness(case.n, &edges);
        let top = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let id = scores.iter().position(|&s| s > top - 1e-9).unwrap();
        cuts.push(edges.remove(id));
    }
}

#[test]
fn iterative_division_matches_full_recompute() {
    for case in test_graphs() {
        let g = case.graph();
        for target in [2, case.n.div_ceil(2), case.n] {
            let ours: Vec<_> = girvan_newman(&g, target)
                .unwrap()
                .cuts
                .iter()
                .map(|c| (c.u, c.v))
                .collect();
            assert_eq!(
                ours,
                reference_cuts(&case, target),
                "{} target {target}",
                case.name
            );
        }
    }
}

#[test]
fn static_first_cut_matches_iterative() {
    for case in test_graphs() {
        let g = case.graph();
        if g.edge_count() == 0 {
            continue;
        }
        let target = connected_components(&g).num_communities() + 1;
        let a = girvan_newman(&g, target).unwrap();
        let b = girvan_newman_static(&g, target).unwrap();
        assert_eq!(a.cuts.first(), b.cuts.first(), "{}", case.name);
    }
}

#[test]
fn karate_eight_communities() {
    let g = karate_club();
    let d = girvan_newman(&g, 8).unwrap();
    assert_eq!(d.partition.num_communities(), 8);
    let s = girvan_newman_static(&g, 8).unwrap();
    assert_eq!(s.partition.num_communities(), 8);
    assert_eq!((d.cuts[0].u, d.cuts[0].v), (0, 31));
}

#[test]
fn target_out_of_range() {
    let g = karate_club();
    assert!(girvan_newman(&g, 0).is_err());
    assert!(girvan_newman(&g, 35).is_err());
    assert_eq!(
        girvan_newman(&g, 34).unwrap().partition.num_communities(),
        34
    );
}

/// Random tree on `n` nodes: node i attaches to a parent below it.
fn tree(n: usize, parents: &[usize]) -> Vec<(usize, usize)> {
    (1..n).map(|i| (parents[i - 1] % i, i)).collect()
}

proptest! {
    #[test]
    fn tree_edges_score_side_products(n in 2usize..40, parents in prop::collection::vec(any::<usize>(), 39)) {
        let edges = tree(n, &parents);
        let g = Graph::from_unweighted(n, &edges).unwrap();
        let scores = edge_betweenness(&g);
        for (k, e) in g.edges().iter().enumerate() {
            let mut removed = std::collections::HashSet::new();
            removed.insert(k);
            let split = connected_components(&g.without_edges(&removed));
            let side = (0..n).filter(|&x| split.label(x) == split.label(e.u)).count();
            prop_assert!((scores.as_slice()[k] - (side * (n - side)) as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn division_reaches_target(n in 2usize..25, seed in any::<u64>(), t in 1usize..25) {
        let g = Graph::from_unweighted(n, &oracle::random_simple_graph(n, 0.25, seed)).unwrap();
        let target = t.min(n);
        for d in [girvan_newman(&g, target).unwrap(), girvan_newman_static(&g, target).unwrap()] {
            let k = d.partition.num_communities();
            prop_assert!(k >= target);
            // one cut splits at most one component in two
            prop_assert!(k == target || k == connected_components(&g).num_communities());
        }
    }
}
