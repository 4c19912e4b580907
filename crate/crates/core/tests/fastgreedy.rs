mod common;

use commdetect::datasets::karate_club;
use commdetect::fastgreedy::{best_join, fastgreedy, init_fastgreedy, join, trace_to_json};
use commdetect::{modularity, Graph, Partition};
use commdetect_oracles as oracle;
use common::{family_suite, random_suite, weighted, Case};
use proptest::prelude::*;

const KARATE_BEST_Q: f64 = 0.3806706114398422;

fn small_graphs() -> Vec<Case> {
    let mut cases = random_suite(150, 10, 4040);
    cases.extend(family_suite().into_iter().filter(|c| c.n <= 10));
    cases.retain(|c| !c.edges.is_empty());
    cases
}

#[test]
fn join_sequence_matches_naive_greedy() {
    for case in small_graphs() {
        let out = fastgreedy(&case.graph()).unwrap();
        let expected = oracle::naive_greedy(case.n, &case.edges);
        let ours: Vec<_> = out.joins.clone();
        let theirs: Vec<_> = expected.iter().map(|j| (j.from, j.into)).collect();
        assert_eq!(ours, theirs, "{}", case.name);
        for (step, want) in out.trace.iter().zip(&expected) {
            assert!(
                (step.q - want.q).abs() < 1e-9,
                "{} step {}",
                case.name,
                step.step
            );
        }
    }
}

#[test]
fn store_matches_modularity_differences_at_every_step() {
    for case in small_graphs() {
        let g = case.graph();
        let (mut store, mut heap, mut a) = init_fastgreedy(&g).unwrap();
        let mut labels: Vec<usize> = (0..case.n).collect();
        let two_m = 2.0 * g.total_weight();
        loop {
            let q = oracle::modularity(case.n, &weighted(&case.edges), &labels);
            let stored = store.pairs();
            for &(i, j, dq) in &stored {
                let joined: Vec<usize> =
                    labels.iter().map(|&l| if l == i { j } else { l }).collect();
                let want = oracle::modularity(case.n, &weighted(&case.edges), &joined) - q;
                assert!((dq - want).abs() < 1e-12, "{} pair ({i},{j})", case.name);
            }
            // every connected pair of live communities is stored, nothing else
            let mut connected: Vec<(usize, usize)> = case
                .edges
                .iter()
                .map(|&(u, v)| (labels[u].min(labels[v]), labels[u].max(labels[v])))
                .filter(|(x, y)| x != y)
                .collect();
            connected.sort();
            connected.dedup();
            assert_eq!(
                stored.iter().map(|&(i, j, _)| (i, j)).collect::<Vec<_>>(),
                connected
            );

            let mut mass = 0.0;
            for c in store.live() {
                let k: usize = (0..case.n)
                    .filter(|&x| labels[x] == c)
                    .map(|x| g.degree(x))
                    .sum();
                assert!((a.get(c) - k as f64 / two_m).abs() < 1e-12);
                mass += a.get(c);
            }
            assert!((mass - 1.0).abs() < 1e-12);

            let top = stored
                .iter()
                .copied()
                .fold(None, |best: Option<(usize, usize, f64)>, p| match best {
                    Some(b) if b.2 >= p.2 => Some(b),
                    _ => Some(p),
                });
            let Some((i, j, dq)) = best_join(&store, &mut heap) else {
                assert!(top.is_none());
                break;
            };
            assert_eq!(Some((i, j, dq)), top, "{}", case.name);
            join(&mut store, &mut heap, &mut a, i, j).unwrap();
            for l in labels.iter_mut() {
                if *l == i {
                    *l = j;
                }
            }
        }
    }
}

#[test]
fn best_partition_scores_best_q() {
    for case in small_graphs() {
        let g = case.graph();
        let out = fastgreedy(&g).unwrap();
        assert!(
            (modularity(&g, &out.best).unwrap() - out.best_q).abs() < 1e-12,
            "{}",
            case.name
        );
        let peak = out.trace.iter().map(|s| s.q).fold(out.initial_q, f64::max);
        assert_eq!(out.best_q, peak);
        assert!(
            (out.initial_q - modularity(&g, &Partition::singletons(case.n)).unwrap()).abs() < 1e-12
        );
        assert_eq!(out.dendrogram.merges().len(), case.n - 1);
        assert_eq!(out.trace.last().unwrap().num_communities, 1);
        assert!(out.trace.last().unwrap().q.abs() < 1e-12);
    }
}

#[test]
fn karate_best_q_is_pinned() {
    let edges: Vec<_> = karate_club().edges().iter().map(|e| (e.u, e.v)).collect();
    let oracle_best = oracle::naive_greedy(34, &edges)
        .iter()
        .map(|j| j.q)
        .fold(f64::MIN, f64::max);
    assert!((oracle_best - KARATE_BEST_Q).abs() < 1e-12);

    let out = fastgreedy(&karate_club()).unwrap();
    assert!((out.best_q - KARATE_BEST_Q).abs() < 1e-9);
    assert_eq!(out.best.num_communities(), 3);
}

#[test]
fn single_edge_walkthrough() {
    let g = Graph::from_unweighted(2, &[(0, 1)]).unwrap();
    let (store, mut heap, _) = init_fastgreedy(&g).unwrap();
    assert_eq!(store.get(0, 1), Some(0.5));
    assert_eq!(best_join(&store, &mut heap), Some((0, 1, 0.5)));
    let out = fastgreedy(&g).unwrap();
    assert_eq!((out.initial_q, out.best_q), (-0.5, 0.0));
}

#[test]
fn trace_json_shape() {
    let out = fastgreedy(&karate_club()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&trace_to_json(&out.trace)).unwrap();
    let steps = v.as_array().unwrap();
    assert_eq!(steps.len(), 33);
    assert_eq!(steps[0]["step"], 1);
    assert_eq!(steps[0]["num_communities"], 33);
    assert!(steps[0]["q"].is_f64());
}

proptest! {
    #[test]
    fn running_q_tracks_modularity(n in 2usize..30, seed in any::<u64>()) {
        let edges = oracle::random_simple_graph(n, 0.2, seed);
        prop_assume!(!edges.is_empty());
        let g = Graph::from_unweighted(n, &edges).unwrap();
        let out = fastgreedy(&g).unwrap();
        let mut labels: Vec<usize> = (0..n).collect();
        for (&(i, j), step) in out.joins.iter().zip(&out.trace) {
            for l in labels.iter_mut() {
                if *l == i {
                    *l = j;
                }
            }
            let q = modularity(&g, &Partition::new(labels.clone())).unwrap();
            prop_assert!((q - step.q).abs() < 1e-9);
        }
    }
}
