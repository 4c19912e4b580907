use std::fmt::Write;

use commdetect::io::{load_edge_list, read_edge_list, to_edge_list};
use commdetect::Graph;
use proptest::prelude::*;

proptest! {
    #[test]
    fn edge_list_round_trip(
        n in 1usize..30,
        raw in prop::collection::vec((0usize..30, 0usize..30, prop_oneof![Just(1.0f64), 0.25f64..8.0]), 0..60),
    ) {
        let mut seen = std::collections::HashSet::new();
        let edges: Vec<_> = raw
            .into_iter()
            .map(|(u, v, w)| (u % n, v % n, w))
            .filter(|&(u, v, _)| seen.insert((u.min(v), u.max(v))))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let back = load_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn million_edge_file_loads() {
    let n = 200_000;
    let mut text = String::with_capacity(16 << 20);
    let mut count = 0;
    'outer: for stride in 1..n {
        for u in 0..n {
            writeln!(text, "{u} {}", (u + stride) % n).unwrap();
            count += 1;
            if count == 1_000_000 {
                break 'outer;
            }
        }
    }
    let g = read_edge_list(text.as_bytes()).unwrap();
    assert_eq!(g.edge_count(), 1_000_000);
    assert_eq!(g.node_count(), n);
}
