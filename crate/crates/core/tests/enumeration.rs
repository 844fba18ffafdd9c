use std::collections::HashSet;

use spack_core::census::{enumerate_connected, enumerate_connected_up_to};
use spack_core::graph::{canonical_form, to_graph6, Graph};

const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Every labelled graph on `n` vertices, deduplicated by canonical form.
fn brute_force_connected(n: usize) -> HashSet<String> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.insert(canonical_form(&g).as_str().to_string());
        }
    }
    out
}

#[test]
fn counts_through_order_eight() {
    let levels = enumerate_connected_up_to(8).unwrap();
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(counts, CONNECTED_COUNTS);
    assert_eq!(counts.iter().sum::<usize>(), 12113);
    for level in &levels {
        let labels: HashSet<_> = level.iter().map(canonical_form).collect();
        assert_eq!(labels.len(), level.len());
        assert!(level.iter().all(Graph::is_connected));
    }
}

#[test]
fn matches_brute_force_through_order_six() {
    for n in 1..=6 {
        let generated: HashSet<String> = enumerate_connected(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).as_str().to_string())
            .collect();
        assert_eq!(generated, brute_force_connected(n), "order {n}");
    }
}

#[test]
fn output_is_deterministic() {
    let a: Vec<String> = enumerate_connected(6)
        .unwrap()
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    let b: Vec<String> = enumerate_connected(6)
        .unwrap()
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    assert_eq!(a, b);
}
