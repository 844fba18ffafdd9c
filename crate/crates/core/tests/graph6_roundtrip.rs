use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spack_core::census::enumerate_connected_up_to;
use spack_core::graph::{parse_graph6, to_graph6, Graph};

/// Straightforward decoder written from the format description, used as the
/// reference: one size byte `63 + n`, then the upper triangle column by
/// column, six bits per byte, most significant first.
fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
    let b = s.as_bytes();
    let n = (b[0] - 63) as usize;
    let mut bits = Vec::new();
    for &c in &b[1..] {
        let v = c - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1);
        }
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    (n, edges)
}

fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let e: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &e).unwrap()
    })
}

#[test]
fn every_labelled_graph_up_to_five_round_trips() {
    for n in 0..=5 {
        for g in all_labelled(n) {
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g, "{s}");
        }
    }
}

#[test]
fn every_connected_graph_up_to_seven_round_trips() {
    for level in enumerate_connected_up_to(7).unwrap() {
        for g in level {
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}

#[test]
fn agrees_with_reference_decoder_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=40);
        let p: f64 = rng.gen();
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let s = to_graph6(&g).unwrap();
        let (rn, mut re) = reference_decode(&s);
        re.sort();
        assert_eq!(rn, n);
        assert_eq!(re, g.edges().collect::<Vec<_>>());
    }
}
