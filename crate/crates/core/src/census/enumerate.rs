//! Isomorph-free generation of connected graphs by canonical deletion.
//!
//! Every connected graph of order `m + 1` arises from a connected graph of
//! order `m` by adding a vertex adjacent to a non-empty set. A child is
//! accepted only when the new vertex lies in the orbit of the child's
//! distinguished vertex: the non-cut vertex of largest degree, ties broken
//! by canonical position. Two accepted children of one parent are
//! isomorphic only if their neighbor sets are equivalent under the
//! parent's automorphisms, so deduplication stays local to each parent.

use std::collections::HashSet;

use rayon::prelude::*;

use super::CensusError;
use crate::graph::{canonical_form, canonical_labeling, same_orbit, Graph};

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 9;

fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let child = parent.with_new_vertex(mask).expect("order below limit");
        let new = m;
        let non_cut: Vec<usize> = (0..=m).filter(|&v| !child.is_cut_vertex(v)).collect();
        let top = non_cut.iter().map(|&v| child.degree(v)).max().expect("non-empty");
        if child.degree(new) < top {
            continue;
        }
        let lab = canonical_labeling(&child);
        let w = non_cut
            .iter()
            .copied()
            .filter(|&v| child.degree(v) == top)
            .max_by_key(|&v| lab.perm[v])
            .expect("non-empty");
        if w != new && !same_orbit(&child, w, new) {
            continue;
        }
        if seen.insert(lab.graph.clone()) {
            out.push(lab.graph);
        }
    }
    out
}

/// One canonical representative of every connected graph of order `n`,
/// sorted by canonical label.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, CensusError> {
    Ok(enumerate_connected_up_to(n)?.pop().unwrap_or_default())
}

/// Connected graphs of orders `1..=max_order`, one vector per order.
pub fn enumerate_connected_up_to(max_order: usize) -> Result<Vec<Vec<Graph>>, CensusError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_order) {
        return Err(CensusError::UnsupportedOrder(max_order));
    }
    let mut levels = vec![vec![Graph::empty(1).expect("order 1")]];
    while levels.len() < max_order {
        let prev = levels.last().expect("non-empty");
        let mut next: Vec<Graph> = prev.par_iter().flat_map_iter(children).collect();
        sort_canonically(&mut next);
        levels.push(next);
    }
    Ok(levels)
}

pub(crate) fn sort_canonically(graphs: &mut Vec<Graph>) {
    let mut keyed: Vec<_> = graphs.drain(..).map(|g| (canonical_form(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    graphs.extend(keyed.into_iter().map(|(_, g)| g));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let levels = enumerate_connected_up_to(6).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(levels.iter().flatten().all(Graph::is_connected));
    }

    #[test]
    fn order_limits() {
        assert!(matches!(enumerate_connected(0), Err(CensusError::UnsupportedOrder(0))));
        assert!(matches!(
            enumerate_connected(10),
            Err(CensusError::UnsupportedOrder(10))
        ));
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
    }
}
