//! Vertex-criticality: `G` is `k`-critical for `S` when `chi_S(G) = k` and
//! `chi_S(G - u) < k` for every vertex `u`.
//!
//! The empty graph has `chi_S = 0`, which makes `K_1` 1-critical.

use rayon::prelude::*;

use crate::graph::Graph;
use crate::packing::PackingSequence;
use crate::solver::{chi_s, exists_coloring, Coloring};

/// `chi_S(G - u)` together with an optimal coloring of `G - u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCertificate {
    pub vertex: usize,
    pub chi: u32,
    pub witness: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityVerdict {
    pub chi: u32,
    pub witness: Coloring,
    pub is_critical: bool,
    pub per_vertex: Vec<VertexCertificate>,
}

impl CriticalityVerdict {
    /// First vertex whose deletion keeps the chromatic number.
    pub fn first_non_critical(&self) -> Option<&VertexCertificate> {
        self.per_vertex.iter().find(|c| c.chi >= self.chi)
    }
}

/// Solves `G` and every `G - u`; certificates are kept for all vertices.
pub fn is_vertex_critical(g: &Graph, s: &PackingSequence) -> CriticalityVerdict {
    let whole = chi_s(g, s);
    let per_vertex: Vec<VertexCertificate> = (0..g.order())
        .into_par_iter()
        .map(|u| {
            let h = g.delete_vertex(u).expect("vertex in range");
            let r = chi_s(&h, s);
            VertexCertificate {
                vertex: u,
                chi: r.chi,
                witness: r.witness,
            }
        })
        .collect();
    let is_critical = g.order() > 0 && per_vertex.iter().all(|c| c.chi < whole.chi);
    CriticalityVerdict {
        chi: whole.chi,
        witness: whole.witness,
        is_critical,
        per_vertex,
    }
}

/// True iff `G` is `target`-critical for `S`.
pub fn criticality_class(g: &Graph, s: &PackingSequence, target: u32) -> bool {
    let v = is_vertex_critical(g, s);
    v.chi == target && v.is_critical
}

/// Decision-only variant of [`criticality_class`] for `target >= 1`: no
/// optimal colorings are built, and it stops at the first vertex whose
/// deletion keeps `target - 1` colors out of reach.
pub fn is_k_critical(g: &Graph, s: &PackingSequence, target: u32) -> bool {
    assert!(target >= 1);
    let k = target as usize;
    if g.order() == 0 || exists_coloring(g, s, k - 1).is_some() || exists_coloring(g, s, k).is_none() {
        return false;
    }
    (0..g.order()).all(|u| {
        let h = g.delete_vertex(u).expect("vertex in range");
        exists_coloring(&h, s, k - 1).is_some()
    })
}
