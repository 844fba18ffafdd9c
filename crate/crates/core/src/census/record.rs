use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critical::is_vertex_critical;
use crate::graph::{canonical_form, to_graph6, CanonicalLabel, Graph};
use crate::packing::PackingSequence;

/// Version of the JSONL record layout; bumped on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

/// Outcome for one graph under one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceResult {
    pub chi: u32,
    pub critical: bool,
    /// Optimal coloring in vertex order of the record's graph6.
    pub witness: String,
    /// `chi_S(G - u)` for every vertex `u`.
    pub deleted_chi: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema_version: u32,
    pub graph6: String,
    pub order: usize,
    pub canonical: CanonicalLabel,
    /// Keyed by the sequence's text form, e.g. `1,4^3+`.
    pub per_sequence: IndexMap<String, SequenceResult>,
}

impl CensusRecord {
    pub fn result(&self, s: &PackingSequence) -> Option<&SequenceResult> {
        self.per_sequence.get(&s.to_string())
    }
}

pub fn classify_one(g: &Graph, sequences: &[PackingSequence]) -> CensusRecord {
    let per_sequence = sequences
        .iter()
        .map(|s| {
            let v = is_vertex_critical(g, s);
            let result = SequenceResult {
                chi: v.chi,
                critical: v.is_critical,
                witness: v.witness.to_string(),
                deleted_chi: v.per_vertex.iter().map(|c| c.chi).collect(),
            };
            (s.to_string(), result)
        })
        .collect();
    CensusRecord {
        schema_version: SCHEMA_VERSION,
        graph6: to_graph6(g).expect("census graphs are small"),
        order: g.order(),
        canonical: canonical_form(g),
        per_sequence,
    }
}

/// One record per graph, in input order. Graphs are classified in parallel.
pub fn classify(graphs: &[Graph], sequences: &[PackingSequence]) -> Vec<CensusRecord> {
    assert!(!sequences.is_empty(), "classify needs at least one sequence");
    graphs.par_iter().map(|g| classify_one(g, sequences)).collect()
}

/// Sorts by order, then canonical label.
pub fn sort_records(records: &mut [CensusRecord]) {
    records.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete, make_cycle, make_path};

    fn seq(s: &str) -> PackingSequence {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        let graphs = [make_complete(4).unwrap(), make_path(7).unwrap(), make_cycle(4).unwrap()];
        let s = [seq("1,4^3+"), seq("1,3,4^2+")];
        let r = classify(&graphs, &s);
        assert_eq!(r.len(), 3);
        let k4 = r[0].result(&s[0]).unwrap();
        assert_eq!((k4.chi, k4.critical), (4, true));
        let p7 = r[1].result(&s[1]).unwrap();
        assert_eq!((p7.chi, p7.critical), (3, false));
        assert_eq!(r[2].result(&s[0]).unwrap().chi, 3);
        assert_eq!(r[1].per_sequence.keys().collect::<Vec<_>>(), vec!["1,4^3+", "1,3,4^2+"]);
    }
}
