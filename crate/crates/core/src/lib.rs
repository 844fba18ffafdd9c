//! Exact S-packing colorings of small graphs: chromatic numbers for packing
//! sequences, vertex-criticality verdicts, named graph families and an
//! isomorph-free census of small connected graphs.

pub mod census;
pub mod critical;
pub mod families;
pub mod graph;
pub mod packing;
pub mod solver;
