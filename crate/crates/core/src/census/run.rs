use std::collections::HashSet;
use std::path::Path;

use super::enumerate::enumerate_connected_up_to;
use super::io::{load, persist, RunManifest};
use super::record::{classify, sort_records, CensusRecord};
use super::CensusError;
use crate::packing::PackingSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusSummary {
    pub records: usize,
    pub resumed: usize,
    /// Record count per order `1..=cap`.
    pub per_order: Vec<usize>,
}

/// Classifies every connected graph of order at most `cap` and writes the
/// sorted records to `out`, with a manifest beside it. If `out` and a
/// matching manifest already exist, graphs already present are kept and
/// only the rest are solved. The file is rewritten after each order.
pub fn run_census(cap: usize, sequences: &[PackingSequence], out: &Path) -> Result<CensusSummary, CensusError> {
    let manifest = RunManifest::new(cap, sequences.iter().map(ToString::to_string).collect());
    let manifest_path = RunManifest::path_for(out);
    let mut records: Vec<CensusRecord> = Vec::new();
    if manifest_path.exists() && out.exists() {
        let previous = RunManifest::read(&manifest_path)?;
        if previous != manifest {
            return Err(CensusError::ManifestMismatch(manifest_path));
        }
        records = load(out)?;
    }
    let resumed = records.len();
    manifest.write(&manifest_path)?;

    let levels = enumerate_connected_up_to(cap)?;
    let mut per_order = Vec::with_capacity(cap);
    for level in &levels {
        per_order.push(level.len());
        let done: HashSet<_> = records.iter().map(|r| r.canonical.clone()).collect();
        let todo: Vec<_> = level
            .iter()
            .filter(|g| !done.contains(&crate::graph::canonical_form(g)))
            .cloned()
            .collect();
        if todo.is_empty() {
            continue;
        }
        records.extend(classify(&todo, sequences));
        sort_records(&mut records);
        persist(out, &records)?;
    }
    sort_records(&mut records);
    persist(out, &records)?;
    Ok(CensusSummary {
        records: records.len(),
        resumed,
        per_order,
    })
}
