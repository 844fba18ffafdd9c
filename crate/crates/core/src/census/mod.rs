//! Enumeration, classification and verification over small connected graphs.

mod enumerate;
mod io;
mod pin;
mod record;
mod run;
mod verify;

pub use enumerate::{enumerate_connected, enumerate_connected_up_to, MAX_ENUMERATION_ORDER};
pub use io::{ingest_graph6, ingest_reader, load, persist, Diagnostic, IngestOptions, Ingested, RunManifest};
pub use pin::pin_class;
pub use record::{classify, classify_one, sort_records, CensusRecord, SequenceResult, SCHEMA_VERSION};
pub use run::{run_census, CensusSummary};
pub use verify::{
    census_for_class, class_census, class_representatives, graph6_of, verify_theorem, Anomaly, ClassCensus,
    VerificationReport, REPRESENTATIVE_CAP, TARGET_CHI,
};

use std::path::PathBuf;

use thiserror::Error;

use crate::families::registry::RegistryError;
use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("built-in enumeration supports orders 1..={max}, got {0}; ingest a graph6 file instead", max = MAX_ENUMERATION_ORDER)]
    UnsupportedOrder(usize),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Graph6Line {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: malformed census record: {reason}")]
    Record { line: usize, reason: String },
    #[error("line {line}: census schema version {found:?}, this build reads version {expected}")]
    SchemaVersion {
        line: usize,
        found: Option<u64>,
        expected: u32,
    },
    #[error("{} describes a different run; remove it or choose another output path", .0.display())]
    ManifestMismatch(PathBuf),
    #[error(transparent)]
    Registry(#[from] RegistryError),
}
