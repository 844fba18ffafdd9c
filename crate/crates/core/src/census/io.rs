//! JSONL persistence, run manifests and graph6 ingest.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::record::{CensusRecord, SCHEMA_VERSION};
use super::CensusError;
use crate::graph::{canonical_form, parse_graph6, Graph};

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CensusError + '_ {
    move |source| CensusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes one JSON object per line. An empty slice yields an empty file.
pub fn persist(path: &Path, records: &[CensusRecord]) -> Result<(), CensusError> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    for r in records {
        let line = serde_json::to_string(r).expect("records serialize");
        writeln!(w, "{line}").map_err(io_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn load(path: &Path) -> Result<Vec<CensusRecord>, CensusError> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        #[derive(Deserialize)]
        struct Version {
            schema_version: Option<u64>,
        }
        // read the version first so old files report a version error, not a shape error
        let version = serde_json::from_str::<Version>(&line)
            .map_err(|e| CensusError::Record {
                line: i + 1,
                reason: e.to_string(),
            })?
            .schema_version;
        if version != Some(SCHEMA_VERSION as u64) {
            return Err(CensusError::SchemaVersion {
                line: i + 1,
                found: version,
                expected: SCHEMA_VERSION,
            });
        }
        let record = serde_json::from_str(&line).map_err(|e| CensusError::Record {
            line: i + 1,
            reason: e.to_string(),
        })?;
        out.push(record);
    }
    Ok(out)
}

/// Parameters of a census run, stored next to its JSONL output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub code_version: String,
    pub order_cap: usize,
    pub sequences: Vec<String>,
}

impl RunManifest {
    pub fn new(order_cap: usize, sequences: Vec<String>) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION,
            code_version: env!("CARGO_PKG_VERSION").to_string(),
            order_cap,
            sequences,
        }
    }

    /// `out.jsonl` -> `out.jsonl.manifest.json`.
    pub fn path_for(out: &Path) -> PathBuf {
        let mut s = out.as_os_str().to_owned();
        s.push(".manifest.json");
        PathBuf::from(s)
    }

    pub fn write(&self, path: &Path) -> Result<(), CensusError> {
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text + "\n").map_err(io_err(path))
    }

    pub fn read(path: &Path) -> Result<Self, CensusError> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        serde_json::from_str(&text).map_err(|e| CensusError::Record {
            line: 1,
            reason: e.to_string(),
        })
    }
}

/// A graph6 line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestOptions {
    pub fail_fast: bool,
    pub dedup: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Reads one graph6 string per line. Blank lines are skipped, as is an
/// optional `>>graph6<<` header.
pub fn ingest_graph6(path: &Path, opts: &IngestOptions) -> Result<Ingested, CensusError> {
    let file = File::open(path).map_err(io_err(path))?;
    ingest_reader(BufReader::new(file), opts).map_err(|e| match e {
        CensusError::Io { source, .. } => CensusError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn ingest_reader<R: BufRead>(reader: R, opts: &IngestOptions) -> Result<Ingested, CensusError> {
    let mut out = Ingested::default();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| CensusError::Io {
            path: PathBuf::from("<input>"),
            source,
        })?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) => {
                if !opts.dedup || seen.insert(canonical_form(&g)) {
                    out.graphs.push(g);
                }
            }
            Err(e) if opts.fail_fast => return Err(CensusError::Graph6Line { line: i + 1, source: e }),
            Err(e) => out.diagnostics.push(Diagnostic {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ingest_collects_diagnostics() {
        let text = "A_\nD?\nDhc\n";
        let got = ingest_reader(text.as_bytes(), &IngestOptions::default()).unwrap();
        assert_eq!(got.graphs.len(), 2);
        assert_eq!(got.diagnostics.len(), 1);
        assert_eq!(got.diagnostics[0].line, 2);
        let strict = IngestOptions {
            fail_fast: true,
            dedup: false,
        };
        assert!(matches!(
            ingest_reader(text.as_bytes(), &strict),
            Err(CensusError::Graph6Line { line: 2, .. })
        ));
    }

    #[test]
    fn ingest_dedup_and_header() {
        // two labellings of P3 and one triangle
        let text = ">>graph6<<BW\nBo\nBw\n\n";
        let all = ingest_reader(text.as_bytes(), &IngestOptions::default()).unwrap();
        assert_eq!(all.graphs.len(), 3);
        let dedup = IngestOptions {
            fail_fast: false,
            dedup: true,
        };
        assert_eq!(ingest_reader(text.as_bytes(), &dedup).unwrap().graphs.len(), 2);
    }
}
