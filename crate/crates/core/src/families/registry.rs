//! Pinned small 4-critical graphs that no constructor produces, stored as
//! `class<TAB>name<TAB>graph6` lines under a version header.
//!
//! A trailing `?` on a name marks an assignment the available structural
//! information does not settle. The pseudo-class `witness` holds named
//! graphs that are not critical but are useful as counterexamples.

use std::collections::HashSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use super::{in_cycle_family, make_cycle, make_g2k};
use crate::graph::{canonical_form, parse_graph6, to_graph6, Graph};
use crate::packing::NamedClass;

pub const REGISTRY_VERSION: u32 = 1;
pub const REGISTRY_ENV: &str = "SPACK_REGISTRY";
const HEADER_PREFIX: &str = "# spack-registry v";
const WITNESS: &str = "witness";

static EMBEDDED: &str = include_str!("../../data/registry.tsv");

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("registry header missing or unsupported (want `{HEADER_PREFIX}{REGISTRY_VERSION}`), found {0:?}")]
    Version(String),
    #[error("registry line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("registry has no entries for class {0}; run `spack pin --class {0}` and commit the output")]
    Unpinned(NamedClass),
    #[error("registry entries {0} and {1} are isomorphic")]
    Duplicate(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryClass {
    Critical(NamedClass),
    Witness,
}

impl fmt::Display for EntryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryClass::Critical(c) => write!(f, "{c}"),
            EntryClass::Witness => f.write_str(WITNESS),
        }
    }
}

impl FromStr for EntryClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == WITNESS {
            return Ok(EntryClass::Witness);
        }
        s.parse()
            .map(EntryClass::Critical)
            .map_err(|_| format!("unknown class {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub class: EntryClass,
    pub name: String,
    pub provisional: bool,
    pub graph: Graph,
}

impl RegistryEntry {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.graph).expect("registry graphs are small")
    }

    /// One TSV line, without the newline.
    pub fn to_line(&self) -> String {
        let mark = if self.provisional { "?" } else { "" };
        format!("{}\t{}{mark}\t{}", self.class, self.name, self.graph6())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SporadicRegistry {
    entries: Vec<RegistryEntry>,
}

impl SporadicRegistry {
    pub fn new(entries: Vec<RegistryEntry>) -> Result<Self, RegistryError> {
        for class in NamedClass::ALL {
            let mut seen = std::collections::HashMap::new();
            for e in entries.iter().filter(|e| e.class == EntryClass::Critical(class)) {
                if let Some(prev) = seen.insert(canonical_form(&e.graph), e.name.clone()) {
                    return Err(RegistryError::Duplicate(prev, e.name.clone()));
                }
            }
        }
        Ok(SporadicRegistry { entries })
    }

    /// The registry compiled into the library.
    pub fn embedded() -> Self {
        EMBEDDED.parse().expect("embedded registry is well formed")
    }

    /// The file named by `SPACK_REGISTRY` if set, else the embedded one.
    pub fn from_env() -> Result<Self, RegistryError> {
        match std::env::var_os(REGISTRY_ENV) {
            Some(p) => Self::load(Path::new(&p)),
            None => Ok(Self::embedded()),
        }
    }

    pub fn load(path: &Path) -> Result<Self, RegistryError> {
        let text = std::fs::read_to_string(path).map_err(|source| RegistryError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        text.parse()
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn for_class(&self, class: NamedClass) -> impl Iterator<Item = &RegistryEntry> {
        self.entries
            .iter()
            .filter(move |e| e.class == EntryClass::Critical(class))
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &RegistryEntry> {
        self.entries.iter().filter(|e| e.class == EntryClass::Witness)
    }

    pub fn get(&self, class: EntryClass, name: &str) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.class == class && e.name == name)
    }

    /// Looks a name up in any class.
    pub fn by_name(&self, name: &str) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn is_pinned(&self, class: NamedClass) -> bool {
        self.for_class(class).next().is_some()
    }

    /// Pinned graphs of `class` of order at most `max_order`, together with
    /// the family members the characterization adds: for `S1-3-3`, cycles in
    /// the family for `s4` and every `G_{2k}` of order at most `max_order`.
    /// Without `s4` the cycle condition must hold for every admissible `s4`.
    pub fn expected_critical_set(
        &self,
        class: NamedClass,
        s4: Option<u32>,
        max_order: usize,
    ) -> Result<Vec<Graph>, RegistryError> {
        if !self.is_pinned(class) {
            return Err(RegistryError::Unpinned(class));
        }
        let mut out: Vec<Graph> = self
            .for_class(class)
            .filter(|e| e.order() <= max_order)
            .map(|e| e.graph.clone())
            .collect();
        if class == NamedClass::One3And3 {
            out.extend(family_members(s4, max_order));
        }
        let mut seen = HashSet::new();
        out.retain(|g| seen.insert(canonical_form(g)));
        Ok(out)
    }

    /// The registry in file form, entries in stored order.
    pub fn to_text(&self) -> String {
        let mut s = format!("{HEADER_PREFIX}{REGISTRY_VERSION}\n");
        for e in &self.entries {
            s.push_str(&e.to_line());
            s.push('\n');
        }
        s
    }
}

/// Cycles of the `s4` family and the graphs `G_{2k}`, up to `max_order`.
pub fn family_members(s4: Option<u32>, max_order: usize) -> Vec<Graph> {
    let s4 = s4.unwrap_or(u32::MAX);
    let mut out: Vec<Graph> = (5..=max_order)
        .filter(|&n| in_cycle_family(n, s4))
        .map(|n| make_cycle(n).expect("n >= 5"))
        .collect();
    out.extend(
        (3..)
            .take_while(|k| 2 * k + 2 <= max_order)
            .map(|k| make_g2k(k).expect("k >= 3")),
    );
    out
}

impl FromStr for SporadicRegistry {
    type Err = RegistryError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text.lines().enumerate();
        let header = lines.next().map(|(_, l)| l.trim()).unwrap_or("");
        if header != format!("{HEADER_PREFIX}{REGISTRY_VERSION}") {
            return Err(RegistryError::Version(header.to_string()));
        }
        let mut entries = Vec::new();
        for (i, line) in lines {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| RegistryError::Line { line: i + 1, reason };
            let fields: Vec<&str> = line.split('\t').collect();
            let [class, name, g6] = fields[..] else {
                return Err(bad(format!("expected 3 tab-separated fields, got {}", fields.len())));
            };
            let class: EntryClass = class.parse().map_err(bad)?;
            let (name, provisional) = match name.strip_suffix('?') {
                Some(n) => (n, true),
                None => (name, false),
            };
            if name.is_empty() {
                return Err(bad("empty name".into()));
            }
            let graph = parse_graph6(g6).map_err(|e| bad(e.to_string()))?;
            entries.push(RegistryEntry {
                class,
                name: name.to_string(),
                provisional,
                graph,
            });
        }
        SporadicRegistry::new(entries)
    }
}
