use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_connected_up_to;
use super::CensusError;
use crate::critical::is_k_critical;
use crate::families::registry::SporadicRegistry;
use crate::graph::{canonical_form, to_graph6, CanonicalLabel, Graph};
use crate::packing::{NamedClass, PackingSequence};

/// Number of colors the characterizations are about.
pub const TARGET_CHI: u32 = 4;
/// Largest sampled value for free coordinates; above the diameter of any
/// connected graph of order at most 8.
pub const REPRESENTATIVE_CAP: u32 = 7;

pub fn class_representatives(class: NamedClass, s4: Option<u32>) -> Vec<PackingSequence> {
    class
        .class_with_s4(s4)
        .representatives(TARGET_CHI as usize, REPRESENTATIVE_CAP)
        .expect("named classes are non-empty")
}

/// A graph that is 4-critical under some representatives but not others.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub canonical: CanonicalLabel,
    pub critical_under: Vec<String>,
    pub not_critical_under: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ClassCensus {
    pub representatives: Vec<PackingSequence>,
    /// Graphs 4-critical under every representative, in enumeration order.
    pub critical: Vec<Graph>,
    pub anomalies: Vec<Anomaly>,
    pub examined: usize,
}

/// Class-level 4-criticality over `graphs`.
pub fn class_census(graphs: &[Graph], representatives: &[PackingSequence]) -> ClassCensus {
    let verdicts: Vec<Vec<bool>> = graphs
        .par_iter()
        .map(|g| {
            representatives
                .iter()
                .map(|s| is_k_critical(g, s, TARGET_CHI))
                .collect()
        })
        .collect();
    let mut critical = Vec::new();
    let mut anomalies = Vec::new();
    for (g, v) in graphs.iter().zip(&verdicts) {
        if v.iter().all(|&b| b) {
            critical.push(g.clone());
        } else if v.iter().any(|&b| b) {
            let split = |want: bool| {
                representatives
                    .iter()
                    .zip(v)
                    .filter(|(_, &b)| b == want)
                    .map(|(s, _)| s.to_string())
                    .collect()
            };
            anomalies.push(Anomaly {
                canonical: canonical_form(g),
                critical_under: split(true),
                not_critical_under: split(false),
            });
        }
    }
    ClassCensus {
        representatives: representatives.to_vec(),
        critical,
        anomalies,
        examined: graphs.len(),
    }
}

/// Runs [`class_census`] over every connected graph of order at most `cap`.
pub fn census_for_class(class: NamedClass, s4: Option<u32>, cap: usize) -> Result<ClassCensus, CensusError> {
    let graphs: Vec<Graph> = enumerate_connected_up_to(cap)?.into_iter().flatten().collect();
    Ok(class_census(&graphs, &class_representatives(class, s4)))
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub class: String,
    pub s4: Option<u32>,
    pub order_cap: usize,
    pub examined: usize,
    pub representatives: Vec<String>,
    pub found: BTreeSet<CanonicalLabel>,
    pub expected: BTreeSet<CanonicalLabel>,
    pub missing: BTreeSet<CanonicalLabel>,
    pub extra: BTreeSet<CanonicalLabel>,
    pub anomalies: Vec<Anomaly>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s4 = self.s4.map(|v| format!(" s4={v}")).unwrap_or_default();
        writeln!(
            f,
            "class {}{s4}, orders 1..={}: {} graphs examined",
            self.class, self.order_cap, self.examined
        )?;
        writeln!(f, "representatives: {}", self.representatives.join(" "))?;
        writeln!(f, "found {} / expected {}", self.found.len(), self.expected.len())?;
        let list = |set: &BTreeSet<CanonicalLabel>| set.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        if !self.missing.is_empty() {
            writeln!(f, "missing: {}", list(&self.missing))?;
        }
        if !self.extra.is_empty() {
            writeln!(f, "extra: {}", list(&self.extra))?;
        }
        for a in &self.anomalies {
            writeln!(
                f,
                "anomaly {}: critical under {:?}, not under {:?}",
                a.canonical, a.critical_under, a.not_critical_under
            )?;
        }
        write!(f, "verdict: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Compares the census of a class against the registry's expected set.
pub fn verify_theorem(
    registry: &SporadicRegistry,
    class: NamedClass,
    s4: Option<u32>,
    cap: usize,
) -> Result<VerificationReport, CensusError> {
    let expected: BTreeSet<CanonicalLabel> = registry
        .expected_critical_set(class, s4, cap)?
        .iter()
        .map(canonical_form)
        .collect();
    let census = census_for_class(class, s4, cap)?;
    let found: BTreeSet<CanonicalLabel> = census.critical.iter().map(canonical_form).collect();
    let missing: BTreeSet<_> = expected.difference(&found).cloned().collect();
    let extra: BTreeSet<_> = found.difference(&expected).cloned().collect();
    Ok(VerificationReport {
        class: class.name().to_string(),
        s4,
        order_cap: cap,
        examined: census.examined,
        representatives: census.representatives.iter().map(ToString::to_string).collect(),
        pass: missing.is_empty() && extra.is_empty(),
        found,
        expected,
        missing,
        extra,
        anomalies: census.anomalies,
    })
}

/// graph6 of a census graph, for reports.
pub fn graph6_of(g: &Graph) -> String {
    to_graph6(g).expect("census graphs are small")
}
