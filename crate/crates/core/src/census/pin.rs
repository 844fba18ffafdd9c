use std::collections::HashSet;

use super::verify::census_for_class;
use super::CensusError;
use crate::families::registry::{family_members, EntryClass, RegistryEntry, SporadicRegistry};
use crate::graph::{canonical_form, Graph};
use crate::packing::NamedClass;

/// Registry rows for `class` recovered from the census up to `cap`: the
/// class-critical graphs minus the family members, ordered by order and
/// canonical label. Names are copied from `known` when a graph is already
/// registered (in this class first, then anywhere); other graphs get a
/// provisional `new-i` name.
pub fn pin_class(known: &SporadicRegistry, class: NamedClass, cap: usize) -> Result<Vec<RegistryEntry>, CensusError> {
    let census = census_for_class(class, None, cap)?;
    let family: HashSet<_> = if class == NamedClass::One3And3 {
        family_members(None, cap).iter().map(canonical_form).collect()
    } else {
        HashSet::new()
    };
    let mut graphs: Vec<Graph> = census
        .critical
        .into_iter()
        .filter(|g| !family.contains(&canonical_form(g)))
        .collect();
    graphs.sort_by_key(|g| (g.order(), canonical_form(g)));

    let lookup = |g: &Graph| {
        let c = canonical_form(g);
        let same = |e: &&RegistryEntry| canonical_form(&e.graph) == c;
        known
            .for_class(class)
            .find(same)
            .or_else(|| known.entries().iter().find(same))
            .map(|e| (e.name.clone(), e.provisional))
    };
    let mut fresh = 0;
    Ok(graphs
        .into_iter()
        .map(|graph| {
            let (name, provisional) = lookup(&graph).unwrap_or_else(|| {
                fresh += 1;
                (format!("new-{fresh}"), true)
            });
            RegistryEntry {
                class: EntryClass::Critical(class),
                name,
                provisional,
                graph,
            }
        })
        .collect())
}
