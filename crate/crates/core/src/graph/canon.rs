//! Canonical labeling by partition refinement with individualization.
//!
//! The search tree branches on the vertices of the first smallest
//! non-singleton cell of an equitable partition. Every leaf is a discrete
//! partition, i.e. a relabeling; the canonical form is the relabeled
//! adjacency that compares greatest. Automorphisms found when two leaves
//! coincide prune children lying in an already explored orbit of the
//! pointwise stabilizer of the current prefix.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bits, to_graph6, Graph, GRAPH6_MAX_ORDER};

/// Isomorphism-class identifier: the graph6 text of the canonically
/// relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Wraps an existing label string, e.g. one read back from a census file.
    pub fn from_string(s: String) -> Self {
        CanonicalLabel(s)
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A canonical relabeling: `perm[v]` is the new index of vertex `v`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub perm: Vec<usize>,
    pub graph: Graph,
}

type Cells = Vec<Vec<usize>>;

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |acc, &v| acc | 1 << v)
}

/// Refines `cells` to the coarsest equitable partition below it. Splits are
/// ordered by neighbor count, so the result is equivariant under relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = mask_of(&cells[s]);
            let mut next: Cells = Vec::with_capacity(cells.len() + 2);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    inverse: Vec<usize>,
    key: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    autos: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
}

impl<'a> Search<'a> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.order();
        let mut lab = vec![0usize; n];
        let mut inverse = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            lab[cell[0]] = i;
            inverse[i] = cell[0];
        }
        let mut key = vec![0u64; n];
        for u in 0..n {
            key[lab[u]] = bits(self.g.neighbors(u)).fold(0, |acc, w| acc | 1 << lab[w]);
        }
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                inverse: inverse.clone(),
                key: key.clone(),
            });
            self.best = Some(Leaf { inverse, key });
            return;
        };
        if key == first.key {
            let auto: Vec<usize> = (0..n).map(|v| first.inverse[lab[v]]).collect();
            self.push_auto(auto);
        }
        let best = self.best.as_ref().expect("best set with first");
        match key.cmp(&best.key) {
            std::cmp::Ordering::Greater => self.best = Some(Leaf { inverse, key }),
            std::cmp::Ordering::Equal => {
                let auto: Vec<usize> = (0..n).map(|v| best.inverse[lab[v]]).collect();
                self.push_auto(auto);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    fn push_auto(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().all(|(i, &p)| i == p) || self.autos.contains(&auto) {
            return;
        }
        self.autos.push(auto);
    }

    /// Orbit representatives of the group generated by the known
    /// automorphisms that fix every vertex of `prefix`.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if prefix.iter().any(|&v| a[v] != v) {
                continue;
            }
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[ti] {
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                if explored.iter().any(|&e| orbits[e] == orbits[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == ti {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }
}

fn label_with_cells(g: &Graph, mut cells: Cells) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            perm: Vec::new(),
            graph: g.clone(),
        };
    }
    refine(g, &mut cells);
    let mut search = Search {
        g,
        autos: Vec::new(),
        first: None,
        best: None,
    };
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in best.inverse.iter().enumerate() {
        perm[v] = pos;
    }
    let graph = g.permuted(&perm);
    Labeling { perm, graph }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let cells = if g.order() == 0 {
        Vec::new()
    } else {
        vec![(0..g.order()).collect()]
    };
    label_with_cells(g, cells)
}

/// Canonical labeling of a vertex-colored graph; colors are respected and
/// cells are ordered by increasing color value.
pub(crate) fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    let mut values: Vec<u32> = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    let cells = values
        .iter()
        .map(|&c| (0..g.order()).filter(|&v| colors[v] == c).collect())
        .collect();
    label_with_cells(g, cells)
}

/// True iff some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let mark = |x: usize| -> Vec<u32> { (0..g.order()).map(|w| (w != x) as u32).collect() };
    canonical_labeling_colored(g, &mark(u)).graph == canonical_labeling_colored(g, &mark(v)).graph
}

pub(crate) fn label_of(canonical: &Graph) -> CanonicalLabel {
    if canonical.order() <= GRAPH6_MAX_ORDER {
        CanonicalLabel(to_graph6(canonical).expect("order checked"))
    } else {
        let rows: Vec<String> = (0..canonical.order())
            .map(|v| format!("{:x}", canonical.neighbors(v)))
            .collect();
        CanonicalLabel(format!("{}:{}", canonical.order(), rows.join(",")))
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    label_of(&canonical_labeling(g).graph)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_labeling(g).graph == canonical_labeling(h).graph
}
