//! Exact S-packing coloring.
//!
//! A coloring `c: V -> {1..k}` is an S-packing coloring when any two
//! distinct vertices with `c(u) = c(v) = i` satisfy `d(u, v) > s_i`. Pairs
//! in different components never conflict.
//!
//! The decision procedure is a depth-first search over a static vertex
//! order (descending degree, ties by index) with colors tried in ascending
//! order. Colors sharing an `s` value are interchangeable, so inside each
//! maximal run of equal values a color may only be opened after its
//! predecessor in the run. Each color keeps a mask of vertices it can no
//! longer take; a node is pruned when some uncolored vertex has no color
//! left, or when a clique among the uncolored vertices sees fewer
//! available colors than it has vertices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{all_pairs_distances, bits, DistanceMatrix, Graph};
use crate::packing::PackingSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("colors must be positive integers, got {0:?}")]
    BadColor(String),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("sequence {0} is not of the form (1^l, s_(l+1), ...) with l >= 1 and s_(l+1) >= 2")]
    NotLeadingOnes(String),
    #[error("the bound requires a connected graph")]
    Disconnected,
}

/// A total map from vertices to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self, SolverError> {
        if let Some(pos) = colors.iter().position(|&c| c == 0) {
            return Err(SolverError::BadColor(format!("0 at vertex {pos}")));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    /// The largest color used (0 for the empty coloring).
    pub fn num_colors(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Restriction to `G - v`, keeping the gap-closing vertex order.
    pub fn without_vertex(&self, v: usize) -> Coloring {
        let mut c = self.0.clone();
        c.remove(v);
        Coloring(c)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let colors = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| SolverError::BadColor(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Coloring::new(colors)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.nodes += rhs.nodes;
        self.prunes += rhs.prunes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: u32,
    pub witness: Coloring,
    pub stats: SearchStats,
}

/// First pair `(u, v)`, `u < v`, sharing a color `i` with `d(u, v) <= s_i`.
pub fn first_conflict(dist: &DistanceMatrix, s: &PackingSequence, c: &Coloring) -> Option<(usize, usize)> {
    let n = dist.order();
    for u in 0..n {
        for v in u + 1..n {
            let i = c.color(u);
            if i == c.color(v) {
                let d = dist.get(u, v);
                if d != DistanceMatrix::UNREACHABLE && d <= s.value_at(i as usize) {
                    return Some((u, v));
                }
            }
        }
    }
    None
}

pub fn is_valid_coloring(g: &Graph, dist: &DistanceMatrix, s: &PackingSequence, c: &Coloring) -> bool {
    c.len() == g.order() && dist.order() == g.order() && first_conflict(dist, s, c).is_none()
}

/// Greedy clique drawn from `pool`, taking highest-degree vertices first.
fn greedy_clique(g: &Graph, pool: u64) -> u64 {
    let mut cands: Vec<usize> = bits(pool).collect();
    cands.sort_by_key(|&v| (std::cmp::Reverse((g.neighbors(v) & pool).count_ones()), v));
    let mut clique = 0u64;
    let mut common = pool;
    for v in cands {
        if common >> v & 1 == 1 {
            clique |= 1 << v;
            common &= g.neighbors(v);
        }
    }
    clique
}

/// Reusable search state for one graph and one sequence.
pub struct PackingSolver<'a> {
    g: &'a Graph,
    seq: PackingSequence,
    dist: DistanceMatrix,
    order: Vec<usize>,
    /// clique among `order[d..]`, per depth `d`
    cliques: Vec<u64>,
}

struct Frame<'s> {
    conflict: &'s [Vec<u64>],
    opens_run: Vec<bool>,
    forbidden: Vec<u64>,
    used: u64,
    colors: Vec<u32>,
    stats: SearchStats,
}

impl<'a> PackingSolver<'a> {
    pub fn new(g: &'a Graph, seq: &PackingSequence) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut cliques = Vec::with_capacity(n + 1);
        let mut rest = g.vertex_mask();
        for &v in &order {
            cliques.push(greedy_clique(g, rest));
            rest &= !(1 << v);
        }
        cliques.push(0);
        PackingSolver {
            g,
            seq: seq.clone(),
            dist: all_pairs_distances(g),
            order,
            cliques,
        }
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Size of a clique of `G`; a lower bound on the number of colors.
    pub fn clique_bound(&self) -> u32 {
        self.cliques[0].count_ones()
    }

    /// Searches for an S-packing `k`-coloring.
    pub fn find(&self, k: usize) -> (Option<Coloring>, SearchStats) {
        let n = self.g.order();
        if n == 0 {
            return (Some(Coloring(Vec::new())), SearchStats::default());
        }
        let k = k.min(n);
        if k == 0 {
            return (None, SearchStats::default());
        }
        let cap = self.dist.max_finite().max(1);
        let radii: Vec<u32> = (1..=k).map(|i| self.seq.value_at(i).min(cap)).collect();
        let mut by_radius: Vec<(u32, Vec<u64>)> = Vec::new();
        for &r in &radii {
            if !by_radius.iter().any(|(q, _)| *q == r) {
                by_radius.push((r, (0..n).map(|v| self.dist.ball(v, r)).collect()));
            }
        }
        let conflict: Vec<Vec<u64>> = radii
            .iter()
            .map(|r| by_radius.iter().find(|(q, _)| q == r).expect("cached").1.clone())
            .collect();
        // colors whose capped radii agree have identical conflict masks
        let opens_run = (0..k).map(|i| i == 0 || radii[i - 1] != radii[i]).collect();
        let mut frame = Frame {
            conflict: &conflict,
            opens_run,
            forbidden: vec![0; k],
            used: 0,
            colors: vec![0; n],
            stats: SearchStats::default(),
        };
        let found = self.descend(&mut frame, 0);
        let stats = frame.stats;
        (found.then_some(Coloring(frame.colors)), stats)
    }

    fn descend(&self, f: &mut Frame<'_>, depth: usize) -> bool {
        let n = self.order.len();
        if depth == n {
            return true;
        }
        let uncolored = self.cliques_pool(depth);
        let k = f.forbidden.len();
        let mut reachable = 0u64;
        for i in 0..k {
            reachable |= !f.forbidden[i];
        }
        if reachable & uncolored != uncolored {
            f.stats.prunes += 1;
            return false;
        }
        let clique = self.cliques[depth];
        let q = clique.count_ones();
        if q > 1 {
            let open = (0..k).filter(|&i| clique & !f.forbidden[i] != 0).count() as u32;
            if open < q {
                f.stats.prunes += 1;
                return false;
            }
        }

        let v = self.order[depth];
        for i in 0..k {
            if f.forbidden[i] >> v & 1 == 1 {
                continue;
            }
            if !f.opens_run[i] && f.used >> (i - 1) & 1 == 0 {
                continue;
            }
            f.stats.nodes += 1;
            let saved = f.forbidden[i];
            let saved_used = f.used;
            f.forbidden[i] |= f.conflict[i][v];
            f.used |= 1 << i;
            f.colors[v] = i as u32 + 1;
            if self.descend(f, depth + 1) {
                return true;
            }
            f.forbidden[i] = saved;
            f.used = saved_used;
        }
        f.colors[v] = 0;
        false
    }

    fn cliques_pool(&self, depth: usize) -> u64 {
        self.order[depth..].iter().fold(0u64, |acc, &v| acc | 1 << v)
    }

    /// Smallest `k` admitting an S-packing `k`-coloring, with a witness.
    pub fn chi(&self) -> ChiResult {
        let n = self.g.order();
        if n == 0 {
            return ChiResult {
                chi: 0,
                witness: Coloring(Vec::new()),
                stats: SearchStats::default(),
            };
        }
        let mut stats = SearchStats::default();
        for k in self.clique_bound().max(1) as usize..=n {
            let (found, st) = self.find(k);
            stats += st;
            if let Some(witness) = found {
                return ChiResult {
                    chi: k as u32,
                    witness,
                    stats,
                };
            }
        }
        unreachable!("n distinct colors always form a valid coloring")
    }
}

pub fn exists_coloring(g: &Graph, s: &PackingSequence, k: usize) -> Option<Coloring> {
    PackingSolver::new(g, s).find(k).0
}

pub fn chi_s(g: &Graph, s: &PackingSequence) -> ChiResult {
    PackingSolver::new(g, s).chi()
}

/// Ordinary chromatic number, the `(1, 1, 1, ...)` case.
pub fn chromatic_number(g: &Graph) -> u32 {
    chi_s(g, &PackingSequence::proper()).chi
}

fn is_k_colorable(g: &Graph, mask: u64, k: usize) -> bool {
    if (mask.count_ones() as usize) <= k {
        return true;
    }
    let h = g.induced(mask);
    if k == 1 {
        return h.size() == 0;
    }
    exists_coloring(&h, &PackingSequence::proper(), k).is_some()
}

/// `alpha_k(G)`: the largest vertex set inducing a `k`-colorable subgraph.
/// Returns the size and one optimal set in increasing vertex order.
pub fn alpha_k(g: &Graph, k: usize) -> (usize, Vec<usize>) {
    assert!(k >= 1, "alpha_k needs k >= 1");
    let all = g.vertex_mask();
    if is_k_colorable(g, all, k) {
        return (g.order(), (0..g.order()).collect());
    }
    // include/exclude in degeneracy order; k-colorability is hereditary
    let mut order = Vec::with_capacity(g.order());
    let mut rest = all;
    while rest != 0 {
        let v = bits(rest)
            .min_by_key(|&v| ((g.neighbors(v) & rest).count_ones(), v))
            .expect("non-empty");
        order.push(v);
        rest &= !(1 << v);
    }
    let mut best = 0u64;
    fn go(g: &Graph, k: usize, order: &[usize], i: usize, cur: u64, best: &mut u64) {
        if cur.count_ones() + (order.len() - i) as u32 <= best.count_ones() {
            return;
        }
        if i == order.len() {
            *best = cur;
            return;
        }
        let v = order[i];
        let with = cur | 1 << v;
        let ok = if k == 1 {
            g.neighbors(v) & cur == 0
        } else {
            is_k_colorable(g, with, k)
        };
        if ok {
            go(g, k, order, i + 1, with, best);
        }
        go(g, k, order, i + 1, cur, best);
    }
    go(g, k, &order, 0, 0, &mut best);
    (best.count_ones() as usize, bits(best).collect())
}

/// Upper bound `n - alpha_l + min(l, chi)` for `S = (1^l, s_(l+1), ...)`,
/// and whether `diam(G) <= s_(l+1)`, the condition stated for equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoddardXu {
    pub leading_ones: usize,
    pub alpha: usize,
    pub chromatic: u32,
    pub diameter: u32,
    pub bound: u32,
    pub equality: bool,
}

pub fn goddard_xu_bound(g: &Graph, s: &PackingSequence) -> Result<GoddardXu, SolverError> {
    let l = match s.leading_ones() {
        Some(l) if l >= 1 => l,
        _ => return Err(SolverError::NotLeadingOnes(s.to_string())),
    };
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let (alpha, _) = alpha_k(g, l);
    let chromatic = chromatic_number(g);
    let diameter = all_pairs_distances(g).diameter().expect("connected");
    let bound = (g.order() - alpha) as u32 + chromatic.min(l as u32);
    Ok(GoddardXu {
        leading_ones: l,
        alpha,
        chromatic,
        diameter,
        bound,
        equality: diameter <= s.value_at(l + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    fn seq(s: &str) -> PackingSequence {
        s.parse().unwrap()
    }

    #[test]
    fn validity_examples() {
        let p6 = path(6);
        let d = all_pairs_distances(&p6);
        let c: Coloring = "1 2 1 3 1 4".parse().unwrap();
        assert!(is_valid_coloring(&p6, &d, &seq("1,4,4,4+"), &c));
        let k1 = Graph::empty(1).unwrap();
        assert!(is_valid_coloring(
            &k1,
            &all_pairs_distances(&k1),
            &seq("1+"),
            &"1".parse().unwrap()
        ));
        let k2 = path(2);
        let bad: Coloring = "1 1".parse().unwrap();
        assert_eq!(
            first_conflict(&all_pairs_distances(&k2), &seq("1+"), &bad),
            Some((0, 1))
        );
        assert!(!is_valid_coloring(&p6, &d, &seq("1+"), &bad));
    }

    #[test]
    fn coloring_parse() {
        assert!("1 0 2".parse::<Coloring>().is_err());
        assert!("1 x".parse::<Coloring>().is_err());
        let c: Coloring = "1,2, 3".parse().unwrap();
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.to_string(), "1 2 3");
    }

    #[test]
    fn decision_examples() {
        assert!(exists_coloring(&path(6), &seq("1,4,4"), 3).is_none());
        assert!(exists_coloring(&cycle(7), &seq("1,3,3,3+"), 4).is_none());
        let g = cycle(6);
        assert!(exists_coloring(&g, &seq("1,6+"), 6).is_some());
        assert!(exists_coloring(&g, &seq("1,6+"), 0).is_none());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_s(&cycle(5), &PackingSequence::packing()).chi, 4);
        for n in 4..=12 {
            assert_eq!(chi_s(&path(n), &seq("1,3,3+")).chi, 3, "P{n}");
        }
        for s in ["1,3,3+", "1,4^3+", "1,2,3!", "1+"] {
            assert_eq!(chi_s(&complete(3), &seq(s)).chi, 3);
        }
        assert_eq!(chi_s(&cycle(8), &seq("1,3,4,4+")).chi, 4);
        assert_eq!(chi_s(&Graph::empty(0).unwrap(), &seq("1+")).chi, 0);
        let two = path(2).disjoint_union(&path(2)).unwrap();
        assert_eq!(chi_s(&two, &seq("1,9!")).chi, 2);
    }

    #[test]
    fn witnesses_are_valid() {
        let g = cycle(9);
        let s = PackingSequence::packing();
        let r = chi_s(&g, &s);
        assert!(is_valid_coloring(&g, &all_pairs_distances(&g), &s, &r.witness));
        assert_eq!(r.witness.num_colors(), r.chi);
        assert!(r.stats.nodes > 0);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(4)), 4);
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&path(6)), 2);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_k(&cycle(5), 1).0, 2);
        assert_eq!(alpha_k(&cycle(5), 2).0, 4);
        assert_eq!(alpha_k(&complete(5), 3).0, 3);
        let (size, set) = alpha_k(&path(6), 1);
        assert_eq!(size, 3);
        assert!(set.windows(2).all(|w| w[1] > w[0] + 1));
    }

    #[test]
    fn goddard_xu_examples() {
        let r = goddard_xu_bound(&complete(4), &seq("1,4^3+")).unwrap();
        assert_eq!((r.bound, r.equality), (4, true));
        let r = goddard_xu_bound(&path(6), &PackingSequence::packing()).unwrap();
        assert_eq!((r.bound, r.equality), (4, false));
        assert_eq!(chi_s(&path(6), &PackingSequence::packing()).chi, 3);
        assert!(matches!(
            goddard_xu_bound(&path(3), &seq("2,3+")),
            Err(SolverError::NotLeadingOnes(_))
        ));
        assert!(matches!(
            goddard_xu_bound(&path(3), &PackingSequence::proper()),
            Err(SolverError::NotLeadingOnes(_))
        ));
        let two = path(2).disjoint_union(&path(2)).unwrap();
        assert_eq!(goddard_xu_bound(&two, &seq("1,4+")), Err(SolverError::Disconnected));
    }
}
