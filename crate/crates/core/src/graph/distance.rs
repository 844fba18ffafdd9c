use super::{bits, Graph};

/// All-pairs shortest-path distances. Pairs in different components hold
/// [`DistanceMatrix::UNREACHABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        match self.get(u, v) {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Vertices `w != v` with `d(v, w) <= radius`.
    pub fn ball(&self, v: usize, radius: u32) -> u64 {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(w, &d)| w != v && d <= radius)
            .fold(0u64, |acc, (w, _)| acc | 1 << w)
    }

    /// The vertices at distance exactly `i` from `v`.
    pub fn sphere(&self, v: usize, i: u32) -> u64 {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == i)
            .fold(0u64, |acc, (w, _)| acc | 1 << w)
    }

    /// Largest finite distance; `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &d in &self.d {
            if d == Self::UNREACHABLE {
                return None;
            }
            best = best.max(d);
        }
        Some(best)
    }

    /// Largest finite distance, ignoring unreachable pairs.
    pub fn max_finite(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first search from every vertex, one frontier mask per layer.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.neighbors(v);
            }
            next &= !seen;
            for v in bits(next) {
                row[v] = depth;
            }
            seen |= next;
            frontier = next;
        }
    }
    DistanceMatrix { n, d }
}

pub fn diameter(g: &Graph) -> Option<u32> {
    all_pairs_distances(g).diameter()
}
