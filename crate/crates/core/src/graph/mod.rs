//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbor mask per vertex.

mod canon;
mod distance;
mod graph6;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, same_orbit, CanonicalLabel, Labeling};
pub use distance::{all_pairs_distances, diameter, DistanceMatrix};
pub use graph6::{parse_graph6, to_graph6, GRAPH6_MAX_ORDER};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = Graph::MAX_ORDER)]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph6 supports at most {max} vertices here, got {0}", max = GRAPH6_MAX_ORDER)]
    Graph6Unsupported(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    pub const MAX_ORDER: usize = 64;

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > Self::MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the undirected edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub(crate) fn component_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff a search from vertex 0 reaches every vertex. The empty graph
    /// is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertex sets of the connected components, in order of smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.component_within(v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// True iff removing `v` increases the number of components.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let allowed = self.vertex_mask() & !(1 << v);
        let nbrs = self.adj[v];
        if nbrs == 0 {
            return false;
        }
        let first = nbrs.trailing_zeros() as usize;
        nbrs & !self.component_within(first, allowed) != 0
    }

    /// Subgraph induced by `mask`, vertices renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        Graph { n: keep.len(), adj }
    }

    /// `G - v`; surviving vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !(1 << v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph { n: self.n, adj }
    }

    /// Adds a new vertex `n` joined to every vertex in `mask`.
    pub fn with_new_vertex(&self, mask: u64) -> Result<Graph, GraphError> {
        if self.n + 1 > Self::MAX_ORDER {
            return Err(GraphError::TooLarge(self.n + 1));
        }
        let mask = mask & self.vertex_mask();
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= 1 << self.n;
        }
        adj.push(mask);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Disjoint union, `other`'s vertices shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > Self::MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Every graph obtained by deleting exactly one edge.
    pub fn edge_deleted_subgraphs(&self) -> Vec<Graph> {
        self.edges()
            .map(|(u, v)| {
                let mut h = self.clone();
                h.adj[u] &= !(1 << v);
                h.adj[v] &= !(1 << u);
                h
            })
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.size() + self.components().len() == self.n
    }

    /// True iff `pattern` is isomorphic to a (not necessarily induced)
    /// subgraph of `self`.
    pub fn contains_subgraph(&self, pattern: &Graph) -> bool {
        if pattern.n > self.n || pattern.size() > self.size() {
            return false;
        }
        // map pattern vertices in BFS order so each new vertex has a mapped neighbor
        let mut order = Vec::with_capacity(pattern.n);
        let mut placed = 0u64;
        while order.len() < pattern.n {
            let start = (0..pattern.n).find(|&v| placed >> v & 1 == 0).expect("unplaced vertex");
            let comp = pattern.component_within(start, pattern.vertex_mask() & !placed);
            let mut frontier = 1u64 << start;
            let mut seen = frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    order.push(v);
                    next |= pattern.adj[v];
                }
                next &= comp & !seen;
                seen |= next;
                frontier = next;
            }
            placed |= comp;
        }
        let mut image = vec![usize::MAX; pattern.n];
        self.embed(pattern, &order, 0, &mut image, 0)
    }

    fn embed(&self, pattern: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
        let Some(&p) = order.get(depth) else {
            return true;
        };
        let mut candidates = self.vertex_mask() & !used;
        for q in bits(pattern.adj[p]) {
            if image[q] != usize::MAX {
                candidates &= self.adj[image[q]];
            }
        }
        for h in bits(candidates) {
            if self.degree(h) < pattern.degree(p) {
                continue;
            }
            image[p] = h;
            if self.embed(pattern, order, depth + 1, image, used | 1 << h) {
                return true;
            }
        }
        image[p] = usize::MAX;
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn basic_counts() {
        let g = cycle(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert!(g.has_edge(4, 0) && g.has_edge(0, 4));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert_eq!(Graph::empty(65), Err(GraphError::TooLarge(65)));
    }

    #[test]
    fn delete_vertex_closes_gap() {
        let g = cycle(5);
        for v in 0..5 {
            let h = g.delete_vertex(v).unwrap();
            assert_eq!(h.order(), 4);
            assert_eq!(h.size(), 3);
            assert!(h.is_connected());
        }
        let h = g.delete_vertex(0).unwrap();
        // 1-2-3-4 becomes 0-1-2-3
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.delete_vertex(5).is_err());
    }

    #[test]
    fn connectivity_and_cut_vertices() {
        let two = Graph::empty(2).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components().len(), 2);
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.is_cut_vertex(1));
        assert!(!p.is_cut_vertex(0));
        assert!(!cycle(4).is_cut_vertex(2));
        assert!(p.is_acyclic());
        assert!(!cycle(4).is_acyclic());
    }

    #[test]
    fn subgraph_containment() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(cycle(5).contains_subgraph(&p4));
        assert!(!cycle(5).contains_subgraph(&star));
        assert!(!p4.contains_subgraph(&cycle(4)));
        assert!(cycle(6).contains_subgraph(&cycle(6)));
        assert!(!cycle(6).contains_subgraph(&cycle(5)));
        // two disjoint edges fit in P4 but not in a star
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(p4.contains_subgraph(&matching));
        assert!(!star.contains_subgraph(&matching));
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let h = g.permuted(&[3, 0, 1, 2]);
        assert_eq!(h.degree(0), 3);
        assert_eq!(h.degree_sequence(), g.degree_sequence());
    }
}
