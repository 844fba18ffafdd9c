//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use spack_core::graph::Graph;

pub const INF: u32 = u32::MAX;

/// Floyd-Warshall over the adjacency relation.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// `s[i]` for color `i + 1`; colors past the end reuse the last entry.
pub fn radius(s: &[u32], color: usize) -> u32 {
    s[(color - 1).min(s.len() - 1)]
}

/// Direct check of the packing condition on every pair.
pub fn oracle_valid(d: &[Vec<u32>], s: &[u32], colors: &[usize]) -> bool {
    let n = colors.len();
    (0..n).all(|u| (u + 1..n).all(|v| colors[u] != colors[v] || d[u][v] == INF || d[u][v] > radius(s, colors[u])))
}

/// Tries all `k^n` assignments.
pub fn oracle_exists(g: &Graph, s: &[u32], k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let d = floyd(g);
    let mut colors = vec![1usize; n];
    loop {
        if oracle_valid(&d, s, &colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] <= k {
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Smallest `k <= max_k` with a coloring, if any.
pub fn oracle_chi(g: &Graph, s: &[u32], max_k: usize) -> Option<usize> {
    (0..=max_k).find(|&k| oracle_exists(g, s, k))
}

pub fn oracle_alpha(g: &Graph, k: usize) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&mask| {
            let h = g.induced(mask);
            oracle_exists(&h, &[1], k)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}
