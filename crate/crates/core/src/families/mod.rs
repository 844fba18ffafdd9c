//! Named graphs, the two infinite families of 4-critical graphs, closed-form
//! values of `chi_S` on cycles, and explicit coloring patterns.

pub mod registry;

pub use registry::{RegistryEntry, RegistryError, SporadicRegistry};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::solver::Coloring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs parameter >= {min}, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown graph spec {0:?} (expected C:n, P:n, K:n or G2K:k)")]
    Spec(String),
}

fn at_least(family: &'static str, min: usize, got: usize) -> Result<(), FamilyError> {
    if got < min {
        Err(FamilyError::TooSmall { family, min, got })
    } else {
        Ok(())
    }
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph, FamilyError> {
    at_least("path", 1, n)?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &e)?)
}

/// `C_n` on `0 - 1 - ... - (n-1) - 0`.
pub fn make_cycle(n: usize) -> Result<Graph, FamilyError> {
    at_least("cycle", 3, n)?;
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &e)?)
}

pub fn make_complete(n: usize) -> Result<Graph, FamilyError> {
    at_least("complete graph", 1, n)?;
    Ok(Graph::empty(n)?.complement())
}

/// `G_{2k}`: the path `v_1 ... v_{2k}` (vertices `0..2k`) with a pendant at
/// `v_2` (vertex `2k`) and one at `v_{2k-1}` (vertex `2k + 1`).
pub fn make_g2k(k: usize) -> Result<Graph, FamilyError> {
    at_least("G_2k", 3, k)?;
    let n = 2 * k;
    let mut g = make_path(n)?.with_new_vertex(1 << 1)?;
    g = g.with_new_vertex(1 << (n - 2))?;
    Ok(g)
}

/// Parses the constructor shorthand `C:n`, `P:n`, `K:n`, `G2K:k`.
pub fn from_spec(spec: &str) -> Result<Graph, FamilyError> {
    let bad = || FamilyError::Spec(spec.to_string());
    let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
    let arg: usize = arg.trim().parse().map_err(|_| bad())?;
    match kind.trim().to_ascii_uppercase().as_str() {
        "C" => make_cycle(arg),
        "P" => make_path(arg),
        "K" => make_complete(arg),
        "G2K" => make_g2k(arg),
        _ => Err(bad()),
    }
}

/// `chi_rho(C_n)` for `S = (1, 2, 3, ...)`: 3 when `n = 3` or `4 | n`, else 4.
pub fn predicted_chi_rho_cycle(n: usize) -> u32 {
    assert!(n >= 3);
    if n == 3 || n % 4 == 0 {
        3
    } else {
        4
    }
}

/// `chi_S(C_n)` for `S = (1, 3, 3, s4, ...)`.
pub fn predicted_chi_cycle_133(n: usize, s4: u32) -> u32 {
    assert!(n >= 3 && s4 >= 3);
    match n % 4 {
        _ if n == 3 => 3,
        0 => 3,
        1 | 2 => 4,
        _ if s4 < (n / 2) as u32 => 4,
        _ => 5,
    }
}

/// Membership of `C_n` in the cycle family `C_{s4}`: `n >= 5` and either
/// `n = 1, 2 (mod 4)`, or `n = 3 (mod 4)` with `s4 < floor(n / 2)`.
pub fn in_cycle_family(n: usize, s4: u32) -> bool {
    n >= 5 && (matches!(n % 4, 1 | 2) || (n % 4 == 3 && s4 < (n / 2) as u32))
}

fn coloring(colors: Vec<u32>) -> Coloring {
    Coloring::new(colors).expect("patterns use positive colors")
}

/// The periodic word `1 2 1 3 1 2 1 3 ...` of length `n`.
pub fn pattern_1213(n: usize) -> Coloring {
    coloring((0..n).map(|i| [1, 2, 1, 3][i % 4]).collect())
}

/// 4-coloring of `C_n` for `n = 1 (mod 4)`: `1 2 1 3 ... 1 2 1 3 4`.
pub fn cycle_pattern_mod4_1(n: usize) -> Coloring {
    assert!(n % 4 == 1 && n >= 5);
    let mut c = pattern_1213(n - 1).colors().to_vec();
    c.push(4);
    coloring(c)
}

/// 4-coloring of `C_n` for `n = 2 (mod 4)`: `1 2 1 3 ... 1 2 1 3 1 4`.
pub fn cycle_pattern_mod4_2(n: usize) -> Coloring {
    assert!(n % 4 == 2 && n >= 6);
    let mut c = pattern_1213(n - 2).colors().to_vec();
    c.extend([1, 4]);
    coloring(c)
}

/// 4-coloring of `C_{4k+3}` valid when `s_4 < floor(n / 2)`: colors 1 on
/// `i = 0 (mod 4)` and on `i = 2 (mod 4)` except `4k + 2`; colors 2 and 3
/// on the odd positions, swapping roles at `2k + 1`; color 4 on
/// `{2k + 1, 4k + 2}`.
pub fn cycle_pattern_mod4_3(k: usize) -> Coloring {
    assert!(k >= 1);
    let n = 4 * k + 3;
    let mid = 2 * k + 1;
    let c = (0..n)
        .map(|i| {
            if i == mid || i == 4 * k + 2 {
                4
            } else if i % 4 == 0 || i % 4 == 2 {
                1
            } else if (i % 4 == 3 && i < mid) || (i % 4 == 1 && i > mid) {
                2
            } else {
                3
            }
        })
        .collect();
    coloring(c)
}

/// 5-coloring of `C_n` for `n = 3 (mod 4)`: `1 2 1 3 ... 1 2 1 3 1 4 5`.
pub fn cycle_pattern_mod4_3_five(n: usize) -> Coloring {
    assert!(n % 4 == 3 && n >= 7);
    let mut c = pattern_1213(n - 3).colors().to_vec();
    c.extend([1, 4, 5]);
    coloring(c)
}

/// 4-coloring of `G_{2k}` in the vertex order of [`make_g2k`]: the path gets
/// `1 2 1 3 ...`, the pendant at `v_2` gets 1 and the one at `v_{2k-1}` gets 4.
pub fn g2k_pattern(k: usize) -> Coloring {
    let mut c = pattern_1213(2 * k).colors().to_vec();
    c.extend([1, 4]);
    coloring(c)
}
