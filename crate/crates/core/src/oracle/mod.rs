//! Exhaustive reference procedures for small graphs. They share no code
//! with the fast paths they check.
//!
//! Each procedure refuses inputs above a size guard. The environment
//! variable `UNICWD_MAX_ORACLE_N` raises or lowers every guard, up to a
//! hard cap per procedure.

mod cwd;
mod decomps;
mod enumerate;
mod unigraph;

pub use cwd::{cwd_interval, oracle_cwd_leq, CwdInterval, CwdOutcome, DEFAULT_CWD_BUDGET};
pub use decomps::enumerate_decompositions;
pub use enumerate::enumerate_graphs;
pub use unigraph::{oracle_unigraph, realizations};

use crate::error::OracleError;
use crate::graph::Graph;

pub const ENV_MAX_N: &str = "UNICWD_MAX_ORACLE_N";

/// Fails with [`OracleError::SizeGuard`] when `n` exceeds the limit for
/// `what`.
pub(crate) fn guard(what: &'static str, default: usize, cap: usize, n: usize) -> Result<(), OracleError> {
    let limit = std::env::var(ENV_MAX_N)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(default)
        .min(cap);
    if n > limit {
        Err(OracleError::SizeGuard { what, limit, n })
    } else {
        Ok(())
    }
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Independence number by scanning every vertex subset.
pub fn brute_mis(g: &Graph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    guard("brute_mis", 22, 26, n)?;
    let adj = adjacency_masks(g);
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    let mut best = 0;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let ok = independent[rest] && adj[low] as usize & rest == 0;
        independent[s] = ok;
        if ok {
            best = best.max(s.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Domination number by scanning every vertex subset.
pub fn brute_mds(g: &Graph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    guard("brute_mds", 22, 26, n)?;
    let closed: Vec<u32> = adjacency_masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | (1 << v))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dominated = vec![0u32; 1 << n];
    let mut best = n;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let d = dominated[s & (s - 1)] | closed[low];
        dominated[s] = d;
        if d == full {
            best = best.min(s.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Vertex cover number, `n` minus the independence number.
pub fn brute_vc(g: &Graph) -> Result<usize, OracleError> {
    Ok(g.vertex_count() - brute_mis(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_values() {
        let c5 = Graph::cycle(5, "c");
        assert_eq!(brute_mis(&c5).unwrap(), 2);
        assert_eq!(brute_vc(&c5).unwrap(), 3);
        assert_eq!(brute_mds(&c5).unwrap(), 2);
        let k4 = Graph::complete(4, "k");
        assert_eq!((brute_mis(&k4).unwrap(), brute_mds(&k4).unwrap()), (1, 1));
        let e3 = Graph::empty(3, "e");
        assert_eq!((brute_mis(&e3).unwrap(), brute_mds(&e3).unwrap()), (3, 3));
        assert_eq!(brute_mds(&Graph::new()).unwrap(), 0);
    }

    #[test]
    fn size_guard() {
        let big = Graph::empty(40, "x");
        assert!(matches!(brute_mis(&big), Err(OracleError::SizeGuard { n: 40, .. })));
    }
}
