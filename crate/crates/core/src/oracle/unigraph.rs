//! Unigraph test by listing labeled realizations.

use super::guard;
use crate::error::OracleError;
use crate::graph::{DegreeSequence, Graph};
use crate::iso::is_isomorphic;

/// Calls `visit` on every labeled graph on `v0..` where `vi` has degree
/// `seq[i]`. Stops early when `visit` returns false.
fn each_realization(seq: &[usize], mut visit: impl FnMut(&[u32]) -> bool) {
    let n = seq.len();
    if seq.iter().any(|&d| d >= n.max(1)) && n > 0 {
        return;
    }
    let mut adj = vec![0u32; n];
    let mut left = seq.to_vec();
    // decide the pair (i, j), j > i, in row-major order
    fn go(i: usize, j: usize, n: usize, adj: &mut [u32], left: &mut [usize], visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if i == n {
            return visit(adj);
        }
        if j == n {
            return left[i] != 0 || go(i + 1, i + 2, n, adj, left, visit);
        }
        // vi still needs left[i] edges among vj..v(n-1)
        if left[i] > n - j {
            return true;
        }
        if left[i] > 0 && left[j] > 0 {
            left[i] -= 1;
            left[j] -= 1;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            let cont = go(i, j + 1, n, adj, left, visit);
            adj[i] &= !(1 << j);
            adj[j] &= !(1 << i);
            left[i] += 1;
            left[j] += 1;
            if !cont {
                return false;
            }
        }
        go(i, j + 1, n, adj, left, visit)
    }
    go(0, 1, n, &mut adj, &mut left, &mut visit);
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut g = Graph::empty(n, "v");
    for i in 0..n {
        for j in i + 1..n {
            if adj[i] >> j & 1 == 1 {
                g.add_edge_idx(i, j);
            }
        }
    }
    g
}

/// Every labeled realization of the sequence.
pub fn realizations(seq: &DegreeSequence) -> Result<Vec<Graph>, OracleError> {
    guard("realizations", 8, 10, seq.len())?;
    let mut out = Vec::new();
    each_realization(seq.as_slice(), |adj| {
        out.push(to_graph(adj));
        true
    });
    Ok(out)
}

/// True when the sequence has realizations and they are all isomorphic.
pub fn oracle_unigraph(seq: &DegreeSequence) -> Result<bool, OracleError> {
    guard("oracle_unigraph", 8, 10, seq.len())?;
    let mut first: Option<Graph> = None;
    let mut unique = true;
    each_realization(seq.as_slice(), |adj| {
        let g = to_graph(adj);
        match &first {
            None => first = Some(g),
            Some(f) => {
                if !is_isomorphic(f, &g) {
                    unique = false;
                    return false;
                }
            }
        }
        true
    });
    Ok(first.is_some() && unique)
}
