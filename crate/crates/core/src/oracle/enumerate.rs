//! All graphs on `n` vertices up to isomorphism.

use std::collections::HashMap;

use super::guard;
use crate::error::OracleError;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

type Invariant = Vec<(usize, Vec<usize>)>;

fn invariant(g: &Graph) -> Invariant {
    let mut inv: Invariant = (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// One representative per isomorphism class, on vertices `v0 .. v(n-1)`.
/// Each class on `n` vertices arises from one on `n - 1` vertices plus a
/// new vertex with some neighbourhood.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    guard("enumerate_graphs", 8, 9, n)?;
    let mut level = vec![Graph::new()];
    for m in 1..=n {
        let mut buckets: HashMap<Invariant, Vec<Graph>> = HashMap::new();
        let mut order: Vec<Invariant> = Vec::new();
        for base in &level {
            for nbrs in 0u32..1 << (m - 1) {
                let mut g = base.clone();
                g.add_vertex(format!("v{}", m - 1)).expect("fresh name");
                for w in 0..m - 1 {
                    if nbrs >> w & 1 == 1 {
                        g.add_edge_idx(w, m - 1);
                    }
                }
                let key = invariant(&g);
                let bucket = buckets.entry(key.clone()).or_insert_with(|| {
                    order.push(key);
                    Vec::new()
                });
                if !bucket.iter().any(|h| is_isomorphic(h, &g)) {
                    bucket.push(g);
                }
            }
        }
        level = order.iter().flat_map(|k| buckets.remove(k).expect("bucket")).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }
}
