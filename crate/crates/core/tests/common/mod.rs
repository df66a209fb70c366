#![allow(dead_code)]

use proptest::prelude::*;
use unicwd::{Graph, KExpr};

/// Independent P4 test over every ordered 4-tuple.
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.vertex_count();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
                    if distinct
                        && g.adjacent(a, b)
                        && g.adjacent(b, c)
                        && g.adjacent(c, d)
                        && !g.adjacent(a, c)
                        && !g.adjacent(b, d)
                        && !g.adjacent(a, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Graph on `x0 ..` with the given edge bits over pairs `(i, j)`, `i < j`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n, "x");
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                g.add_edge(&format!("x{i}"), &format!("x{j}")).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Random valid k-expressions with distinct vertex names `w0 ..`.
pub fn arb_expr(max_label: u32, depth: u32) -> impl Strategy<Value = KExpr> {
    let leaf = (1..=max_label).prop_map(|l| KExpr::intro("tmp", l));
    let tree = leaf.prop_recursive(depth, 64, 4, move |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 2..4).prop_map(KExpr::union),
            (1..=max_label, 1..=max_label, inner.clone())
                .prop_filter("distinct join labels", |(a, b, _)| a != b)
                .prop_map(|(a, b, e)| KExpr::join(a, b, e)),
            (1..=max_label, 1..=max_label, inner).prop_map(|(a, b, e)| KExpr::relabel(a, b, e)),
        ]
    });
    tree.prop_map(|e| {
        let mut i = 0;
        e.renamed(|_| {
            i += 1;
            format!("w{}", i - 1)
        })
    })
}
