//! Every maximal decomposition of a small graph, found by trying all
//! vertex subsets instead of degree arguments.

use std::collections::HashMap;

use super::{adjacency_masks, guard};
use crate::decomp::CanonicalDecomposition;
use crate::error::OracleError;
use crate::graph::{Graph, Side, SplittedGraph};

struct Masks {
    adj: Vec<u32>,
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

impl Masks {
    fn is_clique(&self, a: u32) -> bool {
        bits(a).all(|v| (self.adj[v] | 1 << v) & a == a)
    }

    fn is_independent(&self, b: u32) -> bool {
        bits(b).all(|v| self.adj[v] & b == 0)
    }

    /// `(A, B, R)` with `A` complete and `B` anticomplete to `R`.
    fn separates(&self, a: u32, b: u32, r: u32) -> bool {
        bits(a).all(|v| self.adj[v] & r == r) && bits(b).all(|v| self.adj[v] & r == 0)
    }

    fn is_top_split(&self, a: u32, b: u32, r: u32) -> bool {
        a | b != 0 && r != 0 && self.is_clique(a) && self.is_independent(b) && self.separates(a, b, r)
    }

    /// Calls `f(a, b)` for every top split of the subgraph on `x`.
    fn top_splits(&self, x: u32, mut f: impl FnMut(u32, u32)) {
        for_submasks(x, |ab| {
            for_submasks(ab, |a| {
                let b = ab & !a;
                if self.is_top_split(a, b, x & !ab) {
                    f(a, b);
                }
            });
        });
    }

    /// The splitted graph `(H, A, B)` with `H` on `a ∪ b` is indecomposable.
    fn indecomposable(&self, a: u32, b: u32) -> bool {
        let x = a | b;
        let mut found = false;
        for_submasks(a, |a1| {
            if found {
                return;
            }
            for_submasks(b, |b1| {
                let r = x & !(a1 | b1);
                if !found && a1 | b1 != 0 && r != 0 && self.separates(a1, b1, r) {
                    found = true;
                }
            });
        });
        !found
    }
}

/// Every submask of `m`, including `0` and `m`.
fn for_submasks(m: u32, mut f: impl FnMut(u32)) {
    let mut s = m;
    loop {
        f(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & m;
    }
}

fn splitted(g: &Graph, a: u32, b: u32) -> SplittedGraph {
    let idx: Vec<usize> = bits(a | b).collect();
    let sides = idx
        .iter()
        .map(|&v| if a >> v & 1 == 1 { Side::Clique } else { Side::Independent })
        .collect();
    SplittedGraph::from_sides(g.induced_idx(&idx), sides).expect("split partition")
}

fn push_distinct(out: &mut Vec<CanonicalDecomposition>, d: CanonicalDecomposition) {
    if !out.iter().any(|e| e.same_shape(&d)) {
        out.push(d);
    }
}

struct Enumerator<'a> {
    g: &'a Graph,
    masks: Masks,
    memo: HashMap<u32, Vec<CanonicalDecomposition>>,
}

impl Enumerator<'_> {
    fn run(&mut self, x: u32) -> Vec<CanonicalDecomposition> {
        if let Some(done) = self.memo.get(&x) {
            return done.clone();
        }
        let mut out = Vec::new();
        if x == 0 {
            out.push(CanonicalDecomposition {
                components: Vec::new(),
                tail: None,
            });
        } else {
            let mut splits = Vec::new();
            self.masks.top_splits(x, |a, b| splits.push((a, b)));
            for &(a, b) in &splits {
                if !self.masks.indecomposable(a, b) {
                    continue;
                }
                let piece = splitted(self.g, a, b);
                for rest in self.run(x & !(a | b)) {
                    let mut components = vec![piece.clone()];
                    components.extend(rest.components);
                    push_distinct(&mut out, CanonicalDecomposition { components, tail: rest.tail });
                }
            }
            let mut is_split = false;
            for_submasks(x, |a| {
                let b = x & !a;
                if self.masks.is_clique(a) && self.masks.is_independent(b) {
                    is_split = true;
                    if self.masks.indecomposable(a, b) {
                        // a lone final vertex counts as clique
                        let (a, b) = if x.count_ones() == 1 { (x, 0) } else { (a, b) };
                        push_distinct(
                            &mut out,
                            CanonicalDecomposition {
                                components: vec![splitted(self.g, a, b)],
                                tail: None,
                            },
                        );
                    }
                }
            });
            if !is_split && splits.is_empty() {
                out.push(CanonicalDecomposition {
                    components: Vec::new(),
                    tail: Some(self.g.induced_idx(&bits(x).collect::<Vec<_>>())),
                });
            }
        }
        self.memo.insert(x, out.clone());
        out
    }
}

/// All maximal decompositions of `g` into indecomposable pieces, one per
/// isomorphism shape. Uniqueness of the canonical decomposition means the
/// result has exactly one entry.
pub fn enumerate_decompositions(g: &Graph) -> Result<Vec<CanonicalDecomposition>, OracleError> {
    let n = g.vertex_count();
    guard("enumerate_decompositions", 10, 12, n)?;
    if n == 1 {
        return Ok(vec![CanonicalDecomposition {
            components: Vec::new(),
            tail: Some(g.clone()),
        }]);
    }
    let mut e = Enumerator {
        g,
        masks: Masks { adj: adjacency_masks(g) },
        memo: HashMap::new(),
    };
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok(e.run(full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::decompose;

    #[test]
    fn single_shapes() {
        for g in [
            Graph::cycle(5, "c"),
            Graph::path(4, "p"),
            Graph::complete(4, "k"),
            Graph::empty(3, "e"),
            Graph::star(3, "s"),
            Graph::new(),
        ] {
            let all = enumerate_decompositions(&g).unwrap();
            assert_eq!(all.len(), 1, "{g:?}");
            assert!(all[0].same_shape(&decompose(&g)), "{g:?}");
        }
    }
}
