//! Composition of splitted graphs and the canonical decomposition.
//!
//! A top split of `G` is a triple `(A, B, R)` with `A` a clique, `B`
//! independent, every `A`-vertex adjacent to all of `R`, no edges between
//! `B` and `R`, `R` nonempty and `A ∪ B` nonempty. Then
//! `G = (G[A ∪ B], A, B) ∘ G[R]`.
//!
//! For disjoint `A`, `B` of sizes `p`, `q` and `r = n - p - q`,
//!
//! ```text
//! Σ_A deg - Σ_B deg = 2e(A) + e(A,R) - 2e(B) - e(B,R) <= p(p-1) + p·r
//! ```
//!
//! with equality exactly when `(A, B, R)` is a top split. The left side is
//! maximised by the `p` highest and `q` lowest degrees, so a split of sizes
//! `(p, q)` exists iff those degree sums meet the bound, and then any choice
//! of the top `p` and bottom `q` vertices is one.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, Side, SplittedGraph};
use crate::iso::{is_isomorphic, splitted_isomorphic};

/// `(A, B, R)` as sorted vertex names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopSplit {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub rest: Vec<String>,
}

/// Split components outermost first, then the optional nonsplit tail.
///
/// `components[0]` is the component numbered `k`, the last one is number 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub components: Vec<SplittedGraph>,
    pub tail: Option<Graph>,
}

impl CanonicalDecomposition {
    /// Number of split components.
    pub fn k(&self) -> usize {
        self.components.len()
    }

    /// True when both decompositions have pairwise isomorphic components in
    /// the same order and isomorphic tails.
    pub fn same_shape(&self, other: &CanonicalDecomposition) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(x, y)| splitted_isomorphic(x, y))
            && match (&self.tail, &other.tail) {
                (None, None) => true,
                (Some(x), Some(y)) => is_isomorphic(x, y),
                _ => false,
            }
    }
}

/// `(S, A, B) ∘ H`: the disjoint union plus every edge from `A` to `V(H)`.
pub fn compose(s: &SplittedGraph, h: &Graph) -> Result<Graph, GraphError> {
    let mut g = s.graph().disjoint_union(h)?;
    let offset = s.vertex_count();
    for a in s.part_indices(Side::Clique) {
        for v in 0..h.vertex_count() {
            g.add_edge_idx(a, offset + v);
        }
    }
    Ok(g)
}

pub fn compose_splitted(s1: &SplittedGraph, s2: &SplittedGraph) -> Result<SplittedGraph, GraphError> {
    let g = compose(s1, s2.graph())?;
    let sides = s1.sides().iter().chain(s2.sides()).copied().collect();
    SplittedGraph::from_sides(g, sides)
}

/// Minimal top split, or `None` when the graph has none.
///
/// Ties between splits of equal size go to the smallest sorted name tuple of
/// `A ∪ B`; equal-degree vertices are taken in name order.
pub fn find_top_split(g: &Graph) -> Option<TopSplit> {
    let alive: Vec<usize> = (0..g.vertex_count()).collect();
    let deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let (a, b) = minimal_split(g, &alive, &deg, None)?;
    let names = |vs: &[usize]| {
        let mut out: Vec<String> = vs.iter().map(|&v| g.name(v).to_string()).collect();
        out.sort();
        out
    };
    let rest: Vec<usize> = alive.iter().copied().filter(|v| !a.contains(v) && !b.contains(v)).collect();
    Some(TopSplit {
        a: names(&a),
        b: names(&b),
        rest: names(&rest),
    })
}

/// Repeatedly peels minimal top splits. A split core left at the end
/// becomes the last component; a nonsplit one becomes the tail.
///
/// A one-vertex graph decomposes as `k = 0` with tail `K1`. A one-vertex
/// core reached by peeling becomes the component `(K1, {v}, ∅)`.
pub fn decompose(g: &Graph) -> CanonicalDecomposition {
    let n = g.vertex_count();
    let mut components = Vec::new();
    if n <= 1 {
        return CanonicalDecomposition {
            components,
            tail: (n == 1).then(|| g.clone()),
        };
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut in_alive = vec![true; n];
    while let Some((a, b)) = minimal_split(g, &alive, &deg, None) {
        let mut piece: Vec<usize> = a.iter().chain(&b).copied().collect();
        piece.sort_unstable();
        for &v in &piece {
            in_alive[v] = false;
        }
        alive.retain(|&v| in_alive[v]);
        // rest vertices lose exactly their edges to A
        for &v in &alive {
            deg[v] -= a.len();
        }
        let s = g.induced_idx(&piece);
        let sides = s
            .vertices()
            .map(|name| {
                let i = g.index_of(name).expect("piece vertex");
                if a.contains(&i) {
                    Side::Clique
                } else {
                    Side::Independent
                }
            })
            .collect();
        components.push(SplittedGraph::from_sides(s, sides).expect("top split is a split partition"));
    }
    let core = g.induced_idx(&alive);
    let tail = if core.vertex_count() == 1 && !components.is_empty() {
        let s = SplittedGraph::from_sides(core, vec![Side::Clique]).expect("K1");
        components.push(s);
        None
    } else {
        match core.split_sides() {
            Some(sides) => {
                components.push(SplittedGraph::from_sides(core, sides).expect("certified split"));
                None
            }
            None => Some(core),
        }
    };
    CanonicalDecomposition { components, tail }
}

/// Left fold of `compose` from the tail outwards.
pub fn recompose(d: &CanonicalDecomposition) -> Result<Graph, GraphError> {
    let mut g = d.tail.clone().unwrap_or_default();
    for s in d.components.iter().rev() {
        g = compose(s, &g)?;
    }
    Ok(g)
}

/// A splitted graph is decomposable iff it equals `S1 ∘ S2` for nonempty
/// splitted graphs with parts inside its own parts.
pub fn is_indecomposable_splitted(s: &SplittedGraph) -> bool {
    let g = s.graph();
    let alive: Vec<usize> = (0..g.vertex_count()).collect();
    let deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    minimal_split(g, &alive, &deg, Some(s.sides())).is_none()
}

/// Splits an indecomposable splitted graph off the front, respecting the
/// given parts, if one exists. Returns `(S1, S2)` with `s = S1 ∘ S2`.
pub fn split_splitted(s: &SplittedGraph) -> Option<(SplittedGraph, SplittedGraph)> {
    let g = s.graph();
    let alive: Vec<usize> = (0..g.vertex_count()).collect();
    let deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let (a, b) = minimal_split(g, &alive, &deg, Some(s.sides()))?;
    let mut front: Vec<usize> = a.into_iter().chain(b).collect();
    front.sort_unstable();
    let back: Vec<usize> = alive.into_iter().filter(|v| !front.contains(v)).collect();
    Some((s.induced_idx(&front), s.induced_idx(&back)))
}

/// Core search over the vertices in `alive`, whose degrees inside the
/// induced subgraph are `deg`. With `sides`, `A` must come from the clique
/// part and `B` from the independent part.
fn minimal_split(
    g: &Graph,
    alive: &[usize],
    deg: &[usize],
    sides: Option<&[Side]>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = alive.len();
    if n < 2 {
        return None;
    }
    let allowed = |v: usize, side: Side| sides.is_none_or(|s| s[v] == side);
    // candidates for A by degree descending, for B by degree ascending,
    // equal degrees in name order
    let mut high: Vec<usize> = alive.iter().copied().filter(|&v| allowed(v, Side::Clique)).collect();
    high.sort_by(|&x, &y| deg[y].cmp(&deg[x]).then_with(|| g.name(x).cmp(g.name(y))));
    let mut low: Vec<usize> = alive.iter().copied().filter(|&v| allowed(v, Side::Independent)).collect();
    low.sort_by(|&x, &y| deg[x].cmp(&deg[y]).then_with(|| g.name(x).cmp(g.name(y))));

    let mut top = vec![0usize; high.len() + 1];
    for (i, &v) in high.iter().enumerate() {
        top[i + 1] = top[i] + deg[v];
    }
    let mut bottom = vec![0usize; low.len() + 1];
    for (i, &v) in low.iter().enumerate() {
        bottom[i + 1] = bottom[i] + deg[v];
    }

    for s in 1..n {
        let mut best: Option<(Vec<&str>, Vec<usize>, Vec<usize>)> = None;
        for p in 0..=s.min(high.len()) {
            let q = s - p;
            if q > low.len() {
                continue;
            }
            let r = n - s;
            // with sides fixed the two pools are disjoint; otherwise the
            // extreme sums only need p + q <= n, which holds
            if top[p] < bottom[q] || top[p] - bottom[q] != p * (p.saturating_sub(1)) + p * r {
                continue;
            }
            let a: Vec<usize> = high[..p].to_vec();
            let b: Vec<usize> = low.iter().copied().filter(|v| !a.contains(v)).take(q).collect();
            let mut key: Vec<&str> = a.iter().chain(&b).map(|&v| g.name(v)).collect();
            key.sort_unstable();
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, a, b));
            }
        }
        if let Some((_, a, b)) = best {
            return Some((a, b));
        }
    }
    None
}
