//! Backtracking isomorphism for small graphs.
//!
//! Vertices are first partitioned by color refinement run jointly on both
//! graphs; the search then only pairs vertices of equal refined color.

use std::collections::BTreeMap;

use crate::graph::{Graph, SplittedGraph};

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2, None, None).is_some()
}

/// Isomorphism of splitted graphs: the bijection must also preserve parts.
pub fn splitted_isomorphic(s1: &SplittedGraph, s2: &SplittedGraph) -> bool {
    let c1: Vec<u32> = s1.sides().iter().map(|&s| s as u32).collect();
    let c2: Vec<u32> = s2.sides().iter().map(|&s| s as u32).collect();
    find_isomorphism(s1.graph(), s2.graph(), Some(&c1), Some(&c2)).is_some()
}

/// Returns `map` with `map[u]` the image in `g2` of vertex `u` of `g1`.
/// Optional initial colors must be preserved by the bijection.
pub fn find_isomorphism(
    g1: &Graph,
    g2: &Graph,
    colors1: Option<&[u32]>,
    colors2: Option<&[u32]>,
) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let init1: Vec<u32> = colors1.map_or_else(|| vec![0; n], <[u32]>::to_vec);
    let init2: Vec<u32> = colors2.map_or_else(|| vec![0; n], <[u32]>::to_vec);
    let (c1, c2) = refine(g1, g2, &init1, &init2);

    let mut hist1 = BTreeMap::new();
    let mut hist2 = BTreeMap::new();
    for &c in &c1 {
        *hist1.entry(c).or_insert(0usize) += 1;
    }
    for &c in &c2 {
        *hist2.entry(c).or_insert(0usize) += 1;
    }
    if hist1 != hist2 {
        return None;
    }

    let order = search_order(g1, &c1, &hist1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn refine(g1: &Graph, g2: &Graph, init1: &[u32], init2: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut c1: Vec<u32> = init1.to_vec();
    let mut c2: Vec<u32> = init2.to_vec();
    let mut classes = usize::MAX;
    loop {
        let mut table: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let sig = |g: &Graph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let s1: Vec<_> = (0..g1.vertex_count()).map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.vertex_count()).map(|v| sig(g2, &c2, v)).collect();
        for s in s1.iter().chain(s2.iter()) {
            let next = table.len() as u32;
            table.entry(s.clone()).or_insert(next);
        }
        // renumber in key order so ids do not depend on visiting order
        for (i, v) in table.values_mut().enumerate() {
            *v = i as u32;
        }
        c1 = s1.iter().map(|s| table[s]).collect();
        c2 = s2.iter().map(|s| table[s]).collect();
        if table.len() == classes {
            return (c1, c2);
        }
        classes = table.len();
    }
}

fn search_order(g: &Graph, colors: &[u32], hist: &BTreeMap<u32, usize>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), hist[&colors[v]], v))
            .expect("unplaced vertex");
        placed[next] = true;
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[u32],
    c2: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for v in 0..g2.vertex_count() {
        if used[v] || c2[v] != c1[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g1.adjacent(u, x) == g2.adjacent(v, map[x]));
        if !consistent {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[v] = false;
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Side;

    #[test]
    fn basic_pairs() {
        let c5 = Graph::cycle(5, "c");
        assert!(is_isomorphic(&c5, &c5.complement()));
        assert!(!is_isomorphic(&Graph::complete(3, "k"), &Graph::path(3, "p")));
        let c6 = Graph::cycle(6, "x");
        let two_triangles = Graph::cycle(3, "a")
            .disjoint_union(&Graph::cycle(3, "b"))
            .unwrap();
        // same degree sequence, refinement alone cannot separate them
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn mapping_preserves_edges() {
        let g = Graph::from_edges(Vec::<String>::new(), [("a", "b"), ("b", "c"), ("c", "d"), ("b", "d")]).unwrap();
        let h = Graph::from_edges(Vec::<String>::new(), [("w", "x"), ("x", "y"), ("y", "z"), ("x", "z")])
            .unwrap();
        let h = h.renamed(|s| s.to_uppercase()).unwrap();
        let map = find_isomorphism(&g, &h, None, None).unwrap();
        for &(u, v) in g.edge_indices() {
            assert!(h.adjacent(map[u], map[v]));
        }
    }

    #[test]
    fn sides_are_respected() {
        let p = Graph::path(2, "p");
        let a = SplittedGraph::from_sides(p.clone(), vec![Side::Clique, Side::Independent]).unwrap();
        let b = SplittedGraph::from_sides(p.clone(), vec![Side::Independent, Side::Clique]).unwrap();
        let c = SplittedGraph::from_sides(p, vec![Side::Clique, Side::Clique]).unwrap();
        assert!(splitted_isomorphic(&a, &b));
        assert!(!splitted_isomorphic(&a, &c));
    }
}
