mod common;

use common::arb_graph;
use proptest::prelude::*;
use unicwd::catalog::random_unigraph;
use unicwd::decomp::{compose, decompose, find_top_split, is_indecomposable_splitted, recompose, split_splitted};
use unicwd::{Graph, SplittedGraph};

/// Sizes `|A ∪ B|` of all top splits, by trying all 3^n assignments.
fn brute_split_sizes(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut sizes = Vec::new();
    let mut code = vec![0u8; n]; // 0 = R, 1 = A, 2 = B
    loop {
        let of = |c: u8| (0..n).filter(|&v| code[v] == c).collect::<Vec<_>>();
        let (r, a, b) = (of(0), of(1), of(2));
        let ok = !r.is_empty()
            && a.len() + b.len() > 0
            && a.iter().all(|&x| a.iter().all(|&y| x == y || g.adjacent(x, y)))
            && b.iter().all(|&x| b.iter().all(|&y| !g.adjacent(x, y)))
            && a.iter().all(|&x| r.iter().all(|&y| g.adjacent(x, y)))
            && b.iter().all(|&x| r.iter().all(|&y| !g.adjacent(x, y)));
        if ok {
            sizes.push(a.len() + b.len());
        }
        let mut i = 0;
        while i < n && code[i] == 2 {
            code[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        code[i] += 1;
    }
    sizes
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.sorted_names() == b.sorted_names() && a.sorted_edges() == b.sorted_edges()
}

#[test]
fn star_and_clique() {
    let star = Graph::star(3, "s");
    let d = decompose(&star);
    assert_eq!(d.k(), 4);
    assert!(d.tail.is_none());
    let c5 = Graph::cycle(5, "c");
    let d = decompose(&c5);
    assert_eq!(d.k(), 0);
    assert!(same_graph(d.tail.as_ref().unwrap(), &c5));
    let one = Graph::complete(1, "k");
    let d = decompose(&one);
    assert_eq!((d.k(), d.tail.as_ref().map(Graph::vertex_count)), (0, Some(1)));
    let d = decompose(&Graph::new());
    assert_eq!((d.k(), d.tail.is_none()), (0, true));
}

#[test]
fn composition_joins_clique_side_only() {
    let s = SplittedGraph::new(Graph::path(2, "s"), &["s0"], &["s1"]).unwrap();
    let h = Graph::empty(2, "h");
    let g = compose(&s, &h).unwrap();
    assert_eq!(g.edge_count(), 3);
    assert!(g.has_edge("s0", "h1") && !g.has_edge("s1", "h0"));
}

#[test]
fn generated_unigraphs_decompose_as_built() {
    for seed in 0..200 {
        let (g, r) = random_unigraph(seed, 60);
        let d = decompose(&g);
        assert!(d.same_shape(&r.decomposition), "seed {seed}");
        assert!(same_graph(&recompose(&d).unwrap(), &g), "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn top_split_is_minimal(g in arb_graph(8)) {
        let sizes = brute_split_sizes(&g);
        match find_top_split(&g) {
            None => prop_assert!(sizes.is_empty()),
            Some(t) => {
                prop_assert_eq!(Some(t.a.len() + t.b.len()), sizes.iter().copied().min());
                let a: Vec<&str> = t.a.iter().map(String::as_str).collect();
                let b: Vec<&str> = t.b.iter().map(String::as_str).collect();
                let mut piece: Vec<&str> = a.iter().chain(&b).copied().collect();
                piece.sort_unstable();
                let s = SplittedGraph::new(g.induced(&piece).unwrap(), &a, &b).unwrap();
                let rest = g.induced(&t.rest).unwrap();
                prop_assert!(same_graph(&compose(&s, &rest).unwrap(), &g));
            }
        }
    }

    #[test]
    fn degree_sum_bound(g in arb_graph(9), code in proptest::collection::vec(0u8..3, 9)) {
        let n = g.vertex_count();
        let a: Vec<usize> = (0..n).filter(|&v| code[v] == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| code[v] == 2).collect();
        let r: Vec<usize> = (0..n).filter(|&v| code[v] == 0).collect();
        let p = a.len() as i64;
        let lhs: i64 = a.iter().map(|&v| g.degree(v) as i64).sum::<i64>() - b.iter().map(|&v| g.degree(v) as i64).sum::<i64>();
        let bound = p * (p - 1) + p * r.len() as i64;
        prop_assert!(lhs <= bound);
        let split = a.iter().all(|&x| a.iter().all(|&y| x == y || g.adjacent(x, y)))
            && b.iter().all(|&x| b.iter().all(|&y| !g.adjacent(x, y)))
            && a.iter().all(|&x| r.iter().all(|&y| g.adjacent(x, y)))
            && b.iter().all(|&x| r.iter().all(|&y| !g.adjacent(x, y)));
        prop_assert_eq!(lhs == bound, split);
    }

    #[test]
    fn decomposition_recomposes(g in arb_graph(24)) {
        let d = decompose(&g);
        prop_assert!(same_graph(&recompose(&d).unwrap(), &g));
        for s in &d.components {
            prop_assert!(is_indecomposable_splitted(s));
        }
        if let Some(t) = d.tail.as_ref().filter(|t| t.vertex_count() > 1) {
            prop_assert!(!t.is_split());
            prop_assert!(find_top_split(t).is_none());
        }
    }

    #[test]
    fn splitted_decomposition_respects_parts(g in arb_graph(9)) {
        if let Some(sides) = g.split_sides() {
            let s = SplittedGraph::from_sides(g.clone(), sides).unwrap();
            match split_splitted(&s) {
                None => prop_assert!(is_indecomposable_splitted(&s)),
                Some((front, back)) => {
                    prop_assert!(is_indecomposable_splitted(&front));
                    let both = compose(&front, back.graph()).unwrap();
                    prop_assert!(same_graph(&both, &g));
                    for v in back.graph().vertices() {
                        prop_assert_eq!(back.side_of(v), s.side_of(v));
                    }
                    for v in front.graph().vertices() {
                        prop_assert_eq!(front.side_of(v), s.side_of(v));
                    }
                }
            }
        }
    }
}
