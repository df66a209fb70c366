//! The catalog of indecomposable unigraph components.
//!
//! Split components are `K1`, `S2`, `S3`, `S4` or one of their complement,
//! inverse and inverse-complement variants. A nonsplit tail is `C5`, `mK2`,
//! `U2`, `U3` or a complement of one of them.

mod matching;
mod random;

use std::fmt;

use serde::Serialize;

use crate::error::CatalogError;
use crate::graph::{DegreeSequence, Graph, Side, SplittedGraph};

pub use matching::{is_unigraph, match_nonsplit_component, match_split_component, recognize, Recognition};
pub use random::random_unigraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    K1 { side: Side },
    /// Stars `K_{1,p}` given as `(p, q)` pairs, `q` copies each, with all
    /// centers pairwise adjacent. Pairs are strictly decreasing in `p`.
    S2 { pairs: Vec<(usize, usize)> },
    S3 { p: usize, q1: usize, q2: usize },
    S4 { p: usize, q: usize },
    C5,
    MK2 { m: usize },
    U2 { m: usize, s: usize },
    U3 { m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Variant {
    Identity,
    Inverse,
    Complement,
    InverseComplement,
}

/// A built template: split families carry their bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Template {
    Split(SplittedGraph),
    Nonsplit(Graph),
}

/// A catalog member together with how it was recognised. `correspondence`
/// pairs each template vertex name with the input vertex name it maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMatch {
    pub spec: FamilySpec,
    pub variant: Variant,
    pub correspondence: Vec<(String, String)>,
}

impl Variant {
    pub const SPLIT: [Variant; 4] = [
        Variant::Identity,
        Variant::Inverse,
        Variant::Complement,
        Variant::InverseComplement,
    ];
    pub const NONSPLIT: [Variant; 2] = [Variant::Identity, Variant::Complement];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Identity => "identity",
            Variant::Inverse => "inverse",
            Variant::Complement => "complement",
            Variant::InverseComplement => "inverseComplement",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::K1 { .. } => "K1",
            FamilySpec::S2 { .. } => "S2",
            FamilySpec::S3 { .. } => "S3",
            FamilySpec::S4 { .. } => "S4",
            FamilySpec::C5 => "C5",
            FamilySpec::MK2 { .. } => "mK2",
            FamilySpec::U2 { .. } => "U2",
            FamilySpec::U3 { .. } => "U3",
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(
            self,
            FamilySpec::K1 { .. } | FamilySpec::S2 { .. } | FamilySpec::S3 { .. } | FamilySpec::S4 { .. }
        )
    }

    /// Parameters in the family's own notation, e.g. `(3,1;1,2)` for `S2`.
    pub fn params(&self) -> String {
        match self {
            FamilySpec::K1 { side: Side::Clique } => "(clique)".into(),
            FamilySpec::K1 { side: Side::Independent } => "(independent)".into(),
            FamilySpec::S2 { pairs } => {
                let inner: Vec<String> = pairs.iter().map(|(p, q)| format!("{p},{q}")).collect();
                format!("({})", inner.join(";"))
            }
            FamilySpec::S3 { p, q1, q2 } => format!("({p},{q1};{q2})"),
            FamilySpec::S4 { p, q } => format!("({p},{q})"),
            FamilySpec::C5 => "()".into(),
            FamilySpec::MK2 { m } | FamilySpec::U3 { m } => format!("({m})"),
            FamilySpec::U2 { m, s } => format!("({m},{s})"),
        }
    }

    /// Vertex count of the template.
    pub fn size(&self) -> usize {
        match self {
            FamilySpec::K1 { .. } => 1,
            FamilySpec::S2 { pairs } => pairs.iter().map(|(p, q)| q * (p + 1)).sum(),
            FamilySpec::S3 { p, q1, q2 } => q1 * (p + 1) + q2 * (p + 2) + 1,
            FamilySpec::S4 { p, q } => 2 * (p + 1) + q * (p + 2) + 2,
            FamilySpec::C5 => 5,
            FamilySpec::MK2 { m } => 2 * m,
            FamilySpec::U2 { m, s } => 2 * m + s + 1,
            FamilySpec::U3 { m } => 4 + 2 * m,
        }
    }

    pub fn check(&self) -> Result<(), CatalogError> {
        let bound = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(CatalogError::ParameterBound(format!("{}: {msg}", self.name())))
            }
        };
        match self {
            FamilySpec::K1 { .. } | FamilySpec::C5 => Ok(()),
            FamilySpec::S2 { pairs } => {
                bound(!pairs.is_empty(), "t >= 1")?;
                bound(pairs.iter().all(|&(p, q)| p >= 1 && q >= 1), "p_i >= 1 and q_i >= 1")?;
                bound(pairs.iter().map(|&(_, q)| q).sum::<usize>() >= 2, "q_1 + ... + q_t >= 2")?;
                bound(pairs.windows(2).all(|w| w[0].0 > w[1].0), "p_i strictly decreasing")
            }
            FamilySpec::S3 { p, q1, q2 } => bound(*p >= 1 && *q1 >= 2 && *q2 >= 1, "p >= 1, q1 >= 2, q2 >= 1"),
            FamilySpec::S4 { p, q } => bound(*p >= 1 && *q >= 1, "p >= 1, q >= 1"),
            FamilySpec::MK2 { m } => bound(*m >= 2, "m >= 2"),
            FamilySpec::U2 { m, s } => bound(*m >= 1 && *s >= 2, "m >= 1, s >= 2"),
            FamilySpec::U3 { m } => bound(*m >= 1, "m >= 1"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name(), self.params())
    }
}

impl Template {
    pub fn graph(&self) -> &Graph {
        match self {
            Template::Split(s) => s.graph(),
            Template::Nonsplit(g) => g,
        }
    }
}

/// Star sizes of an `S2` in non-increasing order, one entry per star.
pub(crate) fn star_sizes(pairs: &[(usize, usize)]) -> Vec<usize> {
    pairs.iter().flat_map(|&(p, q)| std::iter::repeat_n(p, q)).collect()
}

/// Centers are `c{j}`, the leaves of center `j` are `l{j}_{i}`, stars in
/// non-increasing size order.
fn s2_graph(sizes: &[usize]) -> (Graph, Vec<Side>) {
    let mut g = Graph::new();
    let mut sides = Vec::new();
    let centers: Vec<usize> = (0..sizes.len())
        .map(|j| {
            sides.push(Side::Clique);
            g.add_vertex(format!("c{j}")).expect("fresh name")
        })
        .collect();
    for (j, &p) in sizes.iter().enumerate() {
        for i in 0..p {
            let leaf = g.add_vertex(format!("l{j}_{i}")).expect("fresh name");
            sides.push(Side::Independent);
            g.add_edge_idx(centers[j], leaf);
        }
    }
    for (x, &a) in centers.iter().enumerate() {
        for &b in &centers[x + 1..] {
            g.add_edge_idx(a, b);
        }
    }
    (g, sides)
}

pub fn build_template(spec: &FamilySpec) -> Result<Template, CatalogError> {
    spec.check()?;
    let split = |g: Graph, sides: Vec<Side>| Template::Split(SplittedGraph::from_sides(g, sides).expect("template is split"));
    Ok(match spec {
        FamilySpec::K1 { side } => split(Graph::with_vertices(["a"]).expect("fresh"), vec![*side]),
        FamilySpec::S2 { pairs } => {
            let (g, sides) = s2_graph(&star_sizes(pairs));
            split(g, sides)
        }
        FamilySpec::S3 { p, q1, q2 } => {
            let (g, sides) = s3_graph(*p, *q1, *q2);
            split(g, sides)
        }
        FamilySpec::S4 { p, q } => {
            let (mut g, mut sides) = s3_graph(*p, 2, *q);
            let v = g.index_of("v").expect("S3 has v");
            let u = g.add_vertex("u").expect("fresh");
            sides.push(Side::Clique);
            for x in 0..u {
                if x != v {
                    g.add_edge_idx(u, x);
                }
            }
            split(g, sides)
        }
        FamilySpec::C5 => Template::Nonsplit(Graph::cycle(5, "c")),
        FamilySpec::MK2 { m } => Template::Nonsplit(matching_graph(*m)),
        FamilySpec::U2 { m, s } => {
            let star = Graph::star(*s, "s");
            Template::Nonsplit(matching_graph(*m).disjoint_union(&star).expect("fresh names"))
        }
        FamilySpec::U3 { m } => {
            // C4 w-x0-y-x1-w, triangles w-p{i}-r{i}
            let mut edges = vec![
                ("w".to_string(), "x0".to_string()),
                ("x0".into(), "y".into()),
                ("y".into(), "x1".into()),
                ("x1".into(), "w".into()),
            ];
            for i in 0..*m {
                edges.push(("w".into(), format!("p{i}")));
                edges.push(("w".into(), format!("r{i}")));
                edges.push((format!("p{i}"), format!("r{i}")));
            }
            Template::Nonsplit(Graph::from_edges(Vec::<String>::new(), edges).expect("template edges"))
        }
    })
}

/// `S2(p+1, q2; p, q1)` plus `v` adjacent to the `q1` centers of size `p`.
fn s3_graph(p: usize, q1: usize, q2: usize) -> (Graph, Vec<Side>) {
    let sizes = star_sizes(&[(p + 1, q2), (p, q1)]);
    let (mut g, mut sides) = s2_graph(&sizes);
    let v = g.add_vertex("v").expect("fresh");
    sides.push(Side::Independent);
    for j in q2..q2 + q1 {
        let c = g.index_of(&format!("c{j}")).expect("center");
        g.add_edge_idx(v, c);
    }
    (g, sides)
}

/// `a{i} b{i}` for `i < m`.
fn matching_graph(m: usize) -> Graph {
    let edges: Vec<(String, String)> = (0..m).map(|i| (format!("a{i}"), format!("b{i}"))).collect();
    Graph::from_edges(Vec::<String>::new(), edges).expect("template edges")
}

pub fn apply_variant(t: &Template, v: Variant) -> Result<Template, CatalogError> {
    Ok(match (t, v) {
        (_, Variant::Identity) => t.clone(),
        (Template::Split(s), Variant::Inverse) => Template::Split(s.inverse()),
        (Template::Split(s), Variant::Complement) => Template::Split(s.complement()),
        (Template::Split(s), Variant::InverseComplement) => Template::Split(s.inverse_complement()),
        (Template::Nonsplit(g), Variant::Complement) => Template::Nonsplit(g.complement()),
        (Template::Nonsplit(_), other) => return Err(CatalogError::IllegalVariant(other.name())),
    })
}

/// Upper bound on the width of the synthesized expression for a piece:
/// split clique-width for split families, clique-width for tails.
pub fn width_bound(spec: &FamilySpec, v: Variant) -> usize {
    let complemented = matches!(v, Variant::Complement | Variant::InverseComplement);
    match spec {
        FamilySpec::K1 { .. } => 1,
        FamilySpec::S2 { .. } | FamilySpec::S3 { .. } => {
            if complemented {
                4
            } else {
                3
            }
        }
        FamilySpec::S4 { .. } => {
            if complemented {
                5
            } else {
                4
            }
        }
        FamilySpec::C5 | FamilySpec::U3 { .. } => 3,
        FamilySpec::MK2 { .. } | FamilySpec::U2 { .. } => 2,
    }
}

/// Highest-degree-first greedy realization with vertices `v0..`; vertex
/// `v{i}` receives degree `seq[i]`.
pub fn havel_hakimi(seq: &DegreeSequence) -> Option<Graph> {
    let n = seq.len();
    let mut g = Graph::with_vertices((0..n).map(|i| format!("v{i}"))).expect("fresh names");
    let mut left: Vec<usize> = seq.as_slice().to_vec();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&i| left[i] > 0).collect();
        if order.is_empty() {
            return Some(g);
        }
        order.sort_by(|&x, &y| left[y].cmp(&left[x]).then(x.cmp(&y)));
        let u = order[0];
        let d = left[u];
        if d > order.len() - 1 {
            return None;
        }
        left[u] = 0;
        for &w in &order[1..=d] {
            left[w] -= 1;
            g.add_edge_idx(u, w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(spec: FamilySpec) -> SplittedGraph {
        match build_template(&spec).unwrap() {
            Template::Split(s) => s,
            Template::Nonsplit(_) => panic!("split family"),
        }
    }

    #[test]
    fn template_shapes() {
        let u2 = build_template(&FamilySpec::U2 { m: 1, s: 2 }).unwrap();
        assert_eq!(u2.graph().degree_sequence().as_slice(), &[2, 1, 1, 1, 1]);
        let p4 = split(FamilySpec::S2 { pairs: vec![(1, 2)] });
        assert_eq!(p4.clique().len(), 2);
        assert_eq!(p4.graph().edge_count(), 3);
        assert!(crate::iso::is_isomorphic(p4.graph(), &Graph::path(4, "p")));
        let u3 = build_template(&FamilySpec::U3 { m: 1 }).unwrap();
        assert_eq!(u3.graph().degree_sequence().as_slice(), &[4, 2, 2, 2, 2, 2]);
        for m in 1..=10 {
            let g = build_template(&FamilySpec::U3 { m }).unwrap();
            let high: Vec<usize> = g.graph().degree_sequence().as_slice().iter().copied().filter(|&d| d > 2).collect();
            assert_eq!(high, vec![2 * m + 2]);
        }
        let s4 = split(FamilySpec::S4 { p: 1, q: 1 });
        assert_eq!(s4.vertex_count(), FamilySpec::S4 { p: 1, q: 1 }.size());
        assert!(!s4.graph().has_edge("u", "v"));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(build_template(&FamilySpec::S2 { pairs: vec![(2, 1)] }).is_err());
        assert!(build_template(&FamilySpec::S2 { pairs: vec![(1, 1), (2, 1)] }).is_err());
        assert!(build_template(&FamilySpec::S3 { p: 1, q1: 1, q2: 1 }).is_err());
        assert!(build_template(&FamilySpec::MK2 { m: 1 }).is_err());
        let err = build_template(&FamilySpec::U2 { m: 1, s: 1 }).unwrap_err();
        assert!(err.to_string().contains("s >= 2"));
    }

    #[test]
    fn variants() {
        let c5 = build_template(&FamilySpec::C5).unwrap();
        let cc5 = apply_variant(&c5, Variant::Complement).unwrap();
        assert!(crate::iso::is_isomorphic(c5.graph(), cc5.graph()));
        assert!(apply_variant(&c5, Variant::Inverse).is_err());
        let c4 = apply_variant(&build_template(&FamilySpec::MK2 { m: 2 }).unwrap(), Variant::Complement).unwrap();
        assert!(crate::iso::is_isomorphic(c4.graph(), &Graph::cycle(4, "q")));
        // inverse of P4: the K1,1 stars become independent, leaves form a clique
        let inv = apply_variant(&build_template(&FamilySpec::S2 { pairs: vec![(1, 2)] }).unwrap(), Variant::Inverse)
            .unwrap();
        assert_eq!(inv.graph().edge_count(), 3);
    }

    #[test]
    fn havel_hakimi_cases() {
        let g = havel_hakimi(&DegreeSequence::new(vec![3, 2, 2, 2, 1])).unwrap();
        assert_eq!(g.degree_sequence().as_slice(), &[3, 2, 2, 2, 1]);
        let g = havel_hakimi(&DegreeSequence::new(vec![1, 1])).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(havel_hakimi(&DegreeSequence::new(vec![3, 1])).is_none());
        assert!(havel_hakimi(&DegreeSequence::new(vec![1])).is_none());
        assert_eq!(havel_hakimi(&DegreeSequence::new(vec![])).unwrap().vertex_count(), 0);
    }
}
