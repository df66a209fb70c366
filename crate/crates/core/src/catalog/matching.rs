//! Structural matchers. Each matcher reads family parameters and a vertex
//! correspondence off the variant-normalised input; `verify` then rebuilds
//! the template and demands exact equality through the correspondence.

use std::collections::BTreeMap;

use super::{apply_variant, build_template, ComponentMatch, FamilySpec, Template, Variant};
use crate::decomp::{decompose, CanonicalDecomposition};
use crate::graph::{Graph, Side, SplittedGraph};

/// A decomposition with the catalog match of every piece, where one was
/// found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub decomposition: CanonicalDecomposition,
    /// Parallel to `decomposition.components`.
    pub matches: Vec<Option<ComponentMatch>>,
    /// Match of the tail; `None` also when there is no tail.
    pub tail_match: Option<ComponentMatch>,
}

impl Recognition {
    /// Every piece matched a catalog member.
    pub fn is_complete(&self) -> bool {
        self.matches.iter().all(Option::is_some) && (self.decomposition.tail.is_none() || self.tail_match.is_some())
    }

    /// Component number of each piece in report order: `k` down to 1 for
    /// the split components, 0 for the tail.
    pub fn piece_numbers(&self) -> Vec<usize> {
        let k = self.decomposition.k();
        let mut out: Vec<usize> = (1..=k).rev().collect();
        if self.decomposition.tail.is_some() {
            out.push(0);
        }
        out
    }
}

type Found = (FamilySpec, Vec<(String, usize)>);

pub fn recognize(g: &Graph) -> Recognition {
    let decomposition = decompose(g);
    let matches = decomposition.components.iter().map(match_split_component).collect();
    let tail_match = decomposition.tail.as_ref().and_then(match_nonsplit_component);
    Recognition {
        decomposition,
        matches,
        tail_match,
    }
}

/// `Some` iff every piece of the canonical decomposition is in the catalog.
pub fn is_unigraph(g: &Graph) -> Option<Recognition> {
    let r = recognize(g);
    r.is_complete().then_some(r)
}

pub fn match_split_component(s: &SplittedGraph) -> Option<ComponentMatch> {
    let matchers: [fn(&SplittedGraph) -> Vec<Found>; 4] = [match_k1, match_s2, match_s3, match_s4];
    for variant in Variant::SPLIT {
        let t = normalise_split(s, variant);
        for m in matchers {
            for (spec, corr) in m(&t) {
                if let Some(found) = verify(&spec, variant, &corr, s.graph(), Some(s)) {
                    return Some(found);
                }
            }
        }
    }
    None
}

/// Matches a tail. A one-vertex graph is accepted as `K1`.
pub fn match_nonsplit_component(g: &Graph) -> Option<ComponentMatch> {
    if g.vertex_count() == 1 {
        return Some(ComponentMatch {
            spec: FamilySpec::K1 { side: Side::Clique },
            variant: Variant::Identity,
            correspondence: vec![("a".into(), g.name(0).to_string())],
        });
    }
    let matchers: [fn(&Graph) -> Vec<Found>; 4] = [match_c5, match_mk2, match_u2, match_u3];
    for variant in Variant::NONSPLIT {
        let h = if variant == Variant::Complement {
            g.complement()
        } else {
            g.clone()
        };
        for m in matchers {
            for (spec, corr) in m(&h) {
                if let Some(found) = verify(&spec, variant, &corr, g, None) {
                    return Some(found);
                }
            }
        }
    }
    None
}

fn normalise_split(s: &SplittedGraph, v: Variant) -> SplittedGraph {
    match v {
        Variant::Identity => s.clone(),
        Variant::Inverse => s.inverse(),
        Variant::Complement => s.complement(),
        Variant::InverseComplement => s.inverse_complement(),
    }
}

/// Builds the variant of the template and checks it against `target`
/// vertex for vertex through `corr`.
fn verify(
    spec: &FamilySpec,
    variant: Variant,
    corr: &[(String, usize)],
    target: &Graph,
    sides: Option<&SplittedGraph>,
) -> Option<ComponentMatch> {
    let t = apply_variant(&build_template(spec).ok()?, variant).ok()?;
    let tg = t.graph();
    let n = target.vertex_count();
    if tg.vertex_count() != n || corr.len() != n || tg.edge_count() != target.edge_count() {
        return None;
    }
    let mut image = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for (name, x) in corr {
        let i = tg.index_of(name)?;
        if image[i] != usize::MAX || *x >= n || hit[*x] {
            return None;
        }
        image[i] = *x;
        hit[*x] = true;
    }
    if !tg.edge_indices().iter().all(|&(u, v)| target.adjacent(image[u], image[v])) {
        return None;
    }
    if let (Template::Split(ts), Some(s)) = (&t, sides) {
        if !(0..n).all(|i| ts.side(i) == s.side(image[i])) {
            return None;
        }
    }
    Some(ComponentMatch {
        spec: spec.clone(),
        variant,
        correspondence: corr.iter().map(|(t, x)| (t.clone(), target.name(*x).to_string())).collect(),
    })
}

fn by_name<'a>(g: &'a Graph) -> impl Fn(&usize, &usize) -> std::cmp::Ordering + 'a {
    move |&x, &y| g.name(x).cmp(g.name(y))
}

fn match_k1(t: &SplittedGraph) -> Vec<Found> {
    if t.vertex_count() != 1 {
        return vec![];
    }
    vec![(FamilySpec::K1 { side: t.side(0) }, vec![("a".into(), 0)])]
}

/// Reads an `S2` off a splitted graph; indices refer to `t`.
fn s2_parts(t: &SplittedGraph) -> Option<(Vec<(usize, usize)>, Vec<(String, usize)>)> {
    let g = t.graph();
    let centers = t.part_indices(Side::Clique);
    let leaves = t.part_indices(Side::Independent);
    if centers.len() < 2 || leaves.iter().any(|&b| g.degree(b) != 1) {
        return None;
    }
    let own = |c: usize| -> Vec<usize> {
        let mut v: Vec<usize> = g.neighbors(c).iter().copied().filter(|&x| t.side(x) == Side::Independent).collect();
        v.sort_by(by_name(g));
        v
    };
    let mut order: Vec<(usize, Vec<usize>)> = centers.iter().map(|&c| (c, own(c))).collect();
    if order.iter().any(|(_, l)| l.is_empty()) {
        return None;
    }
    order.sort_by(|(x, lx), (y, ly)| ly.len().cmp(&lx.len()).then_with(|| g.name(*x).cmp(g.name(*y))));
    let mut corr = Vec::with_capacity(t.vertex_count());
    let mut counts: BTreeMap<std::cmp::Reverse<usize>, usize> = BTreeMap::new();
    for (j, (c, ls)) in order.iter().enumerate() {
        corr.push((format!("c{j}"), *c));
        for (i, &l) in ls.iter().enumerate() {
            corr.push((format!("l{j}_{i}"), l));
        }
        *counts.entry(std::cmp::Reverse(ls.len())).or_default() += 1;
    }
    let pairs = counts.into_iter().map(|(std::cmp::Reverse(p), q)| (p, q)).collect();
    Some((pairs, corr))
}

fn match_s2(t: &SplittedGraph) -> Vec<Found> {
    s2_parts(t)
        .map(|(pairs, corr)| (FamilySpec::S2 { pairs }, corr))
        .into_iter()
        .collect()
}

/// `(p, q1, q2, correspondence)` with `v` taken to be `v`.
fn s3_parts(t: &SplittedGraph, v: usize) -> Option<(usize, usize, usize, Vec<(String, usize)>)> {
    let keep: Vec<usize> = (0..t.vertex_count()).filter(|&x| x != v).collect();
    let rest = t.induced_idx(&keep);
    let (pairs, corr) = s2_parts(&rest)?;
    let [(big, q2), (p, q1)] = pairs[..] else { return None };
    if big != p + 1 {
        return None;
    }
    let g = t.graph();
    let mut corr: Vec<(String, usize)> = corr
        .into_iter()
        .map(|(name, x)| (name, g.index_of(rest.graph().name(x)).expect("kept vertex")))
        .collect();
    corr.push(("v".into(), v));
    Some((p, q1, q2, corr))
}

fn match_s3(t: &SplittedGraph) -> Vec<Found> {
    let g = t.graph();
    let special: Vec<usize> = t
        .part_indices(Side::Independent)
        .into_iter()
        .filter(|&b| g.degree(b) >= 2)
        .collect();
    let [v] = special[..] else { return vec![] };
    s3_parts(t, v)
        .map(|(p, q1, q2, corr)| (FamilySpec::S3 { p, q1, q2 }, corr))
        .into_iter()
        .collect()
}

fn match_s4(t: &SplittedGraph) -> Vec<Found> {
    let g = t.graph();
    let independent = t.part_indices(Side::Independent);
    let mut out = Vec::new();
    for u in t.part_indices(Side::Clique) {
        let missing: Vec<usize> = independent.iter().copied().filter(|&b| !g.adjacent(u, b)).collect();
        let [v] = missing[..] else { continue };
        let keep: Vec<usize> = (0..t.vertex_count()).filter(|&x| x != u).collect();
        let rest = t.induced_idx(&keep);
        let v_rest = rest.graph().index_of(g.name(v)).expect("kept vertex");
        let Some((p, 2, q, corr)) = s3_parts(&rest, v_rest) else { continue };
        let mut corr: Vec<(String, usize)> = corr
            .into_iter()
            .map(|(name, x)| (name, g.index_of(rest.graph().name(x)).expect("kept vertex")))
            .collect();
        corr.push(("u".into(), u));
        out.push((FamilySpec::S4 { p, q }, corr));
    }
    out
}

fn match_c5(h: &Graph) -> Vec<Found> {
    if h.vertex_count() != 5 || (0..5).any(|v| h.degree(v) != 2) || !h.is_connected() {
        return vec![];
    }
    let start = (0..5).min_by(by_name(h)).expect("five vertices");
    let mut corr = vec![("c0".to_string(), start)];
    let mut prev = start;
    let mut cur = *h.neighbors(start).iter().min_by(|x, y| h.name(**x).cmp(h.name(**y))).expect("degree 2");
    for i in 1..5 {
        corr.push((format!("c{i}"), cur));
        let next = *h.neighbors(cur).iter().find(|&&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    vec![(FamilySpec::C5, corr)]
}

/// Pairs up degree-one vertices as `a{i} b{i}`, lower name first.
fn matching_corr(h: &Graph, vs: &[usize]) -> Option<Vec<(String, usize)>> {
    let mut pairs = Vec::new();
    for &x in vs {
        let &y = h.neighbors(x).iter().next()?;
        if h.degree(x) != 1 || h.degree(y) != 1 {
            return None;
        }
        if h.name(x) < h.name(y) {
            pairs.push((x, y));
        }
    }
    if pairs.len() * 2 != vs.len() {
        return None;
    }
    pairs.sort_by(|a, b| h.name(a.0).cmp(h.name(b.0)));
    Some(
        pairs
            .into_iter()
            .enumerate()
            .flat_map(|(i, (x, y))| [(format!("a{i}"), x), (format!("b{i}"), y)])
            .collect(),
    )
}

fn match_mk2(h: &Graph) -> Vec<Found> {
    let n = h.vertex_count();
    if n < 4 || n % 2 == 1 {
        return vec![];
    }
    let all: Vec<usize> = (0..n).collect();
    matching_corr(h, &all)
        .map(|corr| (FamilySpec::MK2 { m: n / 2 }, corr))
        .into_iter()
        .collect()
}

fn match_u2(h: &Graph) -> Vec<Found> {
    let n = h.vertex_count();
    let hubs: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 2).collect();
    let [c] = hubs[..] else { return vec![] };
    let s = h.degree(c);
    if n < s + 3 || (n - s - 1) % 2 == 1 {
        return vec![];
    }
    let mut leaves: Vec<usize> = h.neighbors(c).iter().copied().collect();
    leaves.sort_by(by_name(h));
    let others: Vec<usize> = (0..n).filter(|&v| v != c && !h.adjacent(v, c)).collect();
    let Some(mut corr) = matching_corr(h, &others) else { return vec![] };
    corr.push(("s0".into(), c));
    corr.extend(leaves.iter().enumerate().map(|(i, &l)| (format!("s{}", i + 1), l)));
    vec![(FamilySpec::U2 { m: (n - s - 1) / 2, s }, corr)]
}

fn match_u3(h: &Graph) -> Vec<Found> {
    let n = h.vertex_count();
    if n < 6 || n % 2 == 1 {
        return vec![];
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| h.degree(v) != 2).collect();
    let [w] = hubs[..] else { return vec![] };
    if h.degree(w) != n - 2 {
        return vec![];
    }
    let nbrs: Vec<usize> = h.neighbors(w).iter().copied().collect();
    let mut xs: Vec<usize> = nbrs
        .iter()
        .copied()
        .filter(|&x| !nbrs.iter().any(|&z| h.adjacent(x, z)))
        .collect();
    if xs.len() != 2 {
        return vec![];
    }
    xs.sort_by(by_name(h));
    let Some(y) = (0..n).find(|&v| v != w && !h.adjacent(v, w)) else { return vec![] };
    let mut tri: Vec<(usize, usize)> = Vec::new();
    for &a in &nbrs {
        if xs.contains(&a) {
            continue;
        }
        let Some(&b) = h.neighbors(a).iter().find(|&&b| b != w) else { return vec![] };
        if h.name(a) < h.name(b) {
            tri.push((a, b));
        }
    }
    tri.sort_by(|a, b| h.name(a.0).cmp(h.name(b.0)));
    let mut corr = vec![("w".to_string(), w), ("x0".into(), xs[0]), ("x1".into(), xs[1]), ("y".into(), y)];
    for (i, (a, b)) in tri.into_iter().enumerate() {
        corr.push((format!("p{i}"), a));
        corr.push((format!("r{i}"), b));
    }
    vec![(FamilySpec::U3 { m: (n - 4) / 2 }, corr)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_matches() {
        let p4 = SplittedGraph::new(Graph::path(4, "p"), &["p1", "p2"], &["p0", "p3"]).unwrap();
        let m = match_split_component(&p4).unwrap();
        assert_eq!(m.spec, FamilySpec::S2 { pairs: vec![(1, 2)] });
        assert_eq!(m.variant, Variant::Identity);

        // K_{p+1} with a p-clique and one universal independent vertex is the
        // inverse of a single star, which splits further and is no component
        let k4 = Graph::complete(4, "k");
        let s = SplittedGraph::new(k4, &["k0", "k1", "k2"], &["k3"]).unwrap();
        assert!(match_split_component(&s).is_none());

        let two_stars = build_template(&FamilySpec::S2 { pairs: vec![(2, 1), (1, 1)] }).unwrap();
        let Template::Split(inv) = apply_variant(&two_stars, Variant::Inverse).unwrap() else { unreachable!() };
        let m = match_split_component(&inv).unwrap();
        assert_eq!(m.spec, FamilySpec::S2 { pairs: vec![(2, 1), (1, 1)] });
        assert_eq!(m.variant, Variant::Inverse);
    }

    #[test]
    fn nonsplit_matches() {
        let m = match_nonsplit_component(&Graph::cycle(5, "c")).unwrap();
        assert_eq!((m.spec, m.variant), (FamilySpec::C5, Variant::Identity));
        let three_k2 = Graph::from_edges(Vec::<String>::new(), [("a", "b"), ("c", "d"), ("e", "f")]).unwrap();
        let m = match_nonsplit_component(&three_k2).unwrap();
        assert_eq!(m.spec, FamilySpec::MK2 { m: 3 });
        let u3 = build_template(&FamilySpec::U3 { m: 1 }).unwrap();
        let m = match_nonsplit_component(u3.graph()).unwrap();
        assert_eq!((m.spec, m.variant), (FamilySpec::U3 { m: 1 }, Variant::Identity));
        assert!(match_nonsplit_component(&Graph::cycle(6, "c")).is_none());
    }

    #[test]
    fn non_unigraph_with_sequence_32221() {
        let f = Graph::from_edges(
            Vec::<String>::new(),
            [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("d", "e")],
        )
        .unwrap();
        assert_eq!(f.degree_sequence().as_slice(), &[3, 2, 2, 2, 1]);
        assert!(is_unigraph(&f).is_none());
        assert!(is_unigraph(&Graph::with_vertices(["z"]).unwrap()).is_some());
    }

    #[test]
    fn every_template_variant_round_trips() {
        let specs = [
            FamilySpec::K1 { side: Side::Independent },
            FamilySpec::S2 { pairs: vec![(3, 1), (1, 2)] },
            FamilySpec::S3 { p: 2, q1: 3, q2: 1 },
            FamilySpec::S4 { p: 1, q: 2 },
        ];
        for spec in specs {
            for v in Variant::SPLIT {
                let Template::Split(s) = apply_variant(&build_template(&spec).unwrap(), v).unwrap() else {
                    unreachable!()
                };
                let m = match_split_component(&s).unwrap();
                let back = apply_variant(&build_template(&m.spec).unwrap(), m.variant).unwrap();
                assert_eq!(back.graph().edge_count(), s.graph().edge_count());
                if spec.name() != "K1" {
                    assert_eq!((&m.spec, m.variant), (&spec, v));
                }
            }
        }
    }
}
