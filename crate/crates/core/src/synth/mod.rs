//! Expression synthesis for unigraphs: one expression per catalog piece,
//! glued along the canonical decomposition.
//!
//! Split pieces use at most five labels, tails at most three, and gluing at
//! most four, so the result never needs more than five.

mod nonsplit;
mod split;

use std::collections::HashMap;

use serde::Serialize;

use crate::catalog::{apply_variant, build_template, recognize, ComponentMatch, Recognition, Template, Variant};
use crate::decomp::{compose, compose_splitted};
use crate::error::SynthError;
use crate::graph::{Graph, SplittedGraph};
use crate::kexpr::KExpr;

pub use nonsplit::synth_cograph;

/// An expression that builds `target` with its clique labeled 1 and its
/// independent set labeled 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitExpr {
    pub expr: KExpr,
    pub target: SplittedGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentWidth {
    /// `k..1` for split components, 0 for the tail.
    pub index: usize,
    pub family: String,
    pub params: String,
    pub variant: Variant,
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SynthesisReport {
    pub total_width: usize,
    pub components: Vec<ComponentWidth>,
}

/// The variant template renamed into input names.
fn realise(m: &ComponentMatch) -> Result<(Template, HashMap<String, String>), SynthError> {
    let map: HashMap<String, String> = m.correspondence.iter().cloned().collect();
    let t = apply_variant(&build_template(&m.spec).map_err(|_| SynthError::WrongKind("catalog"))?, m.variant)
        .map_err(|_| SynthError::WrongKind("catalog"))?;
    let rename = |n: &str| map.get(n).cloned().unwrap_or_else(|| n.to_string());
    let t = match t {
        Template::Split(s) => Template::Split(s.renamed(rename)?),
        Template::Nonsplit(g) => Template::Nonsplit(g.renamed(rename)?),
    };
    Ok((t, map))
}

pub fn synth_split(m: &ComponentMatch) -> Result<SplitExpr, SynthError> {
    if !m.spec.is_split() {
        return Err(SynthError::WrongKind("split"));
    }
    let (t, map) = realise(m)?;
    let Template::Split(target) = t else {
        return Err(SynthError::WrongKind("split"));
    };
    let expr = split::template_expr(&m.spec, m.variant)
        .ok_or(SynthError::WrongKind("split"))?
        .renamed(|n| map.get(n).cloned().unwrap_or_else(|| n.to_string()));
    Ok(SplitExpr { expr, target })
}

/// Expression for a tail match, all labels 1 at the end.
pub fn synth_nonsplit(m: &ComponentMatch) -> Result<KExpr, SynthError> {
    if let crate::catalog::FamilySpec::K1 { .. } = m.spec {
        let (_, b) = m.correspondence.first().ok_or(SynthError::WrongKind("nonsplit"))?;
        return Ok(KExpr::intro(b.clone(), 1));
    }
    if m.spec.is_split() {
        return Err(SynthError::WrongKind("nonsplit"));
    }
    let (t, map) = realise(m)?;
    let name = |n: &str| map.get(n).cloned().unwrap_or_else(|| n.to_string());
    nonsplit::nonsplit_expr(&m.spec, m.variant, t.graph(), &name)
}

/// `ρ4→2 ρ3→1 η1,4 η1,3 (outer ⊕ ρ2→4 ρ1→3 inner)` for `outer ∘ inner`.
pub fn glue_split(outer: SplitExpr, inner: SplitExpr) -> Result<SplitExpr, SynthError> {
    let target = compose_splitted(&outer.target, &inner.target)?;
    let bound = 4.max(outer.expr.width()).max(inner.expr.width());
    let expr = KExpr::union(vec![outer.expr, inner.expr.relabeled(1, 3).relabeled(2, 4)])
        .joined(1, 3)
        .joined(1, 4)
        .relabeled(3, 1)
        .relabeled(4, 2);
    assert!(expr.width() <= bound, "gluing exceeded its label budget");
    Ok(SplitExpr { expr, target })
}

/// `ρ3→1 ρ2→1 η1,3 (s ⊕ ρ1→3 tail)` for `s ∘ tail`. Returns the expression
/// and the composed graph.
pub fn glue_tail(s: SplitExpr, tail: KExpr, tail_graph: &Graph) -> Result<(KExpr, Graph), SynthError> {
    let g = compose(&s.target, tail_graph)?;
    let expr = KExpr::union(vec![s.expr, tail.relabeled(1, 3)])
        .joined(1, 3)
        .relabeled(2, 1)
        .relabeled(3, 1);
    Ok((expr, g))
}

/// Result of synthesis, with every intermediate split expression when
/// tracing was requested.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub expr: KExpr,
    pub report: SynthesisReport,
    pub trace: Vec<SplitExpr>,
}

pub fn synthesize(g: &Graph) -> Result<(KExpr, SynthesisReport), SynthError> {
    let s = synthesize_with(g, false)?;
    Ok((s.expr, s.report))
}

/// Like [`synthesize`], also keeping the split expression of every prefix
/// `G_k ∘ … ∘ G_i` of the decomposition.
pub fn synthesize_traced(g: &Graph) -> Result<Synthesis, SynthError> {
    synthesize_with(g, true)
}

fn synthesize_with(g: &Graph, trace: bool) -> Result<Synthesis, SynthError> {
    if g.is_empty() {
        return Err(SynthError::EmptyGraph);
    }
    let r = recognize(g);
    synthesize_recognized(&r, trace)
}

/// Synthesis from an already recognised decomposition.
pub fn synthesize_recognized(r: &Recognition, trace: bool) -> Result<Synthesis, SynthError> {
    let d = &r.decomposition;
    let numbers = r.piece_numbers();
    let mut report = SynthesisReport {
        total_width: 0,
        components: Vec::new(),
    };
    let mut steps = Vec::new();
    let mut acc: Option<SplitExpr> = None;

    for (pos, (comp, m)) in d.components.iter().zip(&r.matches).enumerate() {
        let m = m.as_ref().ok_or_else(|| SynthError::NotUnigraph {
            index: numbers[pos],
            description: format!(
                "split component A={{{}}} B={{{}}} is not in the catalog",
                comp.clique().join(","),
                comp.independent().join(",")
            ),
        })?;
        let piece = synth_split(m)?;
        report.components.push(ComponentWidth {
            index: numbers[pos],
            family: m.spec.name().to_string(),
            params: m.spec.params(),
            variant: m.variant,
            width: piece.expr.width(),
        });
        let next = match acc.take() {
            None => piece,
            Some(outer) => glue_split(outer, piece)?,
        };
        if trace {
            steps.push(next.clone());
        }
        acc = Some(next);
    }

    let expr = match (&d.tail, acc) {
        (Some(tail), acc) => {
            let m = r.tail_match.as_ref().ok_or_else(|| SynthError::NotUnigraph {
                index: 0,
                description: format!(
                    "tail with degree sequence {} is not in the catalog",
                    tail.degree_sequence()
                ),
            })?;
            let t = synth_nonsplit(m)?;
            report.components.push(ComponentWidth {
                index: 0,
                family: m.spec.name().to_string(),
                params: m.spec.params(),
                variant: m.variant,
                width: t.width(),
            });
            match acc {
                None => t,
                Some(s) => glue_tail(s, t, tail)?.0,
            }
        }
        (None, Some(s)) => s.expr.relabeled(2, 1),
        (None, None) => return Err(SynthError::EmptyGraph),
    };
    report.total_width = expr.width();
    Ok(Synthesis {
        expr,
        report,
        trace: steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{match_nonsplit_component, match_split_component, FamilySpec};
    use crate::graph::Side;
    use crate::kexpr::is_split_labeled;

    fn split_case(spec: FamilySpec, variant: Variant) -> (SplitExpr, SplittedGraph) {
        let Template::Split(s) = apply_variant(&build_template(&spec).unwrap(), variant).unwrap() else {
            unreachable!()
        };
        let m = ComponentMatch {
            spec,
            variant,
            correspondence: s.graph().vertices().map(|n| (n.to_string(), n.to_string())).collect(),
        };
        (synth_split(&m).unwrap(), s)
    }

    #[test]
    fn every_split_family_and_variant() {
        let specs = [
            FamilySpec::K1 { side: Side::Clique },
            FamilySpec::K1 { side: Side::Independent },
            FamilySpec::S2 { pairs: vec![(1, 2)] },
            FamilySpec::S2 { pairs: vec![(3, 2), (2, 1), (1, 3)] },
            FamilySpec::S3 { p: 1, q1: 2, q2: 1 },
            FamilySpec::S3 { p: 2, q1: 3, q2: 2 },
            FamilySpec::S4 { p: 1, q: 1 },
            FamilySpec::S4 { p: 2, q: 3 },
        ];
        for spec in specs {
            for variant in Variant::SPLIT {
                let (e, s) = split_case(spec.clone(), variant);
                assert!(is_split_labeled(&e.expr, &s), "{spec} {variant}");
                assert_eq!(e.target, s);
                assert!(e.expr.width() <= crate::catalog::width_bound(&spec, variant), "{spec} {variant}");
            }
        }
    }

    #[test]
    fn tails() {
        for (spec, variant, width) in [
            (FamilySpec::C5, Variant::Identity, 3),
            (FamilySpec::C5, Variant::Complement, 3),
            (FamilySpec::MK2 { m: 3 }, Variant::Identity, 2),
            (FamilySpec::MK2 { m: 3 }, Variant::Complement, 2),
            (FamilySpec::U2 { m: 2, s: 3 }, Variant::Identity, 2),
            (FamilySpec::U2 { m: 2, s: 3 }, Variant::Complement, 2),
            (FamilySpec::U3 { m: 1 }, Variant::Identity, 3),
            (FamilySpec::U3 { m: 2 }, Variant::Identity, 3),
            (FamilySpec::U3 { m: 1 }, Variant::Complement, 3),
            (FamilySpec::U3 { m: 3 }, Variant::Complement, 3),
        ] {
            let t = apply_variant(&build_template(&spec).unwrap(), variant).unwrap();
            let m = ComponentMatch {
                spec: spec.clone(),
                variant,
                correspondence: t.graph().vertices().map(|n| (n.to_string(), n.to_string())).collect(),
            };
            let e = synth_nonsplit(&m).unwrap();
            let lg = e.evaluate().unwrap();
            assert_eq!(lg.graph(), t.graph(), "{spec} {variant}");
            assert!(lg.labels().iter().all(|&l| l == 1));
            assert_eq!(e.width(), width, "{spec} {variant}");
            assert!(match_nonsplit_component(t.graph()).is_some());
        }
    }

    #[test]
    fn cographs() {
        let p4 = Graph::path(4, "p");
        assert_eq!(synth_cograph(&p4).unwrap_err(), SynthError::NotCograph);
        let e = synth_cograph(&Graph::with_vertices(["x"]).unwrap()).unwrap();
        assert_eq!(e.to_string(), "(v x 1)");
    }

    #[test]
    fn gluing() {
        let k1 = |n: &str| SplitExpr {
            expr: KExpr::intro(n, 1),
            target: SplittedGraph::from_sides(Graph::with_vertices([n]).unwrap(), vec![Side::Clique]).unwrap(),
        };
        let ab = glue_split(k1("a"), k1("b")).unwrap();
        let lg = ab.expr.evaluate().unwrap();
        assert_eq!(lg.graph().edge_count(), 1);
        assert!(lg.labels().iter().all(|&l| l == 1));

        let p4 = SplittedGraph::new(Graph::path(4, "p"), &["p1", "p2"], &["p0", "p3"]).unwrap();
        let m = match_split_component(&p4).unwrap();
        let glued = glue_split(k1("z"), synth_split(&m).unwrap()).unwrap();
        assert!(is_split_labeled(&glued.expr, &glued.target));
        assert_eq!(glued.target.graph().degree(glued.target.graph().index_of("z").unwrap()), 4);

        let c5 = Graph::cycle(5, "c");
        let tail = synth_nonsplit(&match_nonsplit_component(&c5).unwrap()).unwrap();
        let (e, g) = glue_tail(k1("h"), tail, &c5).unwrap();
        assert_eq!(e.evaluate().unwrap().graph(), &g);
        assert_eq!(g.edge_count(), 10);
        assert!(e.width() <= 3);
    }

    #[test]
    fn whole_graphs() {
        let u3 = build_template(&FamilySpec::U3 { m: 1 }).unwrap();
        let (e, report) = synthesize(u3.graph()).unwrap();
        assert_eq!(e.evaluate().unwrap().graph(), u3.graph());
        assert_eq!(report.total_width, 3);
        assert_eq!(synthesize(&Graph::new()).unwrap_err(), SynthError::EmptyGraph);
        let f = Graph::from_edges(Vec::<String>::new(), [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("d", "e")])
            .unwrap();
        assert!(matches!(synthesize(&f), Err(SynthError::NotUnigraph { .. })));
        let (e, _) = synthesize(&Graph::path(4, "p")).unwrap();
        assert_eq!(e.evaluate().unwrap().graph(), &Graph::path(4, "p"));
    }
}
