//! Text and JSON renderings of every report the command line prints.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::catalog::{ComponentMatch, Recognition};
use crate::decomp::CanonicalDecomposition;
use crate::graph::Graph;
use crate::kexpr::KExpr;
use crate::oracle::CwdInterval;
use crate::solve::Solution;
use crate::synth::SynthesisReport;

fn braces<S: AsRef<str>>(names: &[S]) -> String {
    let mut v: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    v.sort_unstable();
    format!("{{{}}}", v.join(","))
}

fn sorted<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    v.sort();
    v
}

/// One `split k=..` line per component, outermost first, then the tail.
pub fn decomposition_text(d: &CanonicalDecomposition) -> String {
    let mut out = String::new();
    let k = d.k();
    for (i, s) in d.components.iter().enumerate() {
        writeln!(out, "split k={} A={} B={}", k - i, braces(&s.clique()), braces(&s.independent())).unwrap();
    }
    match &d.tail {
        Some(t) => writeln!(out, "tail {}", braces(t.names())).unwrap(),
        None => writeln!(out, "tail none").unwrap(),
    }
    out
}

pub fn decomposition_json(d: &CanonicalDecomposition) -> Value {
    let k = d.k();
    json!({
        "components": d.components.iter().enumerate().map(|(i, s)| json!({
            "k": k - i,
            "A": sorted(&s.clique()),
            "B": sorted(&s.independent()),
        })).collect::<Vec<_>>(),
        "tail": d.tail.as_ref().map(|t| sorted(t.names())),
    })
}

fn pieces(r: &Recognition) -> impl Iterator<Item = (usize, Option<&ComponentMatch>)> + '_ {
    let tail = r.decomposition.tail.as_ref().map(|_| r.tail_match.as_ref());
    r.piece_numbers()
        .into_iter()
        .zip(r.matches.iter().map(Option::as_ref).chain(tail))
}

pub fn recognition_text(r: &Recognition) -> String {
    let mut out = String::new();
    for (idx, m) in pieces(r) {
        match m {
            Some(m) => writeln!(
                out,
                "component {idx}: family={} variant={} params={}",
                m.spec.name(),
                m.variant,
                m.spec.params()
            )
            .unwrap(),
            None => writeln!(out, "component {idx}: family=none").unwrap(),
        }
    }
    let verdict = if r.is_complete() { "unigraph" } else { "not-unigraph" };
    writeln!(out, "verdict: {verdict}").unwrap();
    out
}

pub fn recognition_json(r: &Recognition) -> Value {
    json!({
        "verdict": if r.is_complete() { "unigraph" } else { "not-unigraph" },
        "unigraph": r.is_complete(),
        "components": pieces(r).map(|(idx, m)| match m {
            Some(m) => json!({
                "index": idx,
                "family": m.spec.name(),
                "variant": m.variant,
                "params": m.spec.params(),
            }),
            None => json!({ "index": idx, "family": null }),
        }).collect::<Vec<_>>(),
        "decomposition": decomposition_json(&r.decomposition),
    })
}

/// Report lines; the command line prefixes them with `#` when they follow
/// an expression.
pub fn synthesis_text(r: &SynthesisReport) -> String {
    let mut out = String::new();
    writeln!(out, "total_width={}", r.total_width).unwrap();
    for c in &r.components {
        writeln!(
            out,
            "component {}: family={} variant={} params={} width={}",
            c.index, c.family, c.variant, c.params, c.width
        )
        .unwrap();
    }
    out
}

pub fn synthesis_json(e: &KExpr, r: &SynthesisReport) -> Value {
    let mut v = serde_json::to_value(r).expect("plain data");
    v["expr"] = Value::String(e.to_string());
    v
}

pub fn solution_json(s: &Solution) -> Value {
    serde_json::to_value(s).expect("plain data")
}

pub fn eval_text(g: &Graph, width: usize) -> String {
    format!("{}# width={width}\n", crate::edgelist::write_edge_list(g))
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.sorted_names(),
        "edges": g.sorted_edges().into_iter().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

/// Differences between a graph and what an expression built.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphDiff {
    pub missing_vertices: Vec<String>,
    pub extra_vertices: Vec<String>,
    pub missing_edges: Vec<(String, String)>,
    pub extra_edges: Vec<(String, String)>,
}

impl GraphDiff {
    pub fn between(want: &Graph, got: &Graph) -> GraphDiff {
        let names = |g: &Graph| g.sorted_names().into_iter().map(str::to_string).collect::<Vec<_>>();
        let edges = |g: &Graph| {
            g.sorted_edges()
                .into_iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect::<Vec<_>>()
        };
        let (wv, gv) = (names(want), names(got));
        let (we, ge) = (edges(want), edges(got));
        GraphDiff {
            missing_vertices: wv.iter().filter(|v| !gv.contains(v)).cloned().collect(),
            extra_vertices: gv.iter().filter(|v| !wv.contains(v)).cloned().collect(),
            missing_edges: we.iter().filter(|e| ge.binary_search(e).is_err()).cloned().collect(),
            extra_edges: ge.iter().filter(|e| we.binary_search(e).is_err()).cloned().collect(),
        }
    }

    pub fn is_equal(&self) -> bool {
        *self == GraphDiff::default()
    }
}

pub fn check_text(d: &GraphDiff) -> String {
    if d.is_equal() {
        return "verdict: equal\n".into();
    }
    let mut out = String::from("verdict: different\n");
    for v in &d.missing_vertices {
        writeln!(out, "missing vertex {v}").unwrap();
    }
    for v in &d.extra_vertices {
        writeln!(out, "extra vertex {v}").unwrap();
    }
    for (u, v) in &d.missing_edges {
        writeln!(out, "missing edge {u} {v}").unwrap();
    }
    for (u, v) in &d.extra_edges {
        writeln!(out, "extra edge {u} {v}").unwrap();
    }
    out
}

pub fn check_json(d: &GraphDiff) -> Value {
    json!({
        "equal": d.is_equal(),
        "missing_vertices": d.missing_vertices,
        "extra_vertices": d.extra_vertices,
        "missing_edges": d.missing_edges,
        "extra_edges": d.extra_edges,
    })
}

pub fn cwd_text(iv: &CwdInterval) -> String {
    format!("cwd(g) in {iv}\n")
}

pub fn cwd_json(iv: &CwdInterval) -> Value {
    json!({ "lo": iv.lo, "hi": iv.hi, "exact": iv.is_exact() })
}

pub fn decompositions_text(all: &[CanonicalDecomposition]) -> String {
    let mut out = format!("decompositions={}\n", all.len());
    for (i, d) in all.iter().enumerate() {
        writeln!(out, "# decomposition {}", i + 1).unwrap();
        out.push_str(&decomposition_text(d));
    }
    out
}

pub fn decompositions_json(all: &[CanonicalDecomposition]) -> Value {
    json!({
        "count": all.len(),
        "decompositions": all.iter().map(decomposition_json).collect::<Vec<_>>(),
    })
}
