use std::collections::BTreeMap;

use super::{KExpr, Label};
use crate::error::{ExprError, GraphError};
use crate::graph::Graph;

/// A graph whose vertices carry the labels left by an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Label of each vertex, indexed like the graph's vertices.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_of(&self, name: &str) -> Option<Label> {
        self.graph.index_of(name).map(|i| self.labels[i])
    }
}

// vertex indices of a subterm, grouped by current label
type Classes = BTreeMap<Label, Vec<usize>>;

pub(super) fn evaluate(e: &KExpr) -> Result<LabeledGraph, ExprError> {
    let mut g = Graph::new();
    let classes = e.fold(|node, kids: Vec<Result<Classes, ExprError>>| {
        let mut kids = kids.into_iter().collect::<Result<Vec<_>, _>>()?;
        match node {
            KExpr::Intro { name, label } => {
                if *label == 0 {
                    return Err(ExprError::ZeroLabel);
                }
                let i = g.add_vertex(name.clone()).map_err(|err| match err {
                    GraphError::DuplicateVertex(n) => ExprError::DuplicateVertex(n),
                    other => ExprError::Graph(other),
                })?;
                Ok(BTreeMap::from([(*label, vec![i])]))
            }
            KExpr::Union(_) => {
                if kids.len() < 2 {
                    return Err(ExprError::ShortUnion);
                }
                let mut acc = kids.swap_remove(0);
                for part in kids {
                    for (l, vs) in part {
                        acc.entry(l).or_default().extend(vs);
                    }
                }
                Ok(acc)
            }
            KExpr::Join { a, b, .. } => {
                if *a == 0 || *b == 0 {
                    return Err(ExprError::ZeroLabel);
                }
                if a == b {
                    return Err(ExprError::JoinSameLabel(*a));
                }
                let cl = kids.pop().expect("join has a child");
                if let (Some(xs), Some(ys)) = (cl.get(a), cl.get(b)) {
                    for &x in xs {
                        for &y in ys {
                            g.add_edge_idx(x, y);
                        }
                    }
                }
                Ok(cl)
            }
            KExpr::Relabel { from, to, .. } => {
                if *from == 0 || *to == 0 {
                    return Err(ExprError::ZeroLabel);
                }
                let mut cl = kids.pop().expect("relabel has a child");
                if from != to {
                    if let Some(vs) = cl.remove(from) {
                        cl.entry(*to).or_default().extend(vs);
                    }
                }
                Ok(cl)
            }
        }
    })?;
    let mut labels = vec![0; g.vertex_count()];
    for (l, vs) in classes {
        for v in vs {
            labels[v] = l;
        }
    }
    Ok(LabeledGraph { graph: g, labels })
}
