//! Clique-width expressions: vertex introduction, disjoint union, joins
//! between two label classes, and relabeling.
//!
//! Operations written as prefix chains apply innermost first, so the method
//! chain `x.joined(1, 3).relabeled(3, 1)` is the term `(r 3 1 (j 1 3 x))`.

mod eval;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::LabeledGraph;
pub use parse::parse_expr;

use crate::error::ExprError;
use crate::graph::{Side, SplittedGraph};

pub type Label = u32;

#[derive(Debug)]
pub enum KExpr {
    /// A single new vertex carrying a label.
    Intro { name: String, label: Label },
    /// Disjoint union of two or more operands.
    Union(Vec<KExpr>),
    /// Adds every edge between label `a` and label `b`; `a != b`.
    Join { a: Label, b: Label, child: Box<KExpr> },
    /// Rewrites label `from` to `to`.
    Relabel { from: Label, to: Label, child: Box<KExpr> },
}

impl Clone for KExpr {
    fn clone(&self) -> Self {
        self.fold(|node, mut kids: Vec<KExpr>| match node {
            KExpr::Intro { name, label } => KExpr::Intro {
                name: name.clone(),
                label: *label,
            },
            KExpr::Union(_) => KExpr::Union(kids),
            KExpr::Join { a, b, .. } => KExpr::Join {
                a: *a,
                b: *b,
                child: Box::new(kids.pop().expect("one child")),
            },
            KExpr::Relabel { from, to, .. } => KExpr::Relabel {
                from: *from,
                to: *to,
                child: Box::new(kids.pop().expect("one child")),
            },
        })
    }
}

impl PartialEq for KExpr {
    fn eq(&self, other: &Self) -> bool {
        let mut stack = vec![(self, other)];
        while let Some((x, y)) = stack.pop() {
            let same_node = match (x, y) {
                (KExpr::Intro { name: n1, label: l1 }, KExpr::Intro { name: n2, label: l2 }) => n1 == n2 && l1 == l2,
                (KExpr::Union(p1), KExpr::Union(p2)) => p1.len() == p2.len(),
                (KExpr::Join { a: a1, b: b1, .. }, KExpr::Join { a: a2, b: b2, .. }) => a1 == a2 && b1 == b2,
                (KExpr::Relabel { from: f1, to: t1, .. }, KExpr::Relabel { from: f2, to: t2, .. }) => {
                    f1 == f2 && t1 == t2
                }
                _ => false,
            };
            if !same_node {
                return false;
            }
            stack.extend(x.children().iter().zip(y.children()));
        }
        true
    }
}

impl Eq for KExpr {}

// Dropping a deep term recursively could exhaust the stack.
impl Drop for KExpr {
    fn drop(&mut self) {
        fn detach(e: &mut KExpr, stack: &mut Vec<KExpr>) {
            match e {
                KExpr::Intro { .. } => {}
                KExpr::Union(parts) => stack.append(parts),
                KExpr::Join { child, .. } | KExpr::Relabel { child, .. } => {
                    if !matches!(**child, KExpr::Intro { .. }) {
                        stack.push(std::mem::replace(&mut **child, KExpr::Union(Vec::new())));
                    }
                }
            }
        }
        let mut stack = Vec::new();
        detach(self, &mut stack);
        while let Some(mut e) = stack.pop() {
            detach(&mut e, &mut stack);
        }
    }
}

/// Size figures for an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExprStats {
    pub distinct_labels: usize,
    pub node_count: usize,
    pub depth: usize,
}

impl KExpr {
    pub fn intro(name: impl Into<String>, label: Label) -> KExpr {
        assert!(label > 0, "labels are positive");
        KExpr::Intro {
            name: name.into(),
            label,
        }
    }

    /// Union of the operands. A single operand is returned unchanged and an
    /// empty list panics.
    pub fn union(parts: Vec<KExpr>) -> KExpr {
        assert!(!parts.is_empty(), "union of nothing");
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            KExpr::Union(parts)
        }
    }

    pub fn try_join(a: Label, b: Label, child: KExpr) -> Result<KExpr, ExprError> {
        if a == 0 || b == 0 {
            return Err(ExprError::ZeroLabel);
        }
        if a == b {
            return Err(ExprError::JoinSameLabel(a));
        }
        Ok(KExpr::Join {
            a,
            b,
            child: Box::new(child),
        })
    }

    /// Panics if `a == b` or either label is zero.
    pub fn join(a: Label, b: Label, child: KExpr) -> KExpr {
        KExpr::try_join(a, b, child).expect("valid join")
    }

    pub fn relabel(from: Label, to: Label, child: KExpr) -> KExpr {
        assert!(from > 0 && to > 0, "labels are positive");
        KExpr::Relabel {
            from,
            to,
            child: Box::new(child),
        }
    }

    /// `self` wrapped in a join.
    pub fn joined(self, a: Label, b: Label) -> KExpr {
        KExpr::join(a, b, self)
    }

    /// `self` wrapped in a relabel.
    pub fn relabeled(self, from: Label, to: Label) -> KExpr {
        KExpr::relabel(from, to, self)
    }

    pub fn children(&self) -> &[KExpr] {
        match self {
            KExpr::Intro { .. } => &[],
            KExpr::Union(parts) => parts,
            KExpr::Join { child, .. } | KExpr::Relabel { child, .. } => std::slice::from_ref(&**child),
        }
    }

    /// Pre-order traversal without recursion.
    pub fn nodes(&self) -> impl Iterator<Item = &KExpr> + '_ {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            stack.extend(node.children().iter().rev());
            Some(node)
        })
    }

    /// Bottom-up fold; `f` receives a node and the results of its children
    /// in order. Runs on an explicit stack, so deep terms are fine.
    pub fn fold<T, F>(&self, mut f: F) -> T
    where
        F: FnMut(&KExpr, Vec<T>) -> T,
    {
        enum Frame<'a> {
            Enter(&'a KExpr),
            Exit(&'a KExpr),
        }
        let mut stack = vec![Frame::Enter(self)];
        let mut results: Vec<T> = Vec::new();
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Enter(e) => {
                    stack.push(Frame::Exit(e));
                    stack.extend(e.children().iter().rev().map(Frame::Enter));
                }
                Frame::Exit(e) => {
                    let k = e.children().len();
                    let args = results.split_off(results.len() - k);
                    results.push(f(e, args));
                }
            }
        }
        results.pop().expect("fold produces one result")
    }

    /// Labels mentioned anywhere in the term.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        for node in self.nodes() {
            match *node {
                KExpr::Intro { label, .. } => {
                    out.insert(label);
                }
                KExpr::Union(_) => {}
                KExpr::Join { a, b, .. } => {
                    out.insert(a);
                    out.insert(b);
                }
                KExpr::Relabel { from, to, .. } => {
                    out.insert(from);
                    out.insert(to);
                }
            }
        }
        out
    }

    /// Number of distinct labels used by the term.
    pub fn width(&self) -> usize {
        self.labels().len()
    }

    pub fn stats(&self) -> ExprStats {
        let depth = self.fold(|_, kids: Vec<usize>| 1 + kids.into_iter().max().unwrap_or(0));
        ExprStats {
            distinct_labels: self.width(),
            node_count: self.nodes().count(),
            depth,
        }
    }

    /// Names introduced by the term, in left-to-right order.
    pub fn vertex_names(&self) -> Vec<&str> {
        self.nodes()
            .filter_map(|n| match n {
                KExpr::Intro { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }

    /// Checks label positivity, join labels, union arity, and that no
    /// vertex name is introduced twice.
    pub fn validate(&self) -> Result<(), ExprError> {
        let mut seen = std::collections::HashSet::new();
        for node in self.nodes() {
            match node {
                KExpr::Intro { name, label } => {
                    if *label == 0 {
                        return Err(ExprError::ZeroLabel);
                    }
                    crate::graph::validate_name(name)?;
                    if !seen.insert(name.as_str()) {
                        return Err(ExprError::DuplicateVertex(name.clone()));
                    }
                }
                KExpr::Union(parts) if parts.len() < 2 => return Err(ExprError::ShortUnion),
                KExpr::Union(_) => {}
                KExpr::Join { a, b, .. } => {
                    if *a == 0 || *b == 0 {
                        return Err(ExprError::ZeroLabel);
                    }
                    if a == b {
                        return Err(ExprError::JoinSameLabel(*a));
                    }
                }
                KExpr::Relabel { from, to, .. } => {
                    if *from == 0 || *to == 0 {
                        return Err(ExprError::ZeroLabel);
                    }
                }
            }
        }
        Ok(())
    }

    /// Maps every introduced vertex name through `f`.
    pub fn renamed<F>(&self, mut f: F) -> KExpr
    where
        F: FnMut(&str) -> String,
    {
        self.fold(|node, kids: Vec<KExpr>| match node {
            KExpr::Intro { name, label } => KExpr::Intro {
                name: f(name),
                label: *label,
            },
            KExpr::Union(_) => KExpr::Union(kids),
            KExpr::Join { a, b, .. } => KExpr::Join {
                a: *a,
                b: *b,
                child: Box::new(kids.into_iter().next().unwrap()),
            },
            KExpr::Relabel { from, to, .. } => KExpr::Relabel {
                from: *from,
                to: *to,
                child: Box::new(kids.into_iter().next().unwrap()),
            },
        })
    }

    /// Drops relabels whose source label is carried by no vertex at that
    /// point of the evaluation.
    pub fn without_dead_relabels(&self) -> KExpr {
        let (expr, _) = self.fold(|node, kids: Vec<(KExpr, BTreeSet<Label>)>| match node {
            KExpr::Intro { label, .. } => (node.clone(), BTreeSet::from([*label])),
            KExpr::Union(_) => {
                let mut live = BTreeSet::new();
                let mut parts = Vec::with_capacity(kids.len());
                for (e, l) in kids {
                    live.extend(l);
                    parts.push(e);
                }
                (KExpr::Union(parts), live)
            }
            KExpr::Join { a, b, .. } => {
                let (child, live) = kids.into_iter().next().unwrap();
                (KExpr::join(*a, *b, child), live)
            }
            KExpr::Relabel { from, to, .. } => {
                let (child, mut live) = kids.into_iter().next().unwrap();
                if live.remove(from) {
                    live.insert(*to);
                    (KExpr::relabel(*from, *to, child), live)
                } else {
                    (child, live)
                }
            }
        });
        expr
    }

    pub fn evaluate(&self) -> Result<LabeledGraph, ExprError> {
        eval::evaluate(self)
    }
}

impl fmt::Display for KExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::print_expr(self))
    }
}

impl std::str::FromStr for KExpr {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

/// True iff `e` evaluates to exactly `s`'s graph (by vertex name) with the
/// clique part labeled 1 and the independent part labeled 2.
pub fn is_split_labeled(e: &KExpr, s: &SplittedGraph) -> bool {
    let Ok(lg) = e.evaluate() else { return false };
    if lg.graph() != s.graph() {
        return false;
    }
    s.graph().vertices().enumerate().all(|(i, name)| {
        let want = match s.side(i) {
            Side::Clique => 1,
            Side::Independent => 2,
        };
        lg.label_of(name) == Some(want)
    })
}
