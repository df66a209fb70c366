//! Simple undirected graphs over named vertices and splitted graphs.
//!
//! Vertex names are opaque tokens that survive every transform, so two graphs
//! built along different routes can be compared edge-for-edge by name.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::GraphError;

/// Checks that `name` can appear as a token in both the edge-list and the
/// expression formats.
pub fn validate_name(name: &str) -> Result<(), GraphError> {
    if name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || c == '(' || c == ')' || c == '#')
    {
        return Err(GraphError::InvalidName(name.to_string()));
    }
    Ok(())
}

/// A simple undirected graph over named vertices.
///
/// Vertices keep their insertion order, which fixes the internal indices.
/// Equality ignores that order: two graphs are equal when they have the same
/// vertex names and the same edges between those names.
#[derive(Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    // authoritative pair set, stored with u < v
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn with_vertices<I, S>(vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        Ok(g)
    }

    /// Builds a graph from declared vertices plus an edge list. Edge endpoints
    /// that were not declared are added on first use.
    pub fn from_edges<I, S, E, T>(vertices: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut g = Graph::with_vertices(vertices)?;
        for (u, v) in edges {
            let u = g.ensure_vertex(u.as_ref())?;
            let v = g.ensure_vertex(v.as_ref())?;
            if u == v {
                return Err(GraphError::SelfLoop(g.names[u].clone()));
            }
            if !g.add_edge_idx(u, v) {
                return Err(GraphError::DuplicateEdge(
                    g.names[u].clone(),
                    g.names[v].clone(),
                ));
            }
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, GraphError> {
        let name = name.into();
        validate_name(&name)?;
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        self.adj.push(BTreeSet::new());
        Ok(i)
    }

    /// Returns the index of `name`, adding the vertex if it is new.
    pub fn ensure_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        match self.index.get(name) {
            Some(&i) => Ok(i),
            None => self.add_vertex(name),
        }
    }

    /// Adds the edge `u v`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<bool, GraphError> {
        let iu = self.require(u)?;
        let iv = self.require(v)?;
        if iu == iv {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        Ok(self.add_edge_idx(iu, iv))
    }

    pub(crate) fn add_edge_idx(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        let key = if u < v { (u, v) } else { (v, u) };
        if self.edges.insert(key) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            true
        } else {
            false
        }
    }

    fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.names.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(move |&(u, v)| (self.names[u].as_str(), self.names[v].as_str()))
    }

    pub fn edge_indices(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(u), Some(v)) => self.adjacent(u, v),
            _ => false,
        }
    }

    /// Vertex names sorted lexicographically.
    pub fn sorted_names(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.vertices().collect();
        v.sort_unstable();
        v
    }

    /// Edges as name pairs `(min, max)`, sorted lexicographically.
    pub fn sorted_edges(&self) -> Vec<(&str, &str)> {
        let mut v: Vec<(&str, &str)> = self
            .edges()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = self.vertex_skeleton();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    g.add_edge_idx(u, v);
                }
            }
        }
        g
    }

    /// Same vertices, same indices, no edges.
    pub(crate) fn vertex_skeleton(&self) -> Graph {
        Graph {
            names: self.names.clone(),
            index: self.index.clone(),
            edges: BTreeSet::new(),
            adj: vec![BTreeSet::new(); self.names.len()],
        }
    }

    pub fn induced<S: AsRef<str>>(&self, vs: &[S]) -> Result<Graph, GraphError> {
        let idx = vs
            .iter()
            .map(|s| self.require(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_idx(&idx))
    }

    /// Induced subgraph on the given indices; the new graph numbers its
    /// vertices in the order given.
    pub fn induced_idx(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::new();
        let mut local = HashMap::with_capacity(vs.len());
        for &v in vs {
            if local.contains_key(&v) {
                continue;
            }
            let i = g.names.len();
            g.index.insert(self.names[v].clone(), i);
            g.names.push(self.names[v].clone());
            g.adj.push(BTreeSet::new());
            local.insert(v, i);
        }
        for (&v, &i) in &local {
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        g.add_edge_idx(i, j);
                    }
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        let offset = g.vertex_count();
        for name in &other.names {
            if g.contains(name) {
                return Err(GraphError::NameCollision(name.clone()));
            }
            g.add_vertex(name.clone())?;
        }
        for &(u, v) in &other.edges {
            g.add_edge_idx(u + offset, v + offset);
        }
        Ok(g)
    }

    /// Applies `f` to every vertex name.
    pub fn renamed<F>(&self, mut f: F) -> Result<Graph, GraphError>
    where
        F: FnMut(&str) -> String,
    {
        let mut g = Graph::new();
        for name in &self.names {
            g.add_vertex(f(name))?;
        }
        for &(u, v) in &self.edges {
            g.add_edge_idx(u, v);
        }
        Ok(g)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new((0..self.vertex_count()).map(|i| self.degree(i)).collect())
    }

    /// True iff `(a, b)` partitions the vertex set, `a` is a clique and `b`
    /// is independent. Unknown names make the answer `false`.
    pub fn is_split_partition<S: AsRef<str>>(&self, a: &[S], b: &[S]) -> bool {
        let mut side = vec![None; self.vertex_count()];
        for (set, s) in [(a, Side::Clique), (b, Side::Independent)] {
            for name in set {
                match self.index_of(name.as_ref()) {
                    Some(i) if side[i].is_none() => side[i] = Some(s),
                    _ => return false,
                }
            }
        }
        match side.into_iter().collect::<Option<Vec<Side>>>() {
            Some(sides) => self.sides_are_split(&sides),
            None => false,
        }
    }

    pub(crate) fn sides_are_split(&self, sides: &[Side]) -> bool {
        let clique: Vec<usize> = (0..sides.len())
            .filter(|&i| sides[i] == Side::Clique)
            .collect();
        for (x, &u) in clique.iter().enumerate() {
            for &v in &clique[x + 1..] {
                if !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        self.edges
            .iter()
            .all(|&(u, v)| sides[u] == Side::Clique || sides[v] == Side::Clique)
    }

    /// Finds a split bipartition when one exists, using the degree
    /// criterion: with degrees sorted non-increasingly and `m` the largest
    /// index with `d_m >= m - 1`, the graph is split iff the top `m`
    /// vertices form a clique and the rest an independent set.
    pub fn split_sides(&self) -> Option<Vec<Side>> {
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let m = order
            .iter()
            .enumerate()
            .filter(|&(i, &v)| self.degree(v) >= i)
            .map(|(i, _)| i + 1)
            .last()
            .unwrap_or(0);
        let mut sides = vec![Side::Independent; n];
        for &v in &order[..m] {
            sides[v] = Side::Clique;
        }
        self.sides_are_split(&sides).then_some(sides)
    }

    pub fn is_split(&self) -> bool {
        self.split_sides().is_some()
    }

    /// Connected components as index lists, each sorted, ordered by their
    /// smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `K_n` on vertices `prefix0 .. prefix{n-1}`.
    pub fn complete(n: usize, prefix: &str) -> Graph {
        let mut g = Graph::empty(n, prefix);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_idx(u, v);
            }
        }
        g
    }

    /// `n` isolated vertices named `prefix0 ..`.
    pub fn empty(n: usize, prefix: &str) -> Graph {
        Graph::with_vertices((0..n).map(|i| format!("{prefix}{i}")))
            .expect("generated names are valid")
    }

    pub fn path(n: usize, prefix: &str) -> Graph {
        let mut g = Graph::empty(n, prefix);
        for i in 1..n {
            g.add_edge_idx(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize, prefix: &str) -> Graph {
        let mut g = Graph::path(n, prefix);
        if n >= 3 {
            g.add_edge_idx(n - 1, 0);
        }
        g
    }

    /// `K_{1,n}`: vertex `prefix0` is the center.
    pub fn star(n: usize, prefix: &str) -> Graph {
        let mut g = Graph::empty(n + 1, prefix);
        for i in 1..=n {
            g.add_edge_idx(0, i);
        }
        g
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let map: Option<Vec<usize>> = self.names.iter().map(|n| other.index_of(n)).collect();
        let Some(map) = map else { return false };
        self.edges.iter().all(|&(u, v)| other.adjacent(map[u], map[v]))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.sorted_names())
            .field("edges", &self.sorted_edges())
            .finish()
    }
}

/// A degree multiset, stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Erdős–Gallai test.
    pub fn is_graphic(&self) -> bool {
        let d = &self.0;
        let n = d.len();
        if self.sum() % 2 == 1 || d.first().is_some_and(|&x| x >= n) {
            return false;
        }
        let mut prefix = 0usize;
        for k in 1..=n {
            prefix += d[k - 1];
            let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
            if prefix > k * (k - 1) + tail {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence::new(v)
    }
}

/// Which part of a split bipartition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Clique,
    Independent,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Clique => Side::Independent,
            Side::Independent => Side::Clique,
        }
    }
}

/// A split graph together with a certified (clique, independent set)
/// bipartition. Validated on construction and immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct SplittedGraph {
    graph: Graph,
    sides: Vec<Side>,
}

impl SplittedGraph {
    pub fn new<S: AsRef<str>>(graph: Graph, clique: &[S], independent: &[S]) -> Result<Self, GraphError> {
        let mut sides = vec![None; graph.vertex_count()];
        for (set, s) in [(clique, Side::Clique), (independent, Side::Independent)] {
            for name in set {
                let i = graph
                    .index_of(name.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(name.as_ref().to_string()))?;
                if sides[i].is_some() {
                    return Err(GraphError::NotSplitPartition(format!(
                        "vertex {} is listed twice",
                        name.as_ref()
                    )));
                }
                sides[i] = Some(s);
            }
        }
        let sides = sides
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    GraphError::NotSplitPartition(format!("vertex {} is in neither part", graph.name(i)))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        SplittedGraph::from_sides(graph, sides)
    }

    /// `sides[i]` is the part of vertex index `i`.
    pub fn from_sides(graph: Graph, sides: Vec<Side>) -> Result<Self, GraphError> {
        if sides.len() != graph.vertex_count() {
            return Err(GraphError::NotSplitPartition(
                "side vector does not match the vertex count".into(),
            ));
        }
        if !graph.sides_are_split(&sides) {
            return Err(GraphError::NotSplitPartition(
                "clique part is not complete or independent part has an edge".into(),
            ));
        }
        Ok(SplittedGraph { graph, sides })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    pub fn side_of(&self, name: &str) -> Option<Side> {
        self.graph.index_of(name).map(|i| self.sides[i])
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn part_indices(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&i| self.sides[i] == side).collect()
    }

    /// Names in the given part, sorted.
    pub fn part(&self, side: Side) -> Vec<&str> {
        let mut v: Vec<&str> = self
            .part_indices(side)
            .into_iter()
            .map(|i| self.graph.name(i))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn clique(&self) -> Vec<&str> {
        self.part(Side::Clique)
    }

    pub fn independent(&self) -> Vec<&str> {
        self.part(Side::Independent)
    }

    /// `(G, A, B)` becomes `(co-G, B, A)`.
    pub fn complement(&self) -> SplittedGraph {
        SplittedGraph {
            graph: self.graph.complement(),
            sides: self.sides.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Drops the clique edges, fills in the independent set, and swaps the
    /// parts. Edges between the parts are kept.
    pub fn inverse(&self) -> SplittedGraph {
        let n = self.vertex_count();
        let mut g = self.graph.vertex_skeleton();
        for &(u, v) in self.graph.edge_indices() {
            if self.sides[u] != self.sides[v] {
                g.add_edge_idx(u, v);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.sides[u] == Side::Independent && self.sides[v] == Side::Independent {
                    g.add_edge_idx(u, v);
                }
            }
        }
        SplittedGraph {
            graph: g,
            sides: self.sides.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Complement of the inverse: keeps the parts and flips every edge
    /// between them.
    pub fn inverse_complement(&self) -> SplittedGraph {
        self.inverse().complement()
    }

    pub fn induced_idx(&self, vs: &[usize]) -> SplittedGraph {
        let graph = self.graph.induced_idx(vs);
        let sides = graph
            .vertices()
            .map(|name| self.sides[self.graph.index_of(name).expect("induced vertex")])
            .collect();
        SplittedGraph { graph, sides }
    }

    pub fn induced<S: AsRef<str>>(&self, vs: &[S]) -> Result<SplittedGraph, GraphError> {
        let idx = vs
            .iter()
            .map(|s| {
                self.graph
                    .index_of(s.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_idx(&idx))
    }

    pub fn renamed<F>(&self, f: F) -> Result<SplittedGraph, GraphError>
    where
        F: FnMut(&str) -> String,
    {
        Ok(SplittedGraph {
            graph: self.graph.renamed(f)?,
            sides: self.sides.clone(),
        })
    }
}

impl fmt::Debug for SplittedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SplittedGraph")
            .field("clique", &self.clique())
            .field("independent", &self.independent())
            .field("edges", &self.graph.sorted_edges())
            .finish()
    }
}
