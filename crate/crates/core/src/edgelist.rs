//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! 5 4
//! vertex e
//! a b
//! b c
//! c d
//! d a
//! ```
//!
//! The header gives the vertex and edge counts. Each further line is either
//! an undirected edge `u v` or a declaration `vertex <name>`, which is how
//! isolated vertices are written.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut g = Graph::new();
    let mut edges_seen = 0usize;

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens = tokens_with_columns(line);
        if header.is_none() {
            if tokens.len() != 2 {
                return Err(ParseError::new(lineno, tokens[0].0, "expected header `n m`"));
            }
            let n = parse_count(lineno, tokens[0])?;
            let m = parse_count(lineno, tokens[1])?;
            header = Some((n, m, lineno));
            continue;
        }
        if tokens.len() != 2 {
            let col = tokens.get(2).map_or(tokens[0].0, |t| t.0);
            return Err(ParseError::new(
                lineno,
                col,
                "expected an edge `u v` or a declaration `vertex <name>`",
            ));
        }
        let (c0, t0) = tokens[0];
        let (c1, t1) = tokens[1];
        if t0 == "vertex" {
            g.ensure_vertex(t1)
                .map_err(|e| ParseError::new(lineno, c1, e.to_string()))?;
            continue;
        }
        let u = g
            .ensure_vertex(t0)
            .map_err(|e| ParseError::new(lineno, c0, e.to_string()))?;
        let v = g
            .ensure_vertex(t1)
            .map_err(|e| ParseError::new(lineno, c1, e.to_string()))?;
        if u == v {
            return Err(ParseError::new(lineno, c1, format!("self-loop on vertex {t0}")));
        }
        if !g.add_edge_idx(u, v) {
            return Err(ParseError::new(lineno, c0, format!("duplicate edge {t0} {t1}")));
        }
        edges_seen += 1;
    }

    let Some((n, m, hline)) = header else {
        return Err(ParseError::new(1, 1, "missing header `n m`"));
    };
    if g.vertex_count() != n {
        return Err(ParseError::new(
            hline,
            1,
            format!("header declares {n} vertices but {} were found", g.vertex_count()),
        ));
    }
    if edges_seen != m {
        return Err(ParseError::new(
            hline,
            1,
            format!("header declares {m} edges but {edges_seen} were found"),
        ));
    }
    Ok(g)
}

/// Writes `g` with isolated vertices declared first and edges sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for name in g.sorted_names() {
        let i = g.index_of(name).expect("own vertex");
        if g.degree(i) == 0 {
            writeln!(out, "vertex {name}").unwrap();
        }
    }
    for (u, v) in g.sorted_edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn parse_count(line: usize, (col, tok): (usize, &str)) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, col, format!("expected a non-negative integer, found `{tok}`")))
}
