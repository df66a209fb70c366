//! S-expression syntax for k-expressions.
//!
//! ```text
//! expr := "(" "v" NAME POSINT ")"
//!       | "(" "u" expr expr+ ")"
//!       | "(" "j" POSINT POSINT expr ")"
//!       | "(" "r" POSINT POSINT expr ")"
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt::Write as _;

use super::{KExpr, Label};
use crate::error::ParseError;
use crate::graph::validate_name;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Vec<(Tok<'_>, Pos)> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let line = match line.find('#') {
            Some(cut) => &line[..cut],
            None => line,
        };
        let mut chars = line.char_indices().peekable();
        let mut col = 0usize;
        while let Some((i, c)) = chars.next() {
            col += 1;
            let pos = Pos {
                line: li + 1,
                column: col,
            };
            match c {
                '(' => out.push((Tok::Open, pos)),
                ')' => out.push((Tok::Close, pos)),
                c if c.is_whitespace() => {}
                _ => {
                    let mut end = i + c.len_utf8();
                    while let Some(&(j, d)) = chars.peek() {
                        if d.is_whitespace() || d == '(' || d == ')' {
                            break;
                        }
                        end = j + d.len_utf8();
                        col += 1;
                        chars.next();
                    }
                    out.push((Tok::Atom(&line[i..end]), pos));
                }
            }
        }
    }
    out
}

struct Parser<'a> {
    toks: Vec<(Tok<'a>, Pos)>,
    at: usize,
    end: Pos,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok<'a>, Pos)> {
        self.toks.get(self.at)
    }

    fn here(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.1)
    }

    fn err(&self, pos: Pos, msg: impl Into<String>) -> ParseError {
        ParseError::new(pos.line, pos.column, msg)
    }

    fn bump(&mut self) -> Option<(Tok<'a>, Pos)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expect_open(&mut self) -> Result<(), ParseError> {
        match self.bump() {
            Some((Tok::Open, _)) => Ok(()),
            Some((_, p)) => Err(self.err(p, "expected `(`")),
            None => Err(self.err(self.end, "expected an expression, found end of input")),
        }
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        match self.bump() {
            Some((Tok::Close, _)) => Ok(()),
            Some((_, p)) => Err(self.err(p, "expected `)`")),
            None => Err(self.err(self.end, "expected `)`, found end of input")),
        }
    }

    fn atom(&mut self, what: &str) -> Result<(&'a str, Pos), ParseError> {
        match self.bump() {
            Some((Tok::Atom(a), p)) => Ok((a, p)),
            Some((_, p)) => Err(self.err(p, format!("expected {what}"))),
            None => Err(self.err(self.end, format!("expected {what}, found end of input"))),
        }
    }

    fn label(&mut self) -> Result<(Label, Pos), ParseError> {
        let (a, p) = self.atom("a positive integer label")?;
        match a.parse::<Label>() {
            Ok(l) if l > 0 && a.bytes().all(|b| b.is_ascii_digit()) => Ok((l, p)),
            _ => Err(self.err(p, format!("expected a positive integer label, found `{a}`"))),
        }
    }

    /// Parses one term. Operators still waiting for operands live on an
    /// explicit stack, so nesting depth is limited only by memory.
    fn expr(&mut self) -> Result<KExpr, ParseError> {
        enum Frame {
            Union(Vec<KExpr>),
            Join(Label, Label),
            Relabel(Label, Label),
        }
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            // descend until a complete vertex term is read
            self.expect_open()?;
            let (kw, kp) = self.atom("one of `v`, `u`, `j`, `r`")?;
            let mut done = match kw {
                "v" => {
                    let (name, np) = self.atom("a vertex name")?;
                    validate_name(name).map_err(|e| self.err(np, e.to_string()))?;
                    let (label, _) = self.label()?;
                    self.expect_close()?;
                    KExpr::Intro {
                        name: name.to_string(),
                        label,
                    }
                }
                "u" => {
                    stack.push(Frame::Union(Vec::new()));
                    continue;
                }
                "j" => {
                    let (a, _) = self.label()?;
                    let (b, bp) = self.label()?;
                    if a == b {
                        return Err(self.err(bp, format!("join labels must differ (got {a} and {b})")));
                    }
                    stack.push(Frame::Join(a, b));
                    continue;
                }
                "r" => {
                    let (from, _) = self.label()?;
                    let (to, _) = self.label()?;
                    stack.push(Frame::Relabel(from, to));
                    continue;
                }
                other => {
                    return Err(self.err(kp, format!("expected one of `v`, `u`, `j`, `r`, found `{other}`")));
                }
            };
            // climb while operators are complete
            loop {
                match stack.pop() {
                    None => return Ok(done),
                    Some(Frame::Union(mut parts)) => {
                        parts.push(done);
                        if matches!(self.peek(), Some((Tok::Open, _))) {
                            stack.push(Frame::Union(parts));
                            break;
                        }
                        if parts.len() < 2 {
                            return Err(self.err(self.here(), "union needs at least two operands"));
                        }
                        self.expect_close()?;
                        done = KExpr::Union(parts);
                    }
                    Some(Frame::Join(a, b)) => {
                        self.expect_close()?;
                        done = KExpr::Join {
                            a,
                            b,
                            child: Box::new(done),
                        };
                    }
                    Some(Frame::Relabel(from, to)) => {
                        self.expect_close()?;
                        done = KExpr::Relabel {
                            from,
                            to,
                            child: Box::new(done),
                        };
                    }
                }
            }
        }
    }
}

/// Parses one expression. Duplicate vertex names are left for evaluation
/// to report.
pub fn parse_expr(src: &str) -> Result<KExpr, ParseError> {
    let lines = src.lines().count().max(1);
    let last = src.lines().last().unwrap_or("");
    let end = Pos {
        line: lines,
        column: last.chars().count() + 1,
    };
    let mut p = Parser {
        toks: lex(src),
        at: 0,
        end,
    };
    let e = p.expr()?;
    if let Some((_, pos)) = p.peek() {
        return Err(p.err(*pos, "unexpected input after the expression"));
    }
    Ok(e)
}

pub(super) fn print_expr(e: &KExpr) -> String {
    enum Item<'a> {
        Term(&'a KExpr),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Item::Term(e)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Text(t) => out.push_str(t),
            Item::Term(KExpr::Intro { name, label }) => write!(out, "(v {name} {label})").unwrap(),
            Item::Term(KExpr::Union(parts)) => {
                out.push_str("(u");
                stack.push(Item::Text(")"));
                for p in parts.iter().rev() {
                    stack.push(Item::Term(p));
                    stack.push(Item::Text(" "));
                }
            }
            Item::Term(KExpr::Join { a, b, child }) => {
                write!(out, "(j {a} {b} ").unwrap();
                stack.push(Item::Text(")"));
                stack.push(Item::Term(child));
            }
            Item::Term(KExpr::Relabel { from, to, child }) => {
                write!(out, "(r {from} {to} ").unwrap();
                stack.push(Item::Text(")"));
                stack.push(Item::Term(child));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let src = "(r 3 1 (j 1 3 (u (v a 1) # first\n (v b 3))))";
        let e = parse_expr(src).unwrap();
        assert_eq!(e.to_string(), "(r 3 1 (j 1 3 (u (v a 1) (v b 3))))");
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        let e = parse_expr("(j 1 1 (v a 1))").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.message.contains("must differ"));
        let e = parse_expr("(u (v a 1))").unwrap_err();
        assert!(e.message.contains("two operands"));
        let e = parse_expr("(v a 0)").unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_expr("(x a 1)").unwrap_err();
        assert_eq!(e.column, 2);
        let e = parse_expr("(v a 1) (v b 1)").unwrap_err();
        assert_eq!(e.column, 9);
        let e = parse_expr("(v a 1").unwrap_err();
        assert!(e.message.contains("`)`"));
        assert!(parse_expr("").is_err());
        assert!(parse_expr("(v a +1)").is_err());
    }

    #[test]
    fn second_line_positions() {
        let e = parse_expr("(u (v a 1)\n   (v b q))").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
    }
}
