//! Maximum independent set, minimum vertex cover and minimum dominating set
//! by dynamic programming over a k-expression.
//!
//! Every vertex with a given label is treated identically by the rest of
//! the expression, so a partial solution only matters through a small
//! signature per label.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Serialize;

use crate::error::OracleError;
use crate::kexpr::{KExpr, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Mis,
    Vc,
    Ds,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Mis => "mis",
            Problem::Vc => "vc",
            Problem::Ds => "ds",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mis" => Ok(Problem::Mis),
            "vc" => Ok(Problem::Vc),
            "ds" => Ok(Problem::Ds),
            other => Err(format!("unknown problem `{other}` (expected mis, vc or ds)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub problem: Problem,
    pub value: usize,
    /// Sorted vertex names.
    pub witness: Vec<String>,
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "problem={} value={} witness={{{}}}", self.problem, self.value, self.witness.join(","))
    }
}

pub const MAX_LABELS: usize = 32;

// vertex sets shared between DP states
enum Wit {
    One(u32),
    Both(Rc<Wit>, Rc<Wit>),
}

type WitRef = Option<Rc<Wit>>;

fn merge(a: &WitRef, b: &WitRef) -> WitRef {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(Rc::new(Wit::Both(x.clone(), y.clone()))),
    }
}

fn collect(w: &WitRef, names: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack: Vec<&Wit> = w.iter().map(|r| r.as_ref()).collect();
    while let Some(x) = stack.pop() {
        match x {
            Wit::One(v) => out.push(names[*v as usize].clone()),
            Wit::Both(a, b) => {
                stack.push(a);
                stack.push(b);
            }
        }
    }
    out.sort();
    out
}

/// Dense label indices for the expression.
fn label_index(e: &KExpr) -> Result<HashMap<Label, u32>, OracleError> {
    let labels = e.labels();
    if labels.len() > MAX_LABELS {
        return Err(OracleError::TooManyLabels(labels.len()));
    }
    Ok(labels.into_iter().enumerate().map(|(i, l)| (l, i as u32)).collect())
}

type Table = BTreeMap<u64, (usize, WitRef)>;

fn keep_best(t: &mut Table, key: u64, value: usize, w: WitRef, better: fn(usize, usize) -> bool) {
    match t.get(&key) {
        Some((old, _)) if !better(value, *old) => {}
        _ => {
            t.insert(key, (value, w));
        }
    }
}

fn run_dp(
    e: &KExpr,
    intro: fn(u32, u32) -> Vec<(u64, usize, bool)>,
    join: fn(u64, u32, u32) -> Option<u64>,
    relabel: fn(u64, u32, u32) -> u64,
    better: fn(usize, usize) -> bool,
) -> Result<(Table, Vec<String>), OracleError> {
    e.validate()?;
    let idx = label_index(e)?;
    let mut names: Vec<String> = Vec::new();
    let table = e.fold(|node, kids: Vec<Table>| match node {
        KExpr::Intro { name, label } => {
            let id = names.len() as u32;
            names.push(name.clone());
            let mut t = Table::new();
            for (key, value, chosen) in intro(idx[label], id) {
                let w = chosen.then(|| Rc::new(Wit::One(id)));
                keep_best(&mut t, key, value, w, better);
            }
            t
        }
        KExpr::Union(_) => {
            let mut it = kids.into_iter();
            let mut acc = it.next().expect("union operand");
            for next in it {
                let mut out = Table::new();
                for (k1, (v1, w1)) in &acc {
                    for (k2, (v2, w2)) in &next {
                        keep_best(&mut out, k1 | k2, v1 + v2, merge(w1, w2), better);
                    }
                }
                acc = out;
            }
            acc
        }
        KExpr::Join { a, b, .. } => {
            let mut out = Table::new();
            for (k, (v, w)) in kids.into_iter().next().expect("join child") {
                if let Some(k2) = join(k, idx[a], idx[b]) {
                    keep_best(&mut out, k2, v, w, better);
                }
            }
            out
        }
        KExpr::Relabel { from, to, .. } => {
            let mut out = Table::new();
            for (k, (v, w)) in kids.into_iter().next().expect("relabel child") {
                keep_best(&mut out, relabel(k, idx[from], idx[to]), v, w, better);
            }
            out
        }
    });
    Ok((table, names))
}

/// States are the set of labels carrying a chosen vertex.
pub fn solve_mis(e: &KExpr) -> Result<Solution, OracleError> {
    let (table, names) = run_dp(
        e,
        |l, _| vec![(0, 0, false), (1 << l, 1, true)],
        |k, a, b| (k & (1 << a) == 0 || k & (1 << b) == 0).then_some(k),
        |k, from, to| {
            if k & (1 << from) != 0 {
                (k & !(1 << from)) | (1 << to)
            } else {
                k
            }
        },
        |new, old| new > old,
    )?;
    let (value, w) = table.values().max_by_key(|(v, _)| *v).expect("at least the empty set");
    Ok(Solution {
        problem: Problem::Mis,
        value: *value,
        witness: collect(w, &names),
    })
}

pub fn solve_vc(e: &KExpr) -> Result<Solution, OracleError> {
    let mis = solve_mis(e)?;
    let inside: BTreeSet<&str> = mis.witness.iter().map(String::as_str).collect();
    let mut witness: Vec<String> = e
        .vertex_names()
        .into_iter()
        .filter(|v| !inside.contains(v))
        .map(str::to_string)
        .collect();
    witness.sort();
    Ok(Solution {
        problem: Problem::Vc,
        value: witness.len(),
        witness,
    })
}

// two bits per label: bit 2l = some chosen vertex, bit 2l+1 = some
// undominated vertex
const fn sel(l: u32) -> u64 {
    1 << (2 * l)
}

const fn und(l: u32) -> u64 {
    1 << (2 * l + 1)
}

pub fn solve_mds(e: &KExpr) -> Result<Solution, OracleError> {
    let (table, names) = run_dp(
        e,
        |l, _| vec![(und(l), 0, false), (sel(l), 1, true)],
        |mut k, a, b| {
            let (sa, sb) = (k & sel(a) != 0, k & sel(b) != 0);
            if sa {
                k &= !und(b);
            }
            if sb {
                k &= !und(a);
            }
            Some(k)
        },
        |k, from, to| {
            let mut out = k & !(sel(from) | und(from));
            if k & sel(from) != 0 {
                out |= sel(to);
            }
            if k & und(from) != 0 {
                out |= und(to);
            }
            out
        },
        |new, old| new < old,
    )?;
    const UND_MASK: u64 = 0xAAAA_AAAA_AAAA_AAAA;
    let (value, w) = table
        .iter()
        .filter(|(k, _)| **k & UND_MASK == 0)
        .map(|(_, vw)| vw)
        .min_by_key(|(v, _)| *v)
        .expect("choosing every vertex dominates");
    Ok(Solution {
        problem: Problem::Ds,
        value: *value,
        witness: collect(w, &names),
    })
}

pub fn solve(problem: Problem, e: &KExpr) -> Result<Solution, OracleError> {
    match problem {
        Problem::Mis => solve_mis(e),
        Problem::Vc => solve_vc(e),
        Problem::Ds => solve_mds(e),
    }
}
