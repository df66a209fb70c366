//! Exact clique-width test for small graphs.
//!
//! Any expression can be rewritten so that every subterm over a vertex set
//! `X` builds exactly `G[X]`: a join that later adds an edge inside `X`
//! can be moved down to the first point where both ends exist, since
//! vertices sharing a label never separate. A subterm is then described by
//! `X` and the partition of `X` into label classes. Vertices of one class
//! must agree on their neighbours outside `X`, and a finer partition can
//! always be coarsened by relabels, so only the finest reachable partitions
//! are kept.
//!
//! After a union of `(X1, P1)` and `(X2, P2)` the classes of `P1 ⊎ P2` may
//! merge where the two sides share a label, and joins between the resulting
//! classes must add every edge between `X1` and `X2` and nothing else.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{adjacency_masks, guard};
use crate::error::OracleError;
use crate::graph::Graph;

pub const DEFAULT_CWD_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CwdOutcome {
    Yes,
    No,
    /// The step budget ran out first.
    Indeterminate,
}

/// Sorted block masks.
type Partition = Vec<u32>;

struct Search<'a> {
    adj: &'a [u32],
    k: usize,
    steps: u64,
    budget: u64,
}

fn refines(p: &Partition, q: &Partition) -> bool {
    p.iter().all(|&b| q.iter().any(|&c| b & c == b))
}

fn insert_finest(states: &mut Vec<Partition>, p: Partition) {
    if states.iter().any(|q| refines(q, &p)) {
        return;
    }
    states.retain(|q| !refines(&p, q));
    states.push(p);
}

impl Search<'_> {
    fn outside(&self, v: usize, x: u32) -> u32 {
        self.adj[v] & !x
    }

    fn complete(&self, a: u32, b: u32) -> bool {
        let mut m = a;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.adj[v] & b != b {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    /// Coarsenings of `left ⊎ right` that realise every edge between the two
    /// sides, added to `out`. `None` when the budget runs out.
    fn combine(&mut self, x: u32, left: &Partition, right: &Partition, out: &mut Vec<Partition>) -> Option<()> {
        let items: Vec<(u32, u32)> = left
            .iter()
            .chain(right)
            .map(|&b| (b, self.outside(b.trailing_zeros() as usize, x)))
            .collect();
        // block pairs across the union that are adjacent
        let mut cross = Vec::new();
        for (i, &(b1, _)) in items.iter().enumerate().take(left.len()) {
            for (j, &(b2, _)) in items.iter().enumerate().skip(left.len()) {
                if self.adj[b1.trailing_zeros() as usize] & b2 != 0 {
                    cross.push((i, j));
                }
            }
        }
        let mut group_of = vec![0usize; items.len()];
        let mut groups: Vec<(u32, u32)> = Vec::new();
        self.assign(0, &items, &cross, &mut group_of, &mut groups, out)
    }

    fn assign(
        &mut self,
        i: usize,
        items: &[(u32, u32)],
        cross: &[(usize, usize)],
        group_of: &mut Vec<usize>,
        groups: &mut Vec<(u32, u32)>,
        out: &mut Vec<Partition>,
    ) -> Option<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return None;
        }
        if i == items.len() {
            let ok = cross.iter().all(|&(a, b)| {
                let (ga, gb) = (group_of[a], group_of[b]);
                ga != gb && self.complete(groups[ga].0, groups[gb].0)
            });
            if ok {
                let mut p: Partition = groups.iter().map(|g| g.0).collect();
                p.sort_unstable();
                insert_finest(out, p);
            }
            return Some(());
        }
        let (block, sig) = items[i];
        for gi in 0..groups.len() {
            if groups[gi].1 != sig {
                continue;
            }
            // an adjacent pair across the union can never be joined once merged
            if cross.iter().any(|&(a, b)| (a == i && b < i && group_of[b] == gi) || (b == i && a < i && group_of[a] == gi)) {
                continue;
            }
            groups[gi].0 |= block;
            group_of[i] = gi;
            self.assign(i + 1, items, cross, group_of, groups, out)?;
            groups[gi].0 &= !block;
        }
        if groups.len() < self.k {
            groups.push((block, sig));
            group_of[i] = groups.len() - 1;
            self.assign(i + 1, items, cross, group_of, groups, out)?;
            groups.pop();
        }
        Some(())
    }
}

/// Decides `cwd(g) <= k` exactly, or gives up after `budget` search steps.
pub fn oracle_cwd_leq(g: &Graph, k: usize, budget: u64) -> Result<CwdOutcome, OracleError> {
    let n = g.vertex_count();
    guard("oracle_cwd_leq", 10, 12, n)?;
    if n == 0 {
        return Ok(CwdOutcome::Yes);
    }
    if k == 0 {
        return Ok(CwdOutcome::No);
    }
    let adj = adjacency_masks(g);
    let mut search = Search {
        adj: &adj,
        k,
        steps: 0,
        budget,
    };
    let full = (1u32 << n) - 1;
    let mut states: HashMap<u32, Vec<Partition>> = HashMap::new();
    for x in 1..=full {
        if x.count_ones() == 1 {
            states.insert(x, vec![vec![x]]);
            continue;
        }
        let low = x & x.wrapping_neg();
        let mut found: Vec<Partition> = Vec::new();
        // proper submasks holding the lowest vertex
        let rest = x & !low;
        let mut sub = rest;
        loop {
            sub = (sub.wrapping_sub(1)) & rest;
            let x1 = low | sub;
            let x2 = x & !x1;
            if x2 != 0 {
                if let (Some(p1s), Some(p2s)) = (states.get(&x1), states.get(&x2)) {
                    for p1 in p1s {
                        for p2 in p2s {
                            if search.combine(x, p1, p2, &mut found).is_none() {
                                return Ok(CwdOutcome::Indeterminate);
                            }
                        }
                    }
                }
            }
            if sub == 0 {
                break;
            }
        }
        if !found.is_empty() {
            states.insert(x, found);
        }
    }
    Ok(if states.contains_key(&full) {
        CwdOutcome::Yes
    } else {
        CwdOutcome::No
    })
}

/// Known bounds on the clique-width.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CwdInterval {
    pub lo: usize,
    pub hi: usize,
}

impl CwdInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for CwdInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Tries `k = 1, 2, ..., max_k` until a yes, narrowing the interval as it
/// goes. Each test gets its own `budget`.
pub fn cwd_interval(g: &Graph, max_k: usize, budget: u64) -> Result<CwdInterval, OracleError> {
    let n = g.vertex_count();
    let mut iv = CwdInterval { lo: n.min(1), hi: n };
    for k in 1..=n.min(max_k) {
        match oracle_cwd_leq(g, k, budget)? {
            CwdOutcome::Yes => {
                iv.hi = k;
                break;
            }
            CwdOutcome::No => iv.lo = k + 1,
            CwdOutcome::Indeterminate => break,
        }
    }
    Ok(iv)
}
