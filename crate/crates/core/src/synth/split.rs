//! Split-labeled expressions for split components, built in template vertex
//! names. Clique vertices end with label 1, independent ones with label 2.

use crate::catalog::{star_sizes, FamilySpec, Variant};
use crate::kexpr::KExpr;

fn v(name: &str, label: u32) -> KExpr {
    KExpr::intro(name, label)
}

fn u(parts: Vec<KExpr>) -> KExpr {
    KExpr::union(parts)
}

/// `K_n` with every vertex labeled 1.
pub(super) fn clique(names: &[String]) -> KExpr {
    let mut it = names.iter();
    let first = it.next().expect("nonempty clique");
    it.fold(v(first, 1), |acc, n| u(vec![acc, v(n, 2)]).joined(1, 2).relabeled(2, 1))
}

/// One star `K_{1,n}` in the given variant.
fn star(variant: Variant, center: &str, leaves: &[String]) -> KExpr {
    let leaf_intros = |label| leaves.iter().map(|l| v(l, label)).collect::<Vec<_>>();
    match variant {
        Variant::Identity => {
            let mut parts = vec![v(center, 1)];
            parts.extend(leaf_intros(2));
            u(parts).joined(1, 2)
        }
        Variant::Inverse => u(vec![v(center, 2), clique(leaves)]).joined(1, 2),
        Variant::Complement => u(vec![v(center, 2), clique(leaves)]),
        Variant::InverseComplement => {
            let mut parts = vec![v(center, 1)];
            parts.extend(leaf_intros(2));
            u(parts)
        }
    }
}

/// `S2` over stars given as `(center, leaves)` in non-increasing size,
/// adding one star at a time.
pub(super) fn s2(variant: Variant, stars: &[(String, Vec<String>)]) -> KExpr {
    let mut it = stars.iter();
    let (c, ls) = it.next().expect("at least one star");
    let mut acc = star(variant, c, ls);
    for (c, ls) in it {
        let next = star(variant, c, ls);
        acc = match variant {
            Variant::Identity | Variant::Inverse => u(vec![acc, next.relabeled(1, 3)]).joined(1, 3).relabeled(3, 1),
            Variant::Complement => u(vec![acc, next.relabeled(1, 3).relabeled(2, 4)])
                .joined(1, 3)
                .joined(1, 4)
                .joined(2, 3)
                .relabeled(3, 1)
                .relabeled(4, 2),
            Variant::InverseComplement => u(vec![acc, next.relabeled(2, 4).relabeled(1, 3)])
                .joined(1, 3)
                .joined(1, 4)
                .joined(2, 3)
                .relabeled(3, 1)
                .relabeled(4, 2),
        };
    }
    acc
}

/// Template stars `c{j}` with leaves `l{j}_{i}`.
fn template_stars(sizes: &[usize]) -> Vec<(String, Vec<String>)> {
    sizes
        .iter()
        .enumerate()
        .map(|(j, &p)| (format!("c{j}"), (0..p).map(|i| format!("l{j}_{i}")).collect()))
        .collect()
}

/// The big (`p+1`) and small (`p`) star groups of an `S3` or `S4`.
fn s3_groups(p: usize, q1: usize, q2: usize) -> (Vec<(String, Vec<String>)>, Vec<(String, Vec<String>)>) {
    let mut all = template_stars(&star_sizes(&[(p + 1, q2), (p, q1)]));
    let small = all.split_off(q2);
    (all, small)
}

fn s3(variant: Variant, p: usize, q1: usize, q2: usize) -> KExpr {
    let (big, small) = s3_groups(p, q1, q2);
    let small = s2(variant, &small);
    let big = s2(variant, &big);
    match variant {
        Variant::Identity => u(vec![
            u(vec![small, v("v", 3)]).joined(1, 3).relabeled(3, 2),
            big.relabeled(1, 3),
        ])
        .joined(1, 3)
        .relabeled(3, 1),
        Variant::Inverse => u(vec![
            u(vec![small, v("v", 3)]).joined(1, 3).joined(2, 3).relabeled(3, 1),
            big.relabeled(1, 3),
        ])
        .joined(1, 3)
        .relabeled(3, 1),
        Variant::Complement => u(vec![
            u(vec![small, v("v", 3)]).joined(1, 3).relabeled(3, 1),
            big.relabeled(1, 3).relabeled(2, 4),
        ])
        .joined(1, 3)
        .joined(1, 4)
        .joined(2, 3)
        .relabeled(3, 1)
        .relabeled(4, 2),
        Variant::InverseComplement => u(vec![u(vec![small, v("v", 2)]), big.relabeled(1, 3).relabeled(2, 4)])
            .joined(1, 3)
            .joined(1, 4)
            .joined(2, 3)
            .relabeled(3, 1)
            .relabeled(4, 2),
    }
}

fn s4(variant: Variant, p: usize, q: usize) -> KExpr {
    let (big, small) = s3_groups(p, 2, q);
    let small = s2(variant, &small);
    let big = s2(variant, &big);
    match variant {
        Variant::Identity => {
            let x1 = u(vec![u(vec![small, v("v", 3)]).joined(1, 3), big.relabeled(1, 4)])
                .joined(1, 4)
                .relabeled(4, 1);
            u(vec![v("u", 4), x1]).joined(1, 4).joined(2, 4).relabeled(3, 2).relabeled(4, 1)
        }
        Variant::Inverse => {
            let x2 = u(vec![u(vec![small, v("v", 3)]).joined(1, 3).joined(2, 3), big.relabeled(1, 4)])
                .joined(1, 4)
                .joined(3, 4)
                .relabeled(4, 1);
            // u meets the leaves only; an extra join of labels 3 and 4 here
            // would also connect u to v
            u(vec![v("u", 4), x2]).joined(1, 4).relabeled(3, 1).relabeled(4, 2)
        }
        Variant::Complement => {
            let x3 = u(vec![
                u(vec![small, v("v", 3)]).joined(1, 3),
                big.relabeled(1, 4).relabeled(2, 5),
            ])
            .joined(1, 4)
            .joined(1, 5)
            .joined(2, 4)
            .joined(3, 4)
            .joined(3, 5)
            .relabeled(4, 1)
            .relabeled(5, 2);
            u(vec![v("u", 4), x3]).joined(3, 4).relabeled(3, 1).relabeled(4, 2)
        }
        Variant::InverseComplement => {
            let x4 = u(vec![u(vec![small, v("v", 3)]), big.relabeled(1, 4).relabeled(2, 5)])
                .joined(1, 4)
                .joined(1, 5)
                .joined(2, 4)
                .joined(3, 4)
                .relabeled(4, 1)
                .relabeled(5, 2);
            u(vec![v("u", 4), x4]).joined(1, 4).joined(3, 4).relabeled(3, 2).relabeled(4, 1)
        }
    }
}

/// Expression in template names, or `None` for nonsplit families.
pub(super) fn template_expr(spec: &FamilySpec, variant: Variant) -> Option<KExpr> {
    use crate::graph::Side;
    Some(match spec {
        FamilySpec::K1 { side } => {
            let side = match variant {
                Variant::Identity | Variant::InverseComplement => *side,
                Variant::Inverse | Variant::Complement => side.flip(),
            };
            v("a", if side == Side::Clique { 1 } else { 2 })
        }
        FamilySpec::S2 { pairs } => s2(variant, &template_stars(&star_sizes(pairs))),
        FamilySpec::S3 { p, q1, q2 } => s3(variant, *p, *q1, *q2),
        FamilySpec::S4 { p, q } => s4(variant, *p, *q),
        _ => return None,
    })
}
