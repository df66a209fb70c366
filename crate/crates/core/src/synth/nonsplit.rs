//! Expressions for nonsplit tails; every vertex ends with label 1.

use crate::catalog::{FamilySpec, Variant};
use crate::error::SynthError;
use crate::graph::Graph;
use crate::kexpr::KExpr;

/// Two-label expression for a P4-free graph by cotree recursion.
pub fn synth_cograph(g: &Graph) -> Result<KExpr, SynthError> {
    if g.is_empty() {
        return Err(SynthError::EmptyGraph);
    }
    cograph_rec(g)
}

fn cograph_rec(g: &Graph) -> Result<KExpr, SynthError> {
    if g.vertex_count() == 1 {
        return Ok(KExpr::intro(g.name(0), 1));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let parts = comps
            .iter()
            .map(|c| cograph_rec(&g.induced_idx(c)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(KExpr::union(parts));
    }
    let co = g.complement().components();
    if co.len() < 2 {
        return Err(SynthError::NotCograph);
    }
    let mut parts = co.iter().map(|c| cograph_rec(&g.induced_idx(c)));
    let mut acc = parts.next().expect("two co-components")?;
    for next in parts {
        acc = KExpr::union(vec![acc, next?.relabeled(1, 2)]).joined(1, 2).relabeled(2, 1);
    }
    Ok(acc)
}

/// `C5` along the cycle `a b c d e`: the paths `a b` and `c d` are built
/// apart, linked through `b c`, and closed by `e`.
fn c5(target: &Graph) -> KExpr {
    let start = 0;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 0..4 {
        let next = *target
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev && !order.contains(&w))
            .expect("five-cycle");
        order.push(next);
        prev = cur;
        cur = next;
    }
    let names: Vec<String> = order.iter().map(|&i| target.name(i).to_string()).collect();
    let [a, b, c, d, e] = <[String; 5]>::try_from(names).expect("five vertices");
    let ab = KExpr::union(vec![KExpr::intro(a, 1), KExpr::intro(b, 2)]).joined(1, 2).relabeled(1, 3);
    let cd = KExpr::union(vec![KExpr::intro(c, 1), KExpr::intro(d, 3)]).joined(1, 3);
    let path = KExpr::union(vec![ab, cd]).joined(1, 2).relabeled(2, 1);
    KExpr::union(vec![path, KExpr::intro(e, 2)])
        .joined(2, 3)
        .relabeled(2, 1)
        .relabeled(3, 1)
}

/// Expression for a tail in input names. `target` is the tail itself and
/// `name` maps template names to input names.
pub(super) fn nonsplit_expr(
    spec: &FamilySpec,
    variant: Variant,
    target: &Graph,
    name: &dyn Fn(&str) -> String,
) -> Result<KExpr, SynthError> {
    Ok(match (spec, variant) {
        (FamilySpec::K1 { .. }, _) => KExpr::intro(target.name(0), 1),
        (FamilySpec::C5, _) => c5(target),
        (FamilySpec::MK2 { .. } | FamilySpec::U2 { .. }, _) => synth_cograph(target)?,
        (FamilySpec::U3 { m }, Variant::Identity) => {
            let pairs: Vec<(String, String)> = (0..*m).map(|i| (name(&format!("p{i}")), name(&format!("r{i}")))).collect();
            let mk2 = KExpr::union(
                pairs
                    .iter()
                    .map(|(p, r)| {
                        KExpr::union(vec![KExpr::intro(p.clone(), 1), KExpr::intro(r.clone(), 2)])
                            .joined(1, 2)
                            .relabeled(2, 1)
                    })
                    .collect(),
            );
            let k12 = KExpr::union(vec![
                KExpr::intro(name("y"), 1),
                KExpr::intro(name("x0"), 2),
                KExpr::intro(name("x1"), 2),
            ])
            .joined(1, 2);
            KExpr::union(vec![mk2.relabeled(1, 2), KExpr::intro(name("w"), 3), k12])
                .joined(2, 3)
                .relabeled(2, 1)
                .relabeled(3, 1)
        }
        (FamilySpec::U3 { m }, Variant::Complement) => {
            let mut u_names = Vec::with_capacity(2 * m);
            for i in 0..*m {
                u_names.push(name(&format!("p{i}")));
                u_names.push(name(&format!("r{i}")));
            }
            let u_part = target.induced(&u_names)?;
            let co_mk2 = synth_cograph(&u_part)?;
            // K2 ⊕ K1 split-labeled: x0 x1 on the clique side, y independent
            let k2 = KExpr::union(vec![KExpr::intro(name("x0"), 1), KExpr::intro(name("x1"), 2)])
                .joined(1, 2)
                .relabeled(2, 1);
            let w_part = KExpr::union(vec![KExpr::intro(name("w"), 3), KExpr::union(vec![k2, KExpr::intro(name("y"), 2)])])
                .joined(2, 3)
                .relabeled(1, 2);
            KExpr::union(vec![co_mk2, w_part])
                .joined(1, 2)
                .relabeled(2, 1)
                .relabeled(3, 1)
        }
        _ => return Err(SynthError::WrongKind("nonsplit")),
    })
}
