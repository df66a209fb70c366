use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_variant, build_template, ComponentMatch, FamilySpec, Recognition, Template, Variant};
use crate::decomp::{recompose, CanonicalDecomposition};
use crate::graph::{Graph, Side, SplittedGraph};

/// Samples a unigraph with at most `budget` vertices (and at least one)
/// together with the decomposition it was built from.
///
/// Components are renamed `g{j}_*` where `j` is the component number, the
/// tail `t_*`. Equal seeds give equal graphs.
pub fn random_unigraph(seed: u64, budget: usize) -> (Graph, Recognition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = budget.max(1);
    let mut left = budget;

    let mut tail = None;
    if left >= 4 && rng.gen_bool(0.6) {
        let cap = if rng.gen_bool(0.5) { left } else { left.min(4 + left / 3) };
        let spec = sample_nonsplit(&mut rng, cap);
        let variant = *Variant::NONSPLIT.choose(&mut rng).expect("two variants");
        left -= spec.size();
        tail = Some((spec, variant));
    }

    // geometric number of split components, at least one without a tail
    let mut k = 0usize;
    while left > 0 && (k == 0 && tail.is_none() || rng.gen_bool(0.7)) && k < budget {
        k += 1;
        if rng.gen_bool(0.15) {
            break;
        }
    }
    let mut shares = vec![1usize; k];
    let mut spare = left.saturating_sub(k);
    for share in shares.iter_mut() {
        if spare == 0 {
            break;
        }
        let extra = rng.gen_range(0..=spare);
        *share += extra;
        spare -= extra;
    }
    shares.shuffle(&mut rng);

    let mut components = Vec::with_capacity(k);
    let mut matches = Vec::with_capacity(k);
    for (pos, &share) in shares.iter().enumerate() {
        let number = k - pos;
        let spec = sample_split(&mut rng, share);
        let variant = *Variant::SPLIT.choose(&mut rng).expect("four variants");
        let Template::Split(s) = apply_variant(&build_template(&spec).expect("sampled within bounds"), variant)
            .expect("split variant")
        else {
            unreachable!("split family")
        };
        let prefix = format!("g{number}_");
        let s = s.renamed(|name| format!("{prefix}{name}")).expect("fresh names");
        matches.push(Some(match_of(&spec, variant, s.graph(), &prefix)));
        components.push(s);
    }

    let mut tail_graph = tail.as_ref().map(|(spec, variant)| {
        let t = apply_variant(&build_template(spec).expect("sampled within bounds"), *variant).expect("nonsplit variant");
        t.graph().renamed(|name| format!("t_{name}")).expect("fresh names")
    });
    let mut tail_match = tail
        .as_ref()
        .zip(tail_graph.as_ref())
        .map(|((spec, variant), g)| match_of(spec, *variant, g, "t_"));

    // the last component's sides do not affect composition when nothing
    // follows it; a lone vertex there is reported on the clique side
    if tail.is_none() {
        if let Some(last) = components.last_mut() {
            if last.vertex_count() == 1 && last.side(0) == Side::Independent {
                *last = SplittedGraph::from_sides(last.graph().clone(), vec![Side::Clique]).expect("K1");
                if let Some(Some(m)) = matches.last_mut() {
                    m.spec = FamilySpec::K1 { side: Side::Clique };
                    m.variant = Variant::Identity;
                }
            }
        }
    }

    // a whole graph of one vertex is a tail
    if tail_graph.is_none() && components.len() == 1 && components[0].vertex_count() == 1 {
        tail_graph = Some(components.remove(0).into_graph());
        tail_match = matches.remove(0);
    }

    let decomposition = CanonicalDecomposition {
        components,
        tail: tail_graph,
    };
    let g = recompose(&decomposition).expect("distinct prefixes");
    (
        g,
        Recognition {
            decomposition,
            matches,
            tail_match,
        },
    )
}

fn match_of(spec: &FamilySpec, variant: Variant, g: &Graph, prefix: &str) -> ComponentMatch {
    let mut correspondence: Vec<(String, String)> = g
        .vertices()
        .map(|name| (name[prefix.len()..].to_string(), name.to_string()))
        .collect();
    correspondence.sort();
    ComponentMatch {
        spec: spec.clone(),
        variant,
        correspondence,
    }
}

/// A split family member with at most `cap` vertices.
fn sample_split(rng: &mut impl Rng, cap: usize) -> FamilySpec {
    let mut options = vec![0];
    if cap >= 4 {
        options.push(1);
    }
    if cap >= 8 {
        options.push(2);
    }
    if cap >= 9 {
        options.push(3);
    }
    match *options.choose(rng).expect("K1 always fits") {
        0 => FamilySpec::K1 {
            side: if rng.gen_bool(0.5) { Side::Clique } else { Side::Independent },
        },
        1 => {
            let l = rng.gen_range(2..=cap / 2);
            let mut extra = rng.gen_range(0..=cap - 2 * l);
            let mut sizes = vec![1usize; l];
            for size in sizes.iter_mut() {
                let e = rng.gen_range(0..=extra);
                *size += e;
                extra -= e;
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for p in sizes {
                match pairs.last_mut() {
                    Some((q_p, q)) if *q_p == p => *q += 1,
                    _ => pairs.push((p, 1)),
                }
            }
            FamilySpec::S2 { pairs }
        }
        2 => {
            // q1(p+1) + q2(p+2) + 1 <= cap
            let p = rng.gen_range(1..=(cap - 5) / 3);
            let q2 = rng.gen_range(1..=(cap - 1 - 2 * (p + 1)) / (p + 2));
            let q1 = rng.gen_range(2..=(cap - 1 - q2 * (p + 2)) / (p + 1));
            FamilySpec::S3 { p, q1, q2 }
        }
        _ => {
            // 2(p+1) + q(p+2) + 2 <= cap
            let p = rng.gen_range(1..=(cap - 6) / 3);
            let q = rng.gen_range(1..=(cap - 2 - 2 * (p + 1)) / (p + 2));
            FamilySpec::S4 { p, q }
        }
    }
}

/// A nonsplit family member with at most `cap >= 4` vertices.
fn sample_nonsplit(rng: &mut impl Rng, cap: usize) -> FamilySpec {
    let mut options = vec![0];
    if cap >= 5 {
        options.extend([1, 2]);
    }
    if cap >= 6 {
        options.push(3);
    }
    match *options.choose(rng).expect("mK2 always fits") {
        0 => FamilySpec::MK2 {
            m: rng.gen_range(2..=cap / 2),
        },
        1 => FamilySpec::C5,
        2 => {
            let m = rng.gen_range(1..=(cap - 3) / 2);
            let s = rng.gen_range(2..=cap - 1 - 2 * m);
            FamilySpec::U2 { m, s }
        }
        _ => FamilySpec::U3 {
            m: rng.gen_range(1..=(cap - 4) / 2),
        },
    }
}
