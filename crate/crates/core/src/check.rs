//! The invariant suite run by `kac check` on a single weight.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::path_to_code;
use crate::diagram::WeightDiagram;
use crate::enumerate::{brundan_factors, enumerate_paths};
use crate::error::Result;
use crate::graph::PrimitiveWeightGraph;
use crate::kl::{closure_set, KlMatrices};
use crate::moves::LeftPath;
use crate::reduction::check_block_invariance;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(name: &'static str, failure: Option<String>) -> CheckResult {
    CheckResult {
        name,
        passed: failure.is_none(),
        detail: failure.unwrap_or_default(),
    }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

pub fn run_checks(w: &Weight, seed: u64) -> Result<Vec<CheckResult>> {
    w.require_dominant()?;
    let d = WeightDiagram::of(w)?;
    let g = PrimitiveWeightGraph::from_diagram(&d);
    let r = g.r();
    let closure = g.derived_closure();
    let reaches = |u: usize, v: usize| u == v || closure.reaches(u, v);
    let name = |v: usize| g.path(v).to_string();
    let mut out = Vec::new();

    out.push(result(
        "diagram round trip",
        (d.weight() != *w).then(|| format!("diagram reads back as {}", d.weight())),
    ));

    let chi0 = w.atypicality_via_chi0()?;
    out.push(result(
        "atypicality by pairing",
        (chi0 != r).then(|| format!("pairing count {chi0}, diagram count {r}")),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = rng.gen_range(-6..=6);
    let moved = WeightDiagram::of(&w.translate(c))?;
    let same_paths = enumerate_paths(&moved)
        .paths()
        .iter()
        .map(LeftPath::pairs)
        .eq(g.paths().paths().iter().map(LeftPath::pairs));
    out.push(result(
        "translation",
        (moved != d.shifted(c) || !same_paths).then(|| format!("shift by {c}")),
    ));

    let factors: BTreeSet<&Weight> = g.paths().weights().iter().collect();
    let found = brundan_factors(w)?;
    let brundan: BTreeSet<&Weight> = found.iter().map(|(mu, _)| mu).collect();
    out.push(result(
        "right-path characterization",
        (factors != brundan).then(|| {
            format!(
                "{} path weights, {} right-path weights",
                factors.len(),
                brundan.len()
            )
        }),
    ));

    let codes: BTreeSet<String> = g
        .paths()
        .paths()
        .iter()
        .map(|p| path_to_code(p, r).to_string())
        .collect();
    out.push(result(
        "codes distinct",
        (codes.len() != g.len()).then(|| format!("{} codes for {} paths", codes.len(), g.len())),
    ));

    out.push(result(
        "edges raise length by one",
        first_failure(g.edges().map(|(u, v)| {
            (g.path(v).len() != g.path(u).len() + 1).then(|| format!("{} -> {}", name(u), name(v)))
        })),
    ));

    let sources: Vec<usize> = (0..g.len())
        .filter(|&v| g.predecessors(v).is_empty())
        .collect();
    out.push(result(
        "unique source",
        (sources != [g.source()]).then(|| {
            let s: Vec<String> = sources.iter().map(|&v| name(v)).collect();
            format!("in-degree 0: {}", s.join(", "))
        }),
    ));

    let bottom = g.bottom();
    out.push(result(
        "every vertex reaches the bottom",
        first_failure((0..g.len()).map(|v| (!reaches(v, bottom)).then(|| name(v)))),
    ));

    out.push(result(
        "every vertex on a full chain",
        first_failure(
            (0..g.len()).map(|v| (!reaches(g.source(), v) || !reaches(v, bottom)).then(|| name(v))),
        ),
    ));

    let layers = g.jantzen_layers();
    out.push(result(
        "layers",
        (layers.len() != r + 1 || layers.iter().any(Vec::is_empty) || layers[r].len() != 1)
            .then(|| format!("{:?}", g.paths().length_histogram())),
    ));

    let (longest, _) = g.max_chain();
    out.push(result(
        "longest chain has length r",
        (longest != r).then(|| format!("longest chain {longest}, r = {r}")),
    ));

    out.push(result(
        "canonical chain",
        g.canonical_chain()
            .is_none()
            .then(|| "missing skeleton edge".to_string()),
    ));

    let bridgeless: Vec<usize> = (0..g.len()).filter(|&v| !g.path(v).has_bridges()).collect();
    out.push(result(
        "subpath criterion for bridgeless paths",
        first_failure(
            bridgeless
                .iter()
                .flat_map(|&u| bridgeless.iter().map(move |&v| (u, v)))
                .map(|(u, v)| {
                    (u != v && closure.reaches(u, v) != g.path(u).is_subpath_of(g.path(v)))
                        .then(|| format!("{} vs {}", name(u), name(v)))
                }),
        ),
    ));

    out.push(result("split ranges", split_range_failure(&g, &reaches)));

    out.push(result(
        "blocks: bridgeless iff length = depth + 1",
        first_failure(
            g.paths()
                .paths()
                .iter()
                .flat_map(LeftPath::blocks)
                .map(|b| {
                    let (len, _, depth) = b.stats();
                    (b.has_bridges() == (len == depth + 1)).then(|| b.to_string())
                }),
        ),
    ));

    let kl = KlMatrices::new(closure_set(w, 1)?)?;
    out.push(result(
        "P·A = I on the depth-1 closure",
        (!kl.verify_inverse()).then(|| format!("{} weights", kl.poset.len())),
    ));

    if r > 0 {
        let report = check_block_invariance(w)?;
        out.push(result(
            "block reduction invariance",
            report.mismatches.first().cloned(),
        ));
    }
    Ok(out)
}

/// Paths whose moves all lie in `[1, k]` or in `[k+1, r]` compare
/// componentwise.
fn split_range_failure(
    g: &PrimitiveWeightGraph,
    reaches: &dyn Fn(usize, usize) -> bool,
) -> Option<String> {
    let index: HashMap<Vec<(usize, usize)>, usize> =
        (0..g.len()).map(|v| (g.path(v).pairs(), v)).collect();
    for k in 1..g.r() {
        let parts: Vec<(usize, usize, usize)> = (0..g.len())
            .filter_map(|v| {
                let pairs = g.path(v).pairs();
                if pairs.iter().any(|&(i, j)| i <= k && j > k) {
                    return None;
                }
                let (lo, hi): (Vec<_>, Vec<_>) = pairs.iter().partition(|&&(_, j)| j <= k);
                Some((v, *index.get(&lo)?, *index.get(&hi)?))
            })
            .collect();
        for &(u, a, b) in &parts {
            for &(v, c, e) in &parts {
                if u == v {
                    continue;
                }
                let whole = reaches(u, v);
                let split = reaches(a, c) && reaches(b, e);
                if whole != split {
                    return Some(format!("k = {k}: {} vs {}", g.path(u), g.path(v)));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_passes() {
        let w: Weight = "rho:7,5,4,2,1|1,2,4,7,8,10".parse().unwrap();
        for c in run_checks(&w, 1).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn typical_passes() {
        let w: Weight = "2,1|0".parse().unwrap();
        let checks = run_checks(&w, 1).unwrap();
        assert!(checks.iter().all(|c| c.passed));
        assert!(checks
            .iter()
            .all(|c| c.name != "block reduction invariance"));
    }
}
