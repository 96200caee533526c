//! Reduction of an `r`-fold atypical block of `gl(m|n)` to the maximally
//! atypical block of `gl(r|r)`.
//!
//! Two independent constructions are provided: the height-vector formula
//! on coordinates and surgery on the weight diagram (delete every `<` and
//! `>` vertex, then close the gaps). They must agree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::{Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::graph::PrimitiveWeightGraph;
use crate::kl::jantzen_poly;
use crate::weight::Weight;

/// Coordinates over `δ_m, …, δ_1, ε_1, …, ε_n` with the `ε` entries taken
/// as plain coefficients: `(λ_m, …, λ_1 | −λ'_1, …, −λ'_n)`. Position `p`
/// (1-based) of the left block carries the `δ_{m+1−p}` coefficient.
pub fn plus_convention(w: &Weight) -> Vec<i64> {
    w.left()
        .iter()
        .copied()
        .chain(w.right().iter().map(|x| -x))
        .collect()
}

/// `h_s = λ_{m+1−i_s} − j_s + s` in the coordinates of [`plus_convention`],
/// where `δ_{i_s} − ε_{j_s}` are the atypical roots ordered by `s`.
pub fn height_vector(w: &Weight) -> Result<Vec<i64>> {
    let at = w.atypicality()?;
    if at.r == 0 {
        return Err(Error::Typical(w.to_string()));
    }
    let coords = plus_convention(w);
    let m = w.m();
    Ok(at
        .pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let s = k as i64 + 1;
            coords[m - i] - j as i64 + s
        })
        .collect())
}

/// The `gl(r|r)` weight with plus-convention coordinates `(h_r, …, h_1 |
/// −h_1, …, −h_r)`, i.e. `λ_s = λ'_s = h_s`.
pub fn reduce_formula(w: &Weight) -> Result<Weight> {
    let h = height_vector(w)?;
    let left: Vec<i64> = h.iter().rev().copied().collect();
    let core = Weight::new(left, h)?;
    if !core.is_dominant() {
        return Err(Error::Invalid(format!(
            "height vector of {w} gives non-dominant {core}"
        )));
    }
    Ok(core)
}

/// Deletes all `<` and `>` vertices and maps each remaining vertex `v` to
/// `v − #{deleted vertices < v}`.
pub fn reduce_surgery(d: &WeightDiagram) -> Result<WeightDiagram> {
    if d.atypicality() == 0 {
        return Err(Error::Typical(d.weight().to_string()));
    }
    let deleted: Vec<i64> = d
        .iter()
        .filter(|(_, s)| matches!(s, Symbol::Less | Symbol::Greater))
        .map(|(v, _)| v)
        .collect();
    WeightDiagram::from_symbols(d.cross_positions().iter().map(|&x| {
        let shift = deleted.iter().filter(|&&v| v < x).count() as i64;
        (x - shift, Symbol::Cross)
    }))
}

/// Reduces `w` by both routes and fails if they disagree.
pub fn reduce(w: &Weight) -> Result<Weight> {
    let core = reduce_formula(w)?;
    let surgery = reduce_surgery(&WeightDiagram::of(w)?)?;
    if WeightDiagram::of(&core)? != surgery {
        return Err(Error::Invalid(format!(
            "formula gives {} but surgery gives {surgery}",
            WeightDiagram::of(&core)?
        )));
    }
    Ok(core)
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub weight: Weight,
    pub core: Weight,
    pub core_diagram: String,
    pub path_count: (usize, usize),
    pub histogram: (Vec<usize>, Vec<usize>),
    pub same_moves: bool,
    pub weights_correspond: bool,
    pub skeleton_isomorphic: bool,
    pub jantzen_equal: bool,
    pub mismatches: Vec<String>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the composition structure of `K(w)` with that of the core
/// Kac module: path sets, layers, skeleton graphs and Jantzen polynomials.
pub fn check_block_invariance(w: &Weight) -> Result<InvarianceReport> {
    let core = reduce(w)?;
    let g = PrimitiveWeightGraph::build(w)?;
    let gc = PrimitiveWeightGraph::build(&core)?;
    let (ps, pc) = (g.paths(), gc.paths());
    let mut mismatches = Vec::new();

    let moves: Vec<_> = ps.paths().iter().map(|p| p.pairs()).collect();
    let core_moves: Vec<_> = pc.paths().iter().map(|p| p.pairs()).collect();
    let same_moves = moves == core_moves;
    if !same_moves {
        let first = ps
            .paths()
            .iter()
            .find(|p| !core_moves.contains(&p.pairs()))
            .map(|p| p.to_string())
            .unwrap_or_else(|| "(core has extra paths)".into());
        mismatches.push(format!("path sets differ at {first}"));
    }

    let histogram = (ps.length_histogram(), pc.length_histogram());
    if histogram.0 != histogram.1 {
        mismatches.push(format!(
            "length histograms {:?} vs {:?}",
            histogram.0, histogram.1
        ));
    }

    let mut weights_correspond = same_moves;
    if same_moves {
        for (k, mu) in ps.weights().iter().enumerate() {
            match reduce_formula(mu) {
                Ok(c) if c == pc.weights()[k] => {}
                _ => {
                    weights_correspond = false;
                    mismatches.push(format!(
                        "path {} does not reduce to the core path weight",
                        ps.paths()[k]
                    ));
                }
            }
        }
    }

    let edge_set = |g: &PrimitiveWeightGraph| -> BTreeSet<_> {
        g.edges()
            .map(|(u, v)| (g.path(u).pairs(), g.path(v).pairs()))
            .collect()
    };
    let skeleton_isomorphic = same_moves && edge_set(&g) == edge_set(&gc);
    if same_moves && !skeleton_isomorphic {
        mismatches.push("skeleton edges differ under the path bijection".into());
    }

    let mut jantzen_equal = same_moves;
    if same_moves {
        for (k, mu) in ps.weights().iter().enumerate() {
            if jantzen_poly(w, mu)? != jantzen_poly(&core, &pc.weights()[k])? {
                jantzen_equal = false;
                mismatches.push(format!("Jantzen polynomial differs at {}", ps.paths()[k]));
            }
        }
    }

    Ok(InvarianceReport {
        weight: w.clone(),
        core_diagram: WeightDiagram::of(&core)?.to_string(),
        core,
        path_count: (ps.len(), pc.len()),
        histogram,
        same_moves,
        weights_correspond,
        skeleton_isomorphic,
        jantzen_equal,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn example_heights_and_core() {
        let lam = w("rho:7,5,4,2,1|1,2,4,7,8,10");
        assert_eq!(height_vector(&lam).unwrap(), vec![1, 1, 2, 3]);
        let core = reduce_formula(&lam).unwrap();
        assert_eq!(core.to_string(), "3,2,1,1|1,1,2,3");
        assert_eq!(
            WeightDiagram::of(&core).unwrap().cross_positions(),
            &[1, 2, 4, 6]
        );
        let surgery = reduce_surgery(&WeightDiagram::of(&lam).unwrap()).unwrap();
        assert_eq!(surgery.cross_positions(), &[1, 2, 4, 6]);
        assert_eq!(surgery.to_string(), "@1:xx.x.x");
    }

    #[test]
    fn second_hand_checked_case() {
        // gl(2|1), ρ-values (3,0 | 3): a > at 0 left of the cross at 3.
        // i = 2, j = 1, λ_2 = 2, so h_1 = 2 − 1 + 1 = 2; surgery moves the
        // cross from 3 to 2.
        let lam = w("rho:3,0|3");
        assert_eq!(height_vector(&lam).unwrap(), vec![2]);
        assert_eq!(reduce(&lam).unwrap(), w("2|2"));
        let d = WeightDiagram::of(&lam).unwrap();
        assert_eq!(reduce_surgery(&d).unwrap().cross_positions(), &[2]);
    }

    #[test]
    fn gl11_and_fixed_points() {
        assert_eq!(height_vector(&w("0|0")).unwrap(), vec![0]);
        assert_eq!(reduce_formula(&w("0|0")).unwrap(), w("0|0"));
        let core = w("3,2,1,1|1,1,2,3");
        assert_eq!(reduce(&core).unwrap(), core);
        let d: WeightDiagram = "@0:x.xx".parse().unwrap();
        assert_eq!(reduce_surgery(&d).unwrap(), d);
    }

    #[test]
    fn surgery_shift() {
        let d: WeightDiagram = "@0:>x".parse().unwrap();
        assert_eq!(reduce_surgery(&d).unwrap().cross_positions(), &[0]);
        assert!(matches!(reduce_formula(&w("1|0")), Err(Error::Typical(_))));
    }

    #[test]
    fn example_invariance() {
        let report = check_block_invariance(&w("rho:7,5,4,2,1|1,2,4,7,8,10")).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches);
        assert_eq!(report.path_count, (19, 19));
        assert_eq!(report.histogram.1, vec![1, 4, 7, 6, 1]);
    }
}
