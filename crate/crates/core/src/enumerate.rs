//! Exhaustive enumeration of left paths: the composition factors of `K(λ)`.

use crate::diagram::WeightDiagram;
use crate::error::Result;
use crate::moves::{
    check_extension, left_move_candidates, right_move, LeftMove, LeftPath, RightPath,
};
use crate::weight::Weight;

/// All left paths of a diagram with their weights, in enumeration order.
#[derive(Debug, Clone)]
pub struct PathSet {
    base: WeightDiagram,
    paths: Vec<LeftPath>,
    weights: Vec<Weight>,
}

impl PathSet {
    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    pub fn paths(&self) -> &[LeftPath] {
        &self.paths
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn r(&self) -> usize {
        self.base.atypicality()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(LeftPath::len).collect()
    }

    /// Number of paths of each length `0..=r`.
    pub fn length_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.r() + 1];
        for p in &self.paths {
            h[p.len()] += 1;
        }
        h
    }

    pub fn index_of(&self, p: &LeftPath) -> Option<usize> {
        self.paths.iter().position(|q| q == p)
    }

    pub fn index_of_weight(&self, w: &Weight) -> Option<usize> {
        self.weights.iter().position(|v| v == w)
    }
}

fn search(d: &WeightDiagram, next_j: usize, prefix: &mut Vec<LeftMove>, out: &mut Vec<LeftPath>) {
    out.push(LeftPath::from_valid_moves(prefix.clone()));
    for j in next_j..=d.atypicality() {
        for (i, target) in left_move_candidates(d, j).expect("j <= r") {
            let mv = LeftMove { i, j, target };
            if check_extension(d, prefix, mv).is_ok() {
                prefix.push(mv);
                search(d, j + 1, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Every left path of `d` exactly once, sorted lexicographically by the
/// j-sequence and then the i-sequence.
pub fn enumerate_paths(d: &WeightDiagram) -> PathSet {
    let mut paths = Vec::new();
    search(d, 1, &mut Vec::new(), &mut paths);
    paths.sort_by_cached_key(|p| {
        let (is, js): (Vec<usize>, Vec<usize>) = p.moves().iter().map(|m| (m.i, m.j)).unzip();
        (js, is)
    });
    let weights = paths.iter().map(|p| p.apply(d).weight()).collect();
    PathSet {
        base: d.clone(),
        paths,
        weights,
    }
}

/// Primitive weights of `K(w)` with the length of their path.
pub fn primitive_weights(w: &Weight) -> Result<Vec<(Weight, usize)>> {
    let set = enumerate_paths(&WeightDiagram::of(w)?);
    Ok(set
        .weights
        .into_iter()
        .zip(set.paths.iter().map(LeftPath::len))
        .collect())
}

/// Searches `θ ∈ {0,1}^♯(μ)` with `R_θ(μ) = λ`.
pub fn brundan_check(lam: &Weight, mu: &Weight) -> Result<Option<Vec<bool>>> {
    let dl = WeightDiagram::of(lam)?;
    let dm = WeightDiagram::of(mu)?;
    if dl.m() != dm.m() || dl.n() != dm.n() {
        return Ok(None);
    }
    let r = dm.atypicality();
    for mask in 0u64..(1u64 << r) {
        let theta: Vec<bool> = (0..r).map(|k| mask >> k & 1 == 1).collect();
        if let Ok(rp) = RightPath::new(&dm, theta) {
            if rp.apply(&dm) == dl {
                return Ok(Some(rp.theta().to_vec()));
            }
        }
    }
    Ok(None)
}

/// Every `μ` in the block of `λ` with `λ = R_θ(μ)`, with its `θ`, found
/// by trying all placements of `r` crosses on the free vertices of
/// `[x_1 − 2r − T, x_r]` (`T` = number of `<`/`>` symbols) and all `θ`.
/// A right move passes at most `r − 1` crosses, hence at most `2r − 1`
/// free vertices, so no solution lies outside the window.
pub fn brundan_factors(lam: &Weight) -> Result<Vec<(Weight, Vec<bool>)>> {
    let d = WeightDiagram::of(lam)?;
    let r = d.atypicality();
    if r == 0 {
        return Ok(vec![(lam.clone(), Vec::new())]);
    }
    let tails = d.iter().filter(|(_, s)| s.ell_weight() == 0).count() as i64;
    let lo = d.x(1) - 2 * r as i64 - tails;
    let hi = d.x(r);
    let free: Vec<i64> = (lo..=hi)
        .filter(|&v| d.is_empty_at(v) || d.cross_positions().contains(&v))
        .collect();
    let goal = d.cross_positions().to_vec();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(r);
    choose(&free, r, 0, &mut pick, &mut |crosses| {
        let mu_d = d.relocate_crosses(d.cross_positions(), crosses);
        let targets: Vec<i64> = (1..=r)
            .map(|i| right_move(&mu_d, i).expect("i <= r").1)
            .collect();
        for mask in 0u64..(1u64 << r) {
            let mut moved: Vec<i64> = (0..r)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        targets[k]
                    } else {
                        crosses[k]
                    }
                })
                .collect();
            moved.sort_unstable();
            moved.dedup();
            if moved == goal {
                let theta = (0..r).map(|k| mask >> k & 1 == 1).collect();
                out.push((mu_d.weight(), theta));
                break;
            }
        }
    });
    out.sort();
    Ok(out)
}

fn choose(pool: &[i64], k: usize, from: usize, pick: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for idx in from..pool.len() {
        if pool.len() - idx < k - pick.len() {
            break;
        }
        pick.push(pool[idx]);
        choose(pool, k, idx + 1, pick, f);
        pick.pop();
    }
}
