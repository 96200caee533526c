//! Jantzen polynomials and Kazhdan-Lusztig polynomials on a finite poset.
//!
//! `J_{λμ}(q) = q^k` when `μ` is the weight of a length-`k` left path of
//! `λ` and `0` otherwise. These are the inverse Kazhdan-Lusztig
//! polynomials `a_{λμ}`, so `P = A⁻¹` on any downward-closed set of
//! weights. Blocks with atypical weights are infinite, so the set is built
//! to a depth bound and every `P` entry carries a reliability flag.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::diagram::WeightDiagram;
use crate::enumerate::{enumerate_paths, primitive_weights};
use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::weight::Weight;

pub fn jantzen_poly(lam: &Weight, mu: &Weight) -> Result<QPoly> {
    mu.require_dominant()?;
    let set = enumerate_paths(&WeightDiagram::of(lam)?);
    Ok(match set.index_of_weight(mu) {
        Some(k) => QPoly::monomial(1, set.paths()[k].len()),
        None => QPoly::zero(),
    })
}

/// A finite set of weights saturated under taking path weights, in a
/// linear order refining `≼` (largest first).
#[derive(Debug, Clone)]
pub struct ClosurePoset {
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    depth: Vec<usize>,
    /// `(μ, ℓ(P))` for every path `P` of the element landing inside the set.
    rows: Vec<Vec<(usize, usize)>>,
    depth_bound: usize,
    truncated: bool,
}

pub fn default_depth(r: usize) -> usize {
    2 * r + 1
}

/// Breadth-first saturation of `{λ}` under path weights, expanding only
/// elements found at depth `< depth_bound`.
pub fn closure_set(lam: &Weight, depth_bound: usize) -> Result<ClosurePoset> {
    lam.require_dominant()?;
    let mut found: Vec<(Weight, usize)> = vec![(lam.clone(), 0)];
    let mut seen: HashMap<Weight, usize> = HashMap::from([(lam.clone(), 0)]);
    let mut raw_rows: Vec<Vec<(Weight, usize)>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(k) = queue.pop_front() {
        let (w, d) = found[k].clone();
        let pw = primitive_weights(&w)?;
        if d < depth_bound {
            for (mu, _) in &pw {
                if !seen.contains_key(mu) {
                    seen.insert(mu.clone(), found.len());
                    found.push((mu.clone(), d + 1));
                    queue.push_back(found.len() - 1);
                }
            }
        } else if pw.len() > 1 {
            truncated = true;
        }
        raw_rows.push(pw);
        debug_assert_eq!(raw_rows.len(), k + 1);
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    let level = |w: &Weight| w.leq(lam).expect("same shape").expect("below λ");
    order.sort_by(|&a, &b| {
        let (wa, wb) = (&found[a].0, &found[b].0);
        (level(wa), wa.left(), wa.right()).cmp(&(level(wb), wb.left(), wb.right()))
    });
    let weights: Vec<Weight> = order.iter().map(|&k| found[k].0.clone()).collect();
    let depth = order.iter().map(|&k| found[k].1).collect();
    let index: HashMap<Weight, usize> = weights
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let rows = order
        .iter()
        .map(|&k| {
            raw_rows[k]
                .iter()
                .filter_map(|(mu, len)| index.get(mu).map(|&t| (t, *len)))
                .collect()
        })
        .collect();
    Ok(ClosurePoset {
        weights,
        index,
        depth,
        rows,
        depth_bound,
        truncated,
    })
}

impl ClosurePoset {
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn depth_bound(&self) -> usize {
        self.depth_bound
    }

    /// Some element at the depth bound has path weights left out.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// All path weights of this element are in the set.
    pub fn is_expanded(&self, k: usize) -> bool {
        self.depth[k] < self.depth_bound
    }

    /// Every path weight of every element lies in the set.
    pub fn is_downward_closed(&self) -> bool {
        self.weights.iter().enumerate().all(|(k, w)| {
            let pw = primitive_weights(w).expect("dominant");
            self.rows[k].len() == pw.len() && pw.iter().all(|(mu, _)| self.index.contains_key(mu))
        })
    }
}

/// Sparse square matrix of polynomials, rows indexed like the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<BTreeMap<usize, QPoly>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<BTreeMap<usize, QPoly>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.retain(|_, p| !p.is_zero());
                r
            })
            .collect();
        PolyMatrix { rows }
    }

    /// Inverse of a unitriangular matrix by forward substitution, row by row.
    pub fn inverse_unitriangular(&self) -> Result<PolyMatrix> {
        if !self.is_unitriangular() {
            return Err(Error::Invalid("matrix is not unitriangular".into()));
        }
        let cols = off_diagonal_columns(self);
        Ok(PolyMatrix {
            rows: (0..self.dim()).map(|x| solve_row(&cols, x)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, x: usize, y: usize) -> QPoly {
        self.rows[x].get(&y).cloned().unwrap_or_default()
    }

    pub fn row(&self, x: usize) -> &BTreeMap<usize, QPoly> {
        &self.rows[x]
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, QPoly> = BTreeMap::new();
                for (&k, a) in row {
                    for (&y, b) in &rhs.rows[k] {
                        *acc.entry(y).or_default() += &(a * b);
                    }
                }
                acc.retain(|_, p| !p.is_zero());
                acc
            })
            .collect();
        PolyMatrix { rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(x, row)| row.len() == 1 && row.get(&x) == Some(&QPoly::one()))
    }

    /// Unitriangular: ones on the diagonal, nothing left of it.
    pub fn is_unitriangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(x, row)| row.get(&x) == Some(&QPoly::one()) && row.keys().all(|&y| y >= x))
    }
}

/// `A(q)` on the poset: entry `(ν, μ)` is `J_{νμ}(q)`.
pub fn inverse_kl_matrix(s: &ClosurePoset) -> PolyMatrix {
    PolyMatrix {
        rows: s
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(t, len)| (t, QPoly::monomial(1, len)))
                    .collect()
            })
            .collect(),
    }
}

/// Columns of a matrix without the diagonal, as `(row, entry)` lists.
fn off_diagonal_columns(a: &PolyMatrix) -> Vec<Vec<(usize, QPoly)>> {
    let mut cols = vec![Vec::new(); a.dim()];
    for (x, row) in a.rows.iter().enumerate() {
        for (&y, p) in row {
            if y != x {
                cols[y].push((x, p.clone()));
            }
        }
    }
    cols
}

fn solve_row(cols: &[Vec<(usize, QPoly)>], x: usize) -> BTreeMap<usize, QPoly> {
    let n = cols.len();
    let mut dense: Vec<QPoly> = vec![QPoly::zero(); n];
    dense[x] = QPoly::one();
    for y in x + 1..n {
        let mut acc = QPoly::zero();
        for (eta, a) in &cols[y] {
            if *eta >= x && !dense[*eta].is_zero() {
                acc -= &(&dense[*eta] * a);
            }
        }
        dense[y] = acc;
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// `P(q) = A(q)⁻¹`.
pub fn kl_matrix(s: &ClosurePoset) -> Result<PolyMatrix> {
    inverse_kl_matrix(s).inverse_unitriangular().map_err(|_| {
        Error::Invalid("Jantzen matrix is not unitriangular in the poset order".into())
    })
}

/// Row `x` of `P(q)` only.
pub fn kl_row(s: &ClosurePoset, x: usize) -> BTreeMap<usize, QPoly> {
    solve_row(&off_diagonal_columns(&inverse_kl_matrix(s)), x)
}

/// Both matrices on a poset, with per-entry reliability of `P`.
#[derive(Debug, Clone)]
pub struct KlMatrices {
    pub poset: ClosurePoset,
    pub a: PolyMatrix,
    pub p: PolyMatrix,
}

impl KlMatrices {
    pub fn new(poset: ClosurePoset) -> Result<Self> {
        let a = inverse_kl_matrix(&poset);
        let p = kl_matrix(&poset)?;
        Ok(KlMatrices { poset, a, p })
    }

    /// `P·A = A·P = I` exactly.
    pub fn verify_inverse(&self) -> bool {
        self.p.mul(&self.a).is_identity() && self.a.mul(&self.p).is_identity()
    }
}

/// Whether `p_{xy}` computed on the truncated set equals the true value:
/// every element reachable from `x` that lies above `y` has all its path
/// weights inside the set.
pub fn is_reliable(s: &ClosurePoset, x: usize, y: usize) -> bool {
    reliable_targets(s, x)[y]
}

/// Reliability of every entry of row `x`.
pub fn reliable_targets(s: &ClosurePoset, x: usize) -> Vec<bool> {
    let n = s.len();
    let mut reach = vec![false; n];
    reach[x] = true;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for &(t, _) in &s.rows[v] {
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let open: Vec<usize> = (0..n).filter(|&v| reach[v] && !s.is_expanded(v)).collect();
    (0..n)
        .map(|y| {
            open.iter().all(|&eta| {
                eta == y
                    || s.weights[y]
                        .leq(&s.weights[eta])
                        .expect("same shape")
                        .is_none()
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn jantzen_examples() {
        let lam = w("rho:7,5,4,2,1|1,2,4,7,8,10");
        assert_eq!(jantzen_poly(&lam, &lam).unwrap(), QPoly::one());
        let bottom = "@-1:xx..x.>x.<.<"
            .parse::<WeightDiagram>()
            .unwrap()
            .weight();
        assert_eq!(jantzen_poly(&lam, &bottom).unwrap(), QPoly::monomial(1, 4));
        assert_eq!(
            jantzen_poly(&lam, &lam.translate(-7)).unwrap(),
            QPoly::zero()
        );
    }

    #[test]
    fn typical_singleton() {
        let s = closure_set(&w("1|0"), 3).unwrap();
        assert_eq!(s.len(), 1);
        assert!(!s.is_truncated());
        let m = KlMatrices::new(s).unwrap();
        assert!(m.a.is_identity());
        assert!(m.p.is_identity());
    }

    #[test]
    fn gl11_chain() {
        let lam = w("0|0");
        let s = closure_set(&lam, 6).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.is_truncated());
        let m = KlMatrices::new(s).unwrap();
        assert!(m.verify_inverse());
        for i in 0..=6 {
            let mu = lam.translate(-(i as i64));
            let y = m.poset.index_of(&mu).unwrap();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(m.p.get(0, y), QPoly::monomial(sign, i));
            assert!(is_reliable(&m.poset, 0, y));
        }
        // Rows further down the chain lose reliability at the cut.
        let y = m.poset.len() - 1;
        assert!(!is_reliable(&m.poset, 1, y) || m.poset.is_expanded(y - 1));
    }

    #[test]
    fn example_depth_two() {
        let lam = w("rho:7,5,4,2,1|1,2,4,7,8,10");
        let s = closure_set(&lam, 2).unwrap();
        let row: Vec<usize> = s.rows[0].iter().map(|&(_, l)| l).collect();
        let mut hist = [0usize; 5];
        for l in row {
            hist[l] += 1;
        }
        assert_eq!(hist, [1, 4, 7, 6, 1]);
        for (mu, _) in primitive_weights(&lam).unwrap() {
            let k = s.index_of(&mu).unwrap();
            for (nu, _) in primitive_weights(&mu).unwrap() {
                assert!(s.index_of(&nu).is_some());
            }
            assert!(s.is_expanded(k));
        }
        let m = KlMatrices::new(s).unwrap();
        assert!(m.a.is_unitriangular());
        assert!(m.verify_inverse());
    }
}
