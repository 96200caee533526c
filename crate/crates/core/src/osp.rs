//! Kac modules of `osp(2|2n)`.
//!
//! Coordinates are taken on the basis `ε, δ_1, …, δ_n` with form
//! `(ε,ε) = 1`, `(δ_i,δ_j) = −δ_ij`. Even positive roots are those of
//! `sp(2n)`: `δ_i ± δ_j` (`i < j`) and `2δ_i`. Odd positive roots are
//! `ε ± δ_j`. The Weyl group acts on the `δ` block by signed permutations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kl::PolyMatrix;
use crate::poly::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OspWeight {
    eps: i64,
    deltas: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OddRoot {
    /// `true` for `ε + δ_j`.
    pub plus: bool,
    pub j: usize,
}

impl OddRoot {
    pub fn vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n + 1];
        v[0] = 1;
        v[self.j] = if self.plus { 1 } else { -1 };
        v
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.plus { '+' } else { '-' };
        write!(f, "ε{sign}δ{}", self.j)
    }
}

pub fn form(x: &[i64], y: &[i64]) -> i64 {
    x[0] * y[0] - x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<i64>()
}

pub fn even_positive_roots(n: usize) -> Vec<Vec<i64>> {
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; n + 1];
        v[i] = c;
        v
    };
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for s in [-1, 1] {
                let mut v = unit(i, 1);
                v[j] = s;
                roots.push(v);
            }
        }
        roots.push(unit(i, 2));
    }
    roots
}

pub fn simple_even_roots(n: usize) -> Vec<Vec<i64>> {
    let mut roots: Vec<Vec<i64>> = (1..n)
        .map(|i| {
            let mut v = vec![0; n + 1];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    let mut last = vec![0; n + 1];
    last[n] = 2;
    roots.push(last);
    roots
}

pub fn odd_positive_roots(n: usize) -> Vec<OddRoot> {
    (1..=n)
        .flat_map(|j| [OddRoot { plus: false, j }, OddRoot { plus: true, j }])
        .collect()
}

/// `ρ = ρ₀ − ρ₁`.
pub fn rho(n: usize) -> Vec<i64> {
    let mut twice = vec![0i64; n + 1];
    for a in even_positive_roots(n) {
        for (t, x) in twice.iter_mut().zip(&a) {
            *t += x;
        }
    }
    for g in odd_positive_roots(n) {
        for (t, x) in twice.iter_mut().zip(g.vector(n)) {
            *t -= x;
        }
    }
    twice.iter().map(|t| t / 2).collect()
}

impl OspWeight {
    pub fn new(eps: i64, deltas: Vec<i64>) -> Result<Self> {
        if deltas.is_empty() {
            return Err(Error::Invalid("osp weight needs n >= 1".into()));
        }
        Ok(OspWeight { eps, deltas })
    }

    pub fn n(&self) -> usize {
        self.deltas.len()
    }

    pub fn eps(&self) -> i64 {
        self.eps
    }

    pub fn deltas(&self) -> &[i64] {
        &self.deltas
    }

    pub fn coords(&self) -> Vec<i64> {
        std::iter::once(self.eps)
            .chain(self.deltas.iter().copied())
            .collect()
    }

    fn from_coords(v: &[i64]) -> Self {
        OspWeight {
            eps: v[0],
            deltas: v[1..].to_vec(),
        }
    }

    /// `λ + ρ`.
    pub fn shifted(&self) -> Vec<i64> {
        self.coords()
            .iter()
            .zip(rho(self.n()))
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Integral and dominant for `sp(2n)`: `2(λ,α)/(α,α) ∈ ℤ≥0` on simple
    /// even roots.
    pub fn is_dominant(&self) -> bool {
        let v = self.coords();
        simple_even_roots(self.n()).iter().all(|a| {
            let (num, den) = (2 * form(&v, a), form(a, a));
            num % den == 0 && num / den >= 0
        })
    }

    fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    /// Every odd positive root orthogonal to `λ + ρ`.
    pub fn atypical_roots(&self) -> Vec<OddRoot> {
        let s = self.shifted();
        odd_positive_roots(self.n())
            .into_iter()
            .filter(|g| form(&s, &g.vector(self.n())) == 0)
            .collect()
    }

    pub fn atypicality(&self) -> usize {
        self.atypical_roots().len()
    }

    pub fn atypical_root(&self) -> Option<OddRoot> {
        self.atypical_roots().first().copied()
    }

    /// Highest weight of the bottom factor of `K(λ)`: the smallest `k ≥ 1`
    /// with `λ − kγ` regular, then moved into the dominant chamber.
    pub fn lambda_one(&self) -> Result<OspWeight> {
        self.require_dominant()?;
        let g = self
            .atypical_root()
            .ok_or_else(|| Error::Typical(self.to_string()))?;
        let n = self.n();
        let gv = g.vector(n);
        let s = self.shifted();
        for k in 1.. {
            let mu: Vec<i64> = s.iter().zip(&gv).map(|(a, b)| a - k * b).collect();
            if let Some(dom) = dominant_conjugate(&mu) {
                let out: Vec<i64> = dom.iter().zip(rho(n)).map(|(a, b)| a - b).collect();
                return Ok(OspWeight::from_coords(&out));
            }
        }
        unreachable!()
    }
}

/// The regular-dominant signed-permutation conjugate of a shifted vector,
/// or `None` if the vector is singular.
pub fn dominant_conjugate(v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len() - 1;
    let singular = even_positive_roots(n).iter().any(|a| form(v, a) == 0);
    if singular {
        return None;
    }
    let mut abs: Vec<i64> = v[1..].iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    Some(std::iter::once(v[0]).chain(abs).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct OspReport {
    pub weight: OspWeight,
    pub atypicality: usize,
    pub atypical_root: Option<String>,
    pub factors: Vec<OspWeight>,
    pub jantzen_length: usize,
    /// `a_{λμ}` for each factor `μ`.
    pub a: Vec<QPoly>,
    /// `λ = λ^(0), λ^(1), …` up to the requested depth.
    pub chain: Vec<OspWeight>,
    /// `p_{λ,λ^(i)}` along the chain.
    pub p: Vec<QPoly>,
    pub inverse_exact: bool,
    pub truncated: bool,
}

pub fn osp_structure(w: &OspWeight, depth: usize) -> Result<OspReport> {
    w.require_dominant()?;
    let roots = w.atypical_roots();
    if roots.len() > 1 {
        return Err(Error::Invalid(format!(
            "{w} has {} atypical roots",
            roots.len()
        )));
    }
    let Some(g) = roots.first() else {
        return Ok(OspReport {
            weight: w.clone(),
            atypicality: 0,
            atypical_root: None,
            factors: vec![w.clone()],
            jantzen_length: 0,
            a: vec![QPoly::one()],
            chain: vec![w.clone()],
            p: vec![QPoly::one()],
            inverse_exact: true,
            truncated: false,
        });
    };

    let mut chain = vec![w.clone()];
    for _ in 0..depth {
        let next = chain.last().unwrap().lambda_one()?;
        chain.push(next);
    }
    let q = QPoly::monomial(1, 1);
    let a = PolyMatrix::from_rows(
        (0..chain.len())
            .map(|i| {
                let mut row = BTreeMap::from([(i, QPoly::one())]);
                if i + 1 < chain.len() {
                    row.insert(i + 1, q.clone());
                }
                row
            })
            .collect(),
    );
    let p = a.inverse_unitriangular()?;
    let inverse_exact = p.mul(&a).is_identity() && a.mul(&p).is_identity();

    Ok(OspReport {
        weight: w.clone(),
        atypicality: 1,
        atypical_root: Some(g.to_string()),
        factors: chain[..2.min(chain.len())].to_vec(),
        jantzen_length: 1,
        a: vec![QPoly::one(), q],
        p: (0..chain.len()).map(|i| p.get(0, i)).collect(),
        chain,
        inverse_exact,
        truncated: true,
    })
}

impl fmt::Display for OspWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.deltas.iter().map(|x| x.to_string()).collect();
        write!(f, "{};{}", self.eps, d.join(","))
    }
}

impl FromStr for OspWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (e, d) = s.split_once(';').ok_or_else(|| Error::Parse {
            what: "osp weight (expected eps;d1,...,dn)",
            token: s.clone(),
        })?;
        let int = |t: &str| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                what: "integer",
                token: t.to_string(),
            })
        };
        let deltas = d.split(',').map(int).collect::<Result<Vec<_>>>()?;
        OspWeight::new(int(e)?, deltas)
    }
}

impl Serialize for OspWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OspWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> OspWeight {
        s.parse().unwrap()
    }

    fn signed_perms(n: usize) -> Vec<Vec<(usize, i64)>> {
        fn go(n: usize, cur: &mut Vec<(usize, i64)>, out: &mut Vec<Vec<(usize, i64)>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in 0..n {
                if cur.iter().any(|&(j, _)| j == i) {
                    continue;
                }
                for s in [1, -1] {
                    cur.push((i, s));
                    go(n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }

    /// Tries every `k ≤ 10` and every signed permutation.
    fn brute_lambda_one(lam: &OspWeight) -> Option<OspWeight> {
        let n = lam.n();
        let g = lam.atypical_root()?.vector(n);
        let s = lam.shifted();
        let r = rho(n);
        for k in 1..=10 {
            let mu: Vec<i64> = s.iter().zip(&g).map(|(a, b)| a - k * b).collect();
            let hits: Vec<OspWeight> = signed_perms(n)
                .iter()
                .filter_map(|perm| {
                    let mut v = vec![mu[0]];
                    v.extend(perm.iter().map(|&(i, sg)| sg * mu[i + 1]));
                    let cand: Vec<i64> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
                    let cand = OspWeight::from_coords(&cand);
                    let strict = (1..n).all(|i| v[i] > v[i + 1]) && v[n] > 0;
                    (strict && cand.is_dominant()).then_some(cand)
                })
                .collect();
            match hits.len() {
                0 => continue,
                1 => return Some(hits[0].clone()),
                _ => panic!("Weyl element not unique for {lam} at k = {k}"),
            }
        }
        None
    }

    #[test]
    fn root_data() {
        assert_eq!(rho(1), vec![-1, 1]);
        assert_eq!(rho(2), vec![-2, 2, 1]);
        assert_eq!(even_positive_roots(2).len(), 4);
        for g in odd_positive_roots(3) {
            let v = g.vector(3);
            assert_eq!(form(&v, &v), 0);
        }
    }

    #[test]
    fn dominance() {
        assert!(w("0;0").is_dominant());
        assert!(w("-5;3,3,0").is_dominant());
        assert!(!w("0;-1").is_dominant());
        assert!(!w("0;1,2").is_dominant());
    }

    #[test]
    fn atypical_roots_n1() {
        assert_eq!(w("3;5").atypical_root(), None);
        assert_eq!(
            w("-3;3").atypical_root(),
            Some(OddRoot { plus: false, j: 1 })
        );
        assert_eq!(w("5;3").atypical_root(), Some(OddRoot { plus: true, j: 1 }));
        assert_eq!(w("5;3").atypical_root().unwrap().to_string(), "ε+δ1");
    }

    #[test]
    fn trivial_weight() {
        let lam = w("0;0");
        let one = lam.lambda_one().unwrap();
        assert_eq!(one, w("-1;1"));
        assert_eq!(brute_lambda_one(&lam), Some(one.clone()));
        assert_eq!(one.atypicality(), 1);
        let two = one.lambda_one().unwrap();
        assert!(two.eps() < one.eps());
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=3 {
            for e in -8..=8 {
                for d in [
                    vec![0],
                    vec![2],
                    vec![1, 0],
                    vec![3, 1],
                    vec![4, 2, 2],
                    vec![2, 1, 0],
                ] {
                    if d.len() != n {
                        continue;
                    }
                    let lam = OspWeight::new(e, d).unwrap();
                    assert!(lam.atypicality() <= 1);
                    if lam.atypicality() == 1 {
                        let got = lam.lambda_one().unwrap();
                        assert_eq!(Some(got.clone()), brute_lambda_one(&lam), "{lam}");
                        assert!(got.is_dominant());
                        assert_eq!(got.atypicality(), 1);
                    } else {
                        assert!(matches!(lam.lambda_one(), Err(Error::Typical(_))));
                    }
                }
            }
        }
    }

    #[test]
    fn structure() {
        let typ = osp_structure(&w("3;5"), 4).unwrap();
        assert_eq!(typ.jantzen_length, 0);
        assert_eq!(typ.factors.len(), 1);

        let at = osp_structure(&w("0;0"), 6).unwrap();
        assert_eq!(at.factors.len(), 2);
        assert_eq!(at.jantzen_length, 1);
        assert_eq!(at.a, vec![QPoly::one(), QPoly::monomial(1, 1)]);
        for (i, p) in at.p.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(p, &QPoly::monomial(sign, i));
        }
        assert!(at.inverse_exact);
        assert!(at.truncated);
    }

    #[test]
    fn text_round_trip() {
        let lam = w(" 2 ; 3, 1 ");
        assert_eq!(lam.to_string(), "2;3,1");
        assert_eq!(lam.n(), 2);
        assert!("2,3".parse::<OspWeight>().is_err());
        assert!(matches!(
            "2;x".parse::<OspWeight>(),
            Err(Error::Parse { token, .. }) if token == "x"
        ));
    }
}
