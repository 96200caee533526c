//! Integral weights of `gl(m|n)`.
//!
//! A weight is written `(λ_m, …, λ_1 | λ'_1, …, λ'_n)` and stands for
//! `Σ λ_a δ_a − Σ λ'_b ε_b`. The ρ-shift is `λ^ρ_a = λ_a + a − 1` and
//! `λ'^ρ_b = λ'_b + b − 1`. Both coordinate lists are stored in written
//! order, so `left()[0]` is `λ_m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    left: Vec<i64>,
    right: Vec<i64>,
}

/// ρ-shifted coordinates, same layout as [`Weight`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RhoWeight {
    left: Vec<i64>,
    right: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtypicalityData {
    pub r: usize,
    /// `(i_s, j_s)` with `λ^ρ_{i_s} = λ'^ρ_{j_s}`, by increasing shared value.
    pub pairs: Vec<(usize, usize)>,
    pub shared_values: Vec<i64>,
}

impl Weight {
    /// Builds a weight from coordinates in written order: `left` is
    /// `(λ_m, …, λ_1)` and `right` is `(λ'_1, …, λ'_n)`.
    pub fn new(left: Vec<i64>, right: Vec<i64>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Invalid(format!(
                "gl(m|n) needs m, n >= 1, got m = {}, n = {}",
                left.len(),
                right.len()
            )));
        }
        Ok(Weight { left, right })
    }

    pub fn m(&self) -> usize {
        self.left.len()
    }

    pub fn n(&self) -> usize {
        self.right.len()
    }

    /// Left coordinates in written order `(λ_m, …, λ_1)`.
    pub fn left(&self) -> &[i64] {
        &self.left
    }

    /// Right coordinates `(λ'_1, …, λ'_n)`.
    pub fn right(&self) -> &[i64] {
        &self.right
    }

    /// `λ_a` for `1 <= a <= m`.
    pub fn lambda(&self, a: usize) -> i64 {
        self.left[self.m() - a]
    }

    /// `λ'_b` for `1 <= b <= n`.
    pub fn lambda_prime(&self, b: usize) -> i64 {
        self.right[b - 1]
    }

    pub fn rho_shift(&self) -> RhoWeight {
        let m = self.m() as i64;
        RhoWeight {
            left: self
                .left
                .iter()
                .enumerate()
                .map(|(k, &x)| x + (m - k as i64) - 1)
                .collect(),
            right: self
                .right
                .iter()
                .enumerate()
                .map(|(k, &x)| x + k as i64)
                .collect(),
        }
    }

    pub fn from_rho(rw: &RhoWeight) -> Self {
        let m = rw.left.len() as i64;
        Weight {
            left: rw
                .left
                .iter()
                .enumerate()
                .map(|(k, &x)| x - (m - k as i64) + 1)
                .collect(),
            right: rw
                .right
                .iter()
                .enumerate()
                .map(|(k, &x)| x - k as i64)
                .collect(),
        }
    }

    /// Both ρ-shifted value sequences strictly increase (in `a` and `b`).
    pub fn is_dominant(&self) -> bool {
        let rw = self.rho_shift();
        rw.left.windows(2).all(|w| w[0] > w[1]) && rw.right.windows(2).all(|w| w[0] < w[1])
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    fn require_same_shape(&self, other: &Weight) -> Result<()> {
        if self.m() == other.m() && self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(
                self.m(),
                self.n(),
                other.m(),
                other.n(),
            ))
        }
    }

    pub fn atypicality(&self) -> Result<AtypicalityData> {
        self.require_dominant()?;
        let rw = self.rho_shift();
        let mut pairs = Vec::new();
        let mut shared_values = Vec::new();
        for a in 1..=self.m() {
            let v = rw.lambda(a);
            if let Some(b) = (1..=self.n()).find(|&b| rw.lambda_prime(b) == v) {
                pairs.push((a, b));
                shared_values.push(v);
            }
        }
        Ok(AtypicalityData {
            r: pairs.len(),
            pairs,
            shared_values,
        })
    }

    /// Valuation in `t` of `χ₀(λ) = Π_α ((λ+ρ, α) + t(δ, α))` over the odd
    /// positive roots `α = δ_a − ε_b`, with `(δ, α) ≠ 0` for every `α`:
    /// the number of roots whose supertrace pairing with `λ+ρ` vanishes.
    pub fn atypicality_via_chi0(&self) -> Result<usize> {
        self.require_dominant()?;
        let (m, n) = (self.m(), self.n());
        let rw = self.rho_shift();
        // Coordinates over the basis δ_1..δ_m, ε_1..ε_n.
        let mut shifted = vec![0i64; m + n];
        for a in 1..=m {
            shifted[a - 1] = rw.lambda(a);
        }
        for b in 1..=n {
            shifted[m + b - 1] = -rw.lambda_prime(b);
        }
        // (δ_a, δ_a) = −1, (ε_b, ε_b) = 1.
        let form = |x: &[i64], y: &[i64]| -> i64 {
            x.iter()
                .zip(y)
                .enumerate()
                .map(|(k, (u, v))| if k < m { -u * v } else { u * v })
                .sum()
        };
        let mut count = 0;
        for a in 0..m {
            for b in 0..n {
                let mut root = vec![0i64; m + n];
                root[a] = 1;
                root[m + b] = -1;
                if form(&shifted, &root) == 0 {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// `Some(|λ − μ|)` when `μ ≼ λ` (every left coordinate of `μ` at most
    /// that of `λ`), `None` otherwise. Called as `mu.leq(lam)`.
    pub fn leq(&self, lam: &Weight) -> Result<Option<i64>> {
        self.require_same_shape(lam)?;
        if self.left.iter().zip(&lam.left).all(|(mu, la)| mu <= la) {
            Ok(Some(
                lam.left
                    .iter()
                    .zip(&self.left)
                    .map(|(la, mu)| la - mu)
                    .sum(),
            ))
        } else {
            Ok(None)
        }
    }

    /// Twist by the one-dimensional weight `c(Σ δ_a − Σ ε_b)`, which pairs
    /// to zero with every root. Shifts the weight diagram by `c` vertices.
    pub fn translate(&self, c: i64) -> Weight {
        Weight {
            left: self.left.iter().map(|x| x + c).collect(),
            right: self.right.iter().map(|x| x + c).collect(),
        }
    }

    /// `λ^# = 2ρ₁ − λ̄`, the highest weight of the dual Kac module.
    pub fn dual_weight(&self) -> Result<Weight> {
        self.require_dominant()?;
        let (m, n) = (self.m() as i64, self.n() as i64);
        Ok(Weight {
            left: self.left.iter().rev().map(|x| n - x).collect(),
            right: self.right.iter().rev().map(|x| m - x).collect(),
        })
    }
}

impl RhoWeight {
    pub fn new(left: Vec<i64>, right: Vec<i64>) -> Result<Self> {
        Weight::new(left, right).map(|w| RhoWeight {
            left: w.left,
            right: w.right,
        })
    }

    pub fn left(&self) -> &[i64] {
        &self.left
    }

    pub fn right(&self) -> &[i64] {
        &self.right
    }

    pub fn lambda(&self, a: usize) -> i64 {
        self.left[self.left.len() - a]
    }

    pub fn lambda_prime(&self, b: usize) -> i64 {
        self.right[b - 1]
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, left: &[i64], right: &[i64]) -> fmt::Result {
    let join = |v: &[i64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    write!(f, "{}|{}", join(left), join(right))
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.left, &self.right)
    }
}

impl fmt::Display for RhoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rho:")?;
        write_coords(f, &self.left, &self.right)
    }
}

fn parse_coords(s: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut halves = compact.split('|');
    let (Some(l), Some(r), None) = (halves.next(), halves.next(), halves.next()) else {
        return Err(Error::Parse {
            what: "weight (expected exactly one `|`)",
            token: s.trim().to_string(),
        });
    };
    let ints = |part: &str| -> Result<Vec<i64>> {
        part.split(',')
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    what: "weight coordinate",
                    token: tok.to_string(),
                })
            })
            .collect()
    };
    Ok((ints(l)?, ints(r)?))
}

/// Accepts `l_m,…,l_1|r_1,…,r_n` or the ρ-shifted form `rho:…`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("rho:") {
            let (l, r) = parse_coords(rest)?;
            Ok(Weight::from_rho(&RhoWeight::new(l, r)?))
        } else {
            let (l, r) = parse_coords(t)?;
            Weight::new(l, r)
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
