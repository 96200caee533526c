//! Polynomials in `q` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

/// Dense coefficient vector, `coeffs[k]` multiplying `q^k`. Trailing zeros
/// are never stored, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn coeff_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `f(−q)`.
    pub fn at_neg_q(&self) -> Self {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
                .collect(),
        }
    }

    /// Single-term polynomial as `(coefficient, power)`.
    pub fn as_monomial(&self) -> Option<(i64, usize)> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0);
        let (k, &c) = nz.next()?;
        nz.next().is_none().then_some((c, k))
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

/// Ascending powers, e.g. `1-q+q^2`, `-2q^3`, `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one().to_string(), "1");
        assert_eq!(QPoly::monomial(1, 4).to_string(), "q^4");
        assert_eq!(QPoly::from_coeffs(vec![1, -1, 1]).to_string(), "1-q+q^2");
        assert_eq!(QPoly::from_coeffs(vec![0, 0, 0, -2]).to_string(), "-2q^3");
        assert_eq!(QPoly::from_coeffs(vec![0, -1]).to_string(), "-q");
    }

    #[test]
    fn arithmetic() {
        let q = QPoly::monomial(1, 1);
        let one = QPoly::one();
        let a = &one + &q;
        let b = &one - &q;
        assert_eq!(&a * &b, QPoly::from_coeffs(vec![1, 0, -1]));
        assert!((&a - &a).is_zero());
        assert_eq!(QPoly::monomial(1, 3).at_neg_q(), QPoly::monomial(-1, 3));
        assert_eq!(QPoly::monomial(5, 2).as_monomial(), Some((5, 2)));
        assert_eq!(a.as_monomial(), None);
        assert_eq!(QPoly::from_coeffs(vec![0, 0, 0]), QPoly::zero());
    }

    fn poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
