//! Seeded random dominant weights for randomized checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Symbol, WeightDiagram};
use crate::osp::OspWeight;
use crate::weight::Weight;

/// A dominant `gl(m|n)` weight with atypicality at most `max_r`, built by
/// scattering symbols over a short window. `m, n ≤ max_r + 3`.
pub fn random_gl_weight<R: Rng>(rng: &mut R, max_r: usize) -> Weight {
    loop {
        let r = rng.gen_range(0..=max_r);
        let a = rng.gen_range(0..=3);
        let b = rng.gen_range(0..=3);
        if r + a == 0 || r + b == 0 {
            continue;
        }
        let total = r + a + b;
        let span = total + rng.gen_range(0..=total + 2);
        let start = rng.gen_range(-4..=4i64);
        let mut slots: Vec<i64> = (start..start + span as i64).collect();
        slots.shuffle(rng);
        let kinds = std::iter::repeat_n(Symbol::Cross, r)
            .chain(std::iter::repeat_n(Symbol::Greater, a))
            .chain(std::iter::repeat_n(Symbol::Less, b));
        let d = WeightDiagram::from_symbols(slots.into_iter().zip(kinds)).expect("distinct slots");
        return d.weight();
    }
}

pub fn gl_corpus(seed: u64, count: usize, max_r: usize) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_gl_weight(&mut rng, max_r))
        .collect()
}

/// A dominant `osp(2|2n)` weight; about half of them are atypical.
pub fn random_osp_weight<R: Rng>(rng: &mut R, n: usize) -> OspWeight {
    let mut deltas: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
    deltas.sort_unstable_by(|a, b| b.cmp(a));
    let eps = if rng.gen_bool(0.5) {
        let j = rng.gen_range(1..=n);
        let d = deltas[j - 1];
        let (n, j) = (n as i64, j as i64);
        if rng.gen_bool(0.5) {
            d + 2 * n - j + 1
        } else {
            j - 1 - d
        }
    } else {
        rng.gen_range(-10..=10)
    };
    OspWeight::new(eps, deltas).expect("n >= 1")
}

pub fn osp_corpus(seed: u64, count: usize, n: usize) -> Vec<OspWeight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_osp_weight(&mut rng, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_and_bounded() {
        for w in gl_corpus(7, 300, 4) {
            assert!(w.is_dominant());
            assert!(w.atypicality().unwrap().r <= 4);
        }
        let all = gl_corpus(7, 300, 4);
        assert!((0..=4).all(|r| all.iter().any(|w| w.atypicality().unwrap().r == r)));
    }

    #[test]
    fn seeded() {
        assert_eq!(gl_corpus(3, 20, 3), gl_corpus(3, 20, 3));
        assert_ne!(gl_corpus(3, 20, 3), gl_corpus(4, 20, 3));
    }

    #[test]
    fn osp_samples() {
        let ws = osp_corpus(11, 100, 2);
        assert!(ws.iter().all(|w| w.is_dominant() && w.n() == 2));
        let atypical = ws.iter().filter(|w| w.atypicality() == 1).count();
        assert!((30..100).contains(&atypical));
    }
}
