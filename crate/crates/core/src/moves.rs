//! Left and right moves on a weight diagram, and left/right paths.
//!
//! Every move of a path is evaluated against the base diagram, never
//! against the result of earlier moves in the same path.

use std::fmt;

use thiserror::Error;

use crate::diagram::{Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// `L_{i,j}`: the `j`-th cross moved left to the empty vertex `target`,
/// passing `j − i` crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftMove {
    pub i: usize,
    pub j: usize,
    pub target: i64,
}

impl fmt::Display for LeftMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "L{}{}", self.i, self.j)
        } else {
            write!(f, "L{}.{}", self.i, self.j)
        }
    }
}

/// Why a sequence of `(i, j)` pairs is not a left path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathViolation {
    #[error("L({i},{j}) out of range for r = {r}")]
    OutOfRange { i: usize, j: usize, r: usize },

    #[error("L({i},{j}) is not a left move on this diagram")]
    NoSuchMove { i: usize, j: usize },

    #[error("condition (1): j must strictly increase, got {prev} then {next}")]
    Order { prev: usize, next: usize },

    #[error(
        "condition (2): L({ia},{ja}) followed by L({ib},{jb}) with {ib} <= {ja} but {ib} > {ia}"
    )]
    Nesting {
        ia: usize,
        ja: usize,
        ib: usize,
        jb: usize,
    },

    #[error(
        "condition (3): l(x_{p}, x_{j}) >= 0 for L({i},{j}) but cross {p} is not moved earlier"
    )]
    Unmoved { p: usize, i: usize, j: usize },

    #[error("moves L({ia},{ja}) and L({ib},{jb}) both target vertex {target}")]
    Collision {
        ia: usize,
        ja: usize,
        ib: usize,
        jb: usize,
        target: i64,
    },
}

/// A validated left path on some base diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LeftPath {
    moves: Vec<LeftMove>,
}

/// `R_θ`: the right moves selected by `θ ∈ {0,1}^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightPath {
    theta: Vec<bool>,
    /// `(i, j, t)` for each selected cross `i`.
    moves: Vec<(usize, usize, i64)>,
}

/// The right move `R_i = R_{i,j}`: target `t` is the first empty vertex
/// right of `x_i` with `ℓ(x_i, t) = 0`, every empty vertex strictly between
/// having `ℓ(x_i, s) > 0`.
pub fn right_move(d: &WeightDiagram, i: usize) -> Result<(usize, i64)> {
    let r = d.atypicality();
    if i == 0 || i > r {
        return Err(Error::IndexOutOfRange { index: i, max: r });
    }
    let x = d.x(i);
    let mut ell = 0i64;
    let mut t = x + 1;
    loop {
        let sym = d.symbol(t);
        if sym == Symbol::Empty {
            if ell == 0 {
                return Ok((i + d.crosses_between(x, t), t));
            }
            debug_assert!(ell > 0);
        }
        ell += sym.ell_weight();
        t += 1;
    }
}

/// All left moves of the `j`-th cross: empty `s < x_j` with `ℓ(s, x_j) = 0`,
/// as `(i, s)` with `i = j − #crosses strictly between`. Ordered by
/// decreasing target.
pub fn left_move_candidates(d: &WeightDiagram, j: usize) -> Result<Vec<(usize, i64)>> {
    let r = d.atypicality();
    if j == 0 || j > r {
        return Err(Error::IndexOutOfRange { index: j, max: r });
    }
    let x = d.x(j);
    let floor = d.min_vertex();
    let mut out = Vec::new();
    let mut ell = 0i64;
    let mut passed = 0usize;
    let mut s = x - 1;
    // Left of the support every vertex is empty, so ℓ only decreases there.
    while s >= floor || ell >= 0 {
        let sym = d.symbol(s);
        if sym == Symbol::Empty && ell == 0 {
            out.push((j - passed, s));
        }
        if sym == Symbol::Cross {
            passed += 1;
        }
        ell += sym.ell_weight();
        s -= 1;
    }
    Ok(out)
}

/// Target of `L_{i,j}`, if that move exists.
pub fn left_move(d: &WeightDiagram, i: usize, j: usize) -> Result<Option<i64>> {
    Ok(left_move_candidates(d, j)?
        .into_iter()
        .find(|&(ci, _)| ci == i)
        .map(|(_, s)| s))
}

/// Checks that `mv` may follow `prefix` in a left path: increasing `j`,
/// the nesting rule, the unmoved-cross rule and distinct targets.
///
/// The unmoved-cross rule measures `ℓ(x_p, x_j)` on the diagram with the
/// earlier moves of the path already applied. Measured on the base
/// diagram it rejects genuine factors, e.g. `L12 L13` on `@-1:x.xx`.
pub(crate) fn check_extension(
    d: &WeightDiagram,
    prefix: &[LeftMove],
    mv: LeftMove,
) -> std::result::Result<(), PathViolation> {
    if let Some(last) = prefix.last() {
        if mv.j <= last.j {
            return Err(PathViolation::Order {
                prev: last.j,
                next: mv.j,
            });
        }
    }
    for a in prefix {
        if mv.i <= a.j && mv.i > a.i {
            return Err(PathViolation::Nesting {
                ia: a.i,
                ja: a.j,
                ib: mv.i,
                jb: mv.j,
            });
        }
    }
    let xj = d.x(mv.j);
    let removed: Vec<i64> = prefix.iter().map(|a| d.x(a.j)).collect();
    let added: Vec<i64> = prefix.iter().map(|a| a.target).collect();
    let partial = d.relocate_crosses(&removed, &added);
    for p in mv.i..mv.j {
        if partial.ell(d.x(p), xj) >= 0 && !prefix.iter().any(|a| a.j == p) {
            return Err(PathViolation::Unmoved {
                p,
                i: mv.i,
                j: mv.j,
            });
        }
    }
    if let Some(a) = prefix.iter().find(|a| a.target == mv.target) {
        return Err(PathViolation::Collision {
            ia: a.i,
            ja: a.j,
            ib: mv.i,
            jb: mv.j,
            target: mv.target,
        });
    }
    Ok(())
}

/// Validates `(i, j)` pairs as a left path on `d`, naming the first
/// violated condition otherwise.
pub fn validate_left_path(
    d: &WeightDiagram,
    pairs: &[(usize, usize)],
) -> std::result::Result<LeftPath, PathViolation> {
    let r = d.atypicality();
    let mut moves = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        if i == 0 || i > j || j > r {
            return Err(PathViolation::OutOfRange { i, j, r });
        }
        let target = left_move(d, i, j)
            .expect("j checked")
            .ok_or(PathViolation::NoSuchMove { i, j })?;
        let mv = LeftMove { i, j, target };
        check_extension(d, &moves, mv)?;
        moves.push(mv);
    }
    Ok(LeftPath { moves })
}

impl LeftPath {
    pub fn empty() -> Self {
        LeftPath::default()
    }

    /// Wraps moves that are already known to form a valid path.
    pub(crate) fn from_valid_moves(moves: Vec<LeftMove>) -> Self {
        LeftPath { moves }
    }

    pub fn moves(&self) -> &[LeftMove] {
        &self.moves
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.moves.iter().map(|m| (m.i, m.j)).collect()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Parses `"L11 L12, L33"` (case-insensitive; `∅`, `-` or an empty
    /// string for the empty path) and validates it on `d`.
    pub fn parse(d: &WeightDiagram, text: &str) -> Result<Self> {
        let pairs = parse_pairs(text)?;
        Ok(validate_left_path(d, &pairs)?)
    }

    /// The diagram obtained by deleting the moved crosses and placing
    /// crosses at the targets.
    pub fn apply(&self, d: &WeightDiagram) -> WeightDiagram {
        let removed: Vec<i64> = self.moves.iter().map(|m| d.x(m.j)).collect();
        let added: Vec<i64> = self.moves.iter().map(|m| m.target).collect();
        d.relocate_crosses(&removed, &added)
    }

    /// `(length, range [i₀, j_k], depth j_k − i₀)`.
    pub fn stats(&self) -> (usize, Option<(usize, usize)>, usize) {
        match (self.moves.iter().map(|m| m.i).min(), self.moves.last()) {
            (Some(i0), Some(last)) => (self.len(), Some((i0, last.j)), last.j - i0),
            _ => (0, None, 0),
        }
    }

    /// Indecomposable when `i_k <= i_1`.
    pub fn is_indecomposable(&self) -> bool {
        match (self.moves.first(), self.moves.last()) {
            (Some(first), Some(last)) => last.i <= first.i,
            _ => false,
        }
    }

    /// Unique decomposition into a disjoint sum of indecomposable blocks.
    pub fn blocks(&self) -> Vec<LeftPath> {
        let mut out = Vec::new();
        let mut start = 0;
        for cut in 1..=self.moves.len() {
            let boundary = cut == self.moves.len()
                || self.moves[cut..]
                    .iter()
                    .all(|m| m.i > self.moves[cut - 1].j);
            if boundary {
                out.push(LeftPath {
                    moves: self.moves[start..cut].to_vec(),
                });
                start = cut;
            }
        }
        out
    }

    /// Some move `L_{i_a,j_a}` spans an unmoved cross `b`, `i_a <= b < j_a`.
    pub fn has_bridges(&self) -> bool {
        self.moves
            .iter()
            .any(|a| (a.i..a.j).any(|b| !self.moves.iter().any(|c| c.j == b)))
    }

    /// True when the moves of `self` are a subsequence of those of `other`.
    /// Both paths live on the same diagram, so `self` is itself a path.
    pub fn is_subpath_of(&self, other: &LeftPath) -> bool {
        let mut it = other.moves.iter();
        self.moves.iter().all(|m| it.any(|o| o == m))
    }
}

/// Subsequence test for raw move lists, validating the candidate.
pub fn is_subpath(d: &WeightDiagram, p: &[(usize, usize)], q: &LeftPath) -> bool {
    match validate_left_path(d, p) {
        Ok(path) => path.is_subpath_of(q),
        Err(_) => false,
    }
}

pub fn apply_left_path(d: &WeightDiagram, p: &LeftPath) -> Weight {
    p.apply(d).weight()
}

fn bridgeless_search(
    d: &WeightDiagram,
    k: usize,
    prefix: &mut Vec<LeftMove>,
    found: &mut Vec<LeftPath>,
) {
    let j = prefix.len() + 1;
    if j > k {
        let path = LeftPath {
            moves: prefix.clone(),
        };
        if !path.has_bridges() {
            found.push(path);
        }
        return;
    }
    for (i, target) in left_move_candidates(d, j).expect("j <= r") {
        let mv = LeftMove { i, j, target };
        if check_extension(d, prefix, mv).is_ok() {
            prefix.push(mv);
            bridgeless_search(d, k, prefix, found);
            prefix.pop();
        }
    }
}

/// `L_{[1,k]}`: the unique bridgeless path moving exactly the first `k`
/// crosses.
pub fn bridgeless_path(d: &WeightDiagram, k: usize) -> Result<LeftPath> {
    let r = d.atypicality();
    if k > r {
        return Err(Error::IndexOutOfRange { index: k, max: r });
    }
    let mut found = Vec::new();
    bridgeless_search(d, k, &mut Vec::new(), &mut found);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        c => Err(Error::Invalid(format!(
            "expected a unique bridgeless path moving crosses 1..={k}, found {c}"
        ))),
    }
}

/// `L_B`, the unique path of length `r`.
pub fn bottom_path(d: &WeightDiagram) -> LeftPath {
    bridgeless_path(d, d.atypicality()).expect("bottom path exists")
}

impl RightPath {
    pub fn new(d: &WeightDiagram, theta: Vec<bool>) -> Result<Self> {
        let r = d.atypicality();
        if theta.len() != r {
            return Err(Error::Invalid(format!(
                "theta has {} entries, diagram has {r} crosses",
                theta.len()
            )));
        }
        let mut moves: Vec<(usize, usize, i64)> = Vec::new();
        for (k, _) in theta.iter().enumerate().filter(|(_, &on)| on) {
            let (j, t) = right_move(d, k + 1)?;
            if moves.iter().any(|&(_, _, u)| u == t) {
                return Err(Error::RightCollision(t));
            }
            moves.push((k + 1, j, t));
        }
        Ok(RightPath { theta, moves })
    }

    /// Parses a bit string such as `"1101"`.
    pub fn parse(d: &WeightDiagram, bits: &str) -> Result<Self> {
        let theta = bits
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    what: "right path bit",
                    token: c.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, theta)
    }

    pub fn theta(&self) -> &[bool] {
        &self.theta
    }

    pub fn moves(&self) -> &[(usize, usize, i64)] {
        &self.moves
    }

    pub fn apply(&self, d: &WeightDiagram) -> WeightDiagram {
        let removed: Vec<i64> = self.moves.iter().map(|&(i, _, _)| d.x(i)).collect();
        let added: Vec<i64> = self.moves.iter().map(|&(_, _, t)| t).collect();
        d.relocate_crosses(&removed, &added)
    }

    pub fn bits(&self) -> String {
        self.theta
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

pub fn apply_right_path(d: &WeightDiagram, theta: &RightPath) -> Weight {
    theta.apply(d).weight()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let t = text.trim();
    if t.is_empty() || t == "∅" || t == "-" {
        return Ok(Vec::new());
    }
    t.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            let bad = || Error::Parse {
                what: "left move",
                token: tok.to_string(),
            };
            let body = tok
                .strip_prefix('L')
                .or_else(|| tok.strip_prefix('l'))
                .ok_or_else(bad)?;
            let (i, j) = match body.split_once('.') {
                Some((i, j)) => (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?),
                None => {
                    let digits: Vec<u32> = body
                        .chars()
                        .map(|c| c.to_digit(10))
                        .collect::<Option<_>>()
                        .ok_or_else(bad)?;
                    match digits[..] {
                        [i, j] => (i as usize, j as usize),
                        _ => return Err(bad()),
                    }
                }
            };
            Ok((i, j))
        })
        .collect()
}

impl fmt::Display for LeftPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moves.is_empty() {
            return write!(f, "∅");
        }
        for (k, m) in self.moves.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> WeightDiagram {
        "@1:xx.x>.x<.<".parse().unwrap()
    }

    fn path(d: &WeightDiagram, s: &str) -> LeftPath {
        LeftPath::parse(d, s).unwrap()
    }

    #[test]
    fn right_moves() {
        let d = example();
        assert_eq!(right_move(&d, 1).unwrap(), (4, 11));
        assert_eq!(right_move(&d, 4).unwrap(), (4, 9));
        assert_eq!(right_move(&d, 2).unwrap(), (2, 3));
        let single: WeightDiagram = "@0:x".parse().unwrap();
        assert_eq!(right_move(&single, 1).unwrap(), (1, 1));
        assert!(right_move(&d, 5).is_err());
    }

    #[test]
    fn left_candidates() {
        let d = example();
        assert_eq!(
            left_move_candidates(&d, 4).unwrap(),
            vec![(4, 6), (3, 3), (1, -1)]
        );
        assert_eq!(left_move_candidates(&d, 1).unwrap(), vec![(1, 0)]);
        let single: WeightDiagram = "@0:x".parse().unwrap();
        assert_eq!(left_move_candidates(&single, 1).unwrap(), vec![(1, -1)]);
    }

    #[test]
    fn validation() {
        let d = example();
        assert!(validate_left_path(&d, &[(1, 1), (1, 4)]).is_ok());
        assert_eq!(
            validate_left_path(&d, &[(1, 2)]),
            Err(PathViolation::Unmoved { p: 1, i: 1, j: 2 })
        );
        assert!(matches!(
            validate_left_path(&d, &[(3, 3), (3, 4)]),
            Err(PathViolation::Collision { target: 3, .. })
        ));
        assert!(matches!(
            validate_left_path(&d, &[(1, 1), (1, 1)]),
            Err(PathViolation::Order { .. })
        ));
        assert!(matches!(
            validate_left_path(&d, &[(2, 2)]),
            Err(PathViolation::NoSuchMove { i: 2, j: 2 })
        ));
        assert!(matches!(
            validate_left_path(&d, &[(1, 5)]),
            Err(PathViolation::OutOfRange { .. })
        ));
        // L11 L12 L13 passes (1)-(3) but L12 and L13 both land on −1.
        assert!(matches!(
            validate_left_path(&d, &[(1, 1), (1, 2), (1, 3)]),
            Err(PathViolation::Collision { target: -1, .. })
        ));
    }

    #[test]
    fn nesting_and_unmoved_after_earlier_moves() {
        let d: WeightDiagram = "@0:x.x.x".parse().unwrap();
        assert_eq!(left_move(&d, 1, 2).unwrap(), Some(-1));
        assert_eq!(left_move(&d, 2, 3).unwrap(), Some(1));
        assert_eq!(
            validate_left_path(&d, &[(1, 2), (2, 3)]),
            Err(PathViolation::Nesting {
                ia: 1,
                ja: 2,
                ib: 2,
                jb: 3
            })
        );

        // x_2 has left, so x_1 no longer blocks L13.
        let d: WeightDiagram = "@-1:x.xx".parse().unwrap();
        assert_eq!(
            validate_left_path(&d, &[(1, 3)]),
            Err(PathViolation::Unmoved { p: 1, i: 1, j: 3 })
        );
        let p = validate_left_path(&d, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(p.apply(&d).cross_positions(), &[-3, -2, -1]);
    }

    #[test]
    fn applying_paths() {
        let d = example();
        assert_eq!(LeftPath::empty().apply(&d), d);
        let bottom = path(&d, "L11 L12 L33 L44").apply(&d);
        assert_eq!(bottom.cross_positions(), &[-1, 0, 3, 6]);
        assert_eq!(bottom.symbol(5), Symbol::Greater);
        assert_eq!(bottom.to_string(), "@-1:xx..x.>x.<.<");
        let one = path(&d, "L34").apply(&d);
        assert_eq!(one.cross_positions(), &[1, 2, 3, 4]);
        let lam = d.weight();
        let mu = apply_left_path(&d, &path(&d, "L34"));
        assert!(matches!(mu.leq(&lam).unwrap(), Some(l) if l > 0));
    }

    #[test]
    fn right_paths() {
        let d = example();
        assert_eq!(RightPath::parse(&d, "0000").unwrap().apply(&d), d);
        let bottom = path(&d, "L11 L12 L33 L44").apply(&d);
        let up = RightPath::parse(&bottom, "1111").unwrap();
        let targets: Vec<i64> = up.moves().iter().map(|m| m.2).collect();
        assert_eq!(targets, vec![2, 1, 4, 7]);
        assert_eq!(up.apply(&bottom), d);
        let single: WeightDiagram = "@0:x".parse().unwrap();
        let up = RightPath::parse(&single, "1").unwrap();
        assert_eq!(up.apply(&single).cross_positions(), &[1]);
        assert!(RightPath::parse(&d, "11").is_err());
        assert!(RightPath::parse(&d, "11a1").is_err());
    }

    #[test]
    fn stats_blocks_bridges() {
        let d = example();
        let bottom = path(&d, "L11 L12 L33 L44");
        assert_eq!(bottom.stats(), (4, Some((1, 4)), 3));
        assert_eq!(path(&d, "L34").stats(), (1, Some((3, 4)), 1));
        assert_eq!(LeftPath::empty().stats(), (0, None, 0));

        let b = path(&d, "L11 L33").blocks();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].to_string(), "L11");
        assert_eq!(b[1].to_string(), "L33");
        assert_eq!(path(&d, "L11 L14").blocks().len(), 1);
        assert!(LeftPath::empty().blocks().is_empty());
        assert_eq!(bottom.blocks().len(), 3);

        assert!(path(&d, "L34").has_bridges());
        assert!(!bottom.has_bridges());
        assert!(!LeftPath::empty().has_bridges());
        assert!(path(&d, "L11 L33 L14").has_bridges());
    }

    #[test]
    fn subpaths() {
        let d = example();
        let q = path(&d, "L11 L12");
        assert!(is_subpath(&d, &[(1, 1)], &q));
        assert!(!is_subpath(&d, &[(1, 2)], &q));
        assert!(is_subpath(&d, &q.pairs(), &q));
    }

    #[test]
    fn bridgeless_family() {
        let d = example();
        let got: Vec<String> = (0..=4)
            .map(|k| bridgeless_path(&d, k).unwrap().to_string())
            .collect();
        assert_eq!(
            got,
            vec!["∅", "L11", "L11 L12", "L11 L12 L33", "L11 L12 L33 L44"]
        );
        for k in 0..4 {
            let a = bridgeless_path(&d, k).unwrap();
            let b = bridgeless_path(&d, k + 1).unwrap();
            assert!(a.is_subpath_of(&b));
        }
        assert_eq!(bottom_path(&d).to_string(), "L11 L12 L33 L44");
        let typical: WeightDiagram = "@0:<>".parse().unwrap();
        assert!(bottom_path(&typical).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let d = example();
        assert_eq!(path(&d, "l11,L12  L33").to_string(), "L11 L12 L33");
        assert_eq!(path(&d, "∅"), LeftPath::empty());
        assert!(matches!(
            LeftPath::parse(&d, "L1x"),
            Err(Error::Parse { token, .. }) if token == "L1x"
        ));
        assert!(matches!(
            LeftPath::parse(&d, "L12"),
            Err(Error::InvalidPath(PathViolation::Unmoved { .. }))
        ));
    }
}
