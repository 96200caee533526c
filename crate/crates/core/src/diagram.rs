//! Weight diagrams: the integer line decorated with `∅ < > ×`.
//!
//! Vertex `i` of `D_λ` carries `×` if `i` is both a left and a right
//! ρ-value, `>` if it is only a left value, `<` if it is only a right value,
//! and is empty otherwise. Only non-empty vertices are stored.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::{RhoWeight, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Empty,
    Less,
    Greater,
    Cross,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Empty => '.',
            Symbol::Less => '<',
            Symbol::Greater => '>',
            Symbol::Cross => 'x',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            '.' => Some(Symbol::Empty),
            '<' => Some(Symbol::Less),
            '>' => Some(Symbol::Greater),
            'x' | 'X' | '×' => Some(Symbol::Cross),
            _ => None,
        }
    }

    /// Contribution of a vertex to the `ℓ` statistic.
    pub fn ell_weight(self) -> i64 {
        match self {
            Symbol::Cross => 1,
            Symbol::Empty => -1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    symbols: BTreeMap<i64, Symbol>,
    crosses: Vec<i64>,
    m: usize,
    n: usize,
}

impl WeightDiagram {
    /// Builds a diagram from its non-empty vertices. `Empty` entries are
    /// dropped.
    pub fn from_symbols(symbols: impl IntoIterator<Item = (i64, Symbol)>) -> Result<Self> {
        let symbols: BTreeMap<i64, Symbol> = symbols
            .into_iter()
            .filter(|(_, s)| *s != Symbol::Empty)
            .collect();
        let count = |sym| symbols.values().filter(|&&s| s == sym).count();
        let (x, g, l) = (
            count(Symbol::Cross),
            count(Symbol::Greater),
            count(Symbol::Less),
        );
        if x + g == 0 || x + l == 0 {
            return Err(Error::Invalid(
                "diagram needs at least one left and one right value".into(),
            ));
        }
        let crosses = symbols
            .iter()
            .filter(|(_, &s)| s == Symbol::Cross)
            .map(|(&v, _)| v)
            .collect();
        Ok(WeightDiagram {
            symbols,
            crosses,
            m: x + g,
            n: x + l,
        })
    }

    pub fn of(w: &Weight) -> Result<Self> {
        w.require_dominant()?;
        let rw = w.rho_shift();
        let mut symbols = BTreeMap::new();
        for &v in rw.left() {
            symbols.insert(v, Symbol::Greater);
        }
        for &v in rw.right() {
            let slot = symbols.entry(v).or_insert(Symbol::Less);
            if *slot == Symbol::Greater {
                *slot = Symbol::Cross;
            }
        }
        Self::from_symbols(symbols)
    }

    /// The dominant weight encoded by this diagram.
    pub fn weight(&self) -> Weight {
        let mut left = Vec::with_capacity(self.m);
        let mut right = Vec::with_capacity(self.n);
        for (&v, &s) in &self.symbols {
            if matches!(s, Symbol::Cross | Symbol::Greater) {
                left.push(v);
            }
            if matches!(s, Symbol::Cross | Symbol::Less) {
                right.push(v);
            }
        }
        // Left values are written λ^ρ_m first, i.e. decreasing.
        left.reverse();
        Weight::from_rho(&RhoWeight::new(left, right).expect("m, n >= 1"))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbol(&self, v: i64) -> Symbol {
        self.symbols.get(&v).copied().unwrap_or(Symbol::Empty)
    }

    pub fn is_empty_at(&self, v: i64) -> bool {
        !self.symbols.contains_key(&v)
    }

    /// Non-empty vertices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Symbol)> + '_ {
        self.symbols.iter().map(|(&v, &s)| (v, s))
    }

    /// Positions `x_1 < … < x_r` of the crosses.
    pub fn cross_positions(&self) -> &[i64] {
        &self.crosses
    }

    pub fn atypicality(&self) -> usize {
        self.crosses.len()
    }

    /// `x_i` for `1 <= i <= r`.
    pub fn x(&self, i: usize) -> i64 {
        self.crosses[i - 1]
    }

    pub fn min_vertex(&self) -> i64 {
        *self.symbols.keys().next().expect("non-empty diagram")
    }

    pub fn max_vertex(&self) -> i64 {
        *self.symbols.keys().next_back().expect("non-empty diagram")
    }

    /// `ℓ(s, t)`: crosses minus empty vertices strictly between `s < t`.
    pub fn count_ell(&self, s: i64, t: i64) -> Result<i64> {
        if s >= t {
            return Err(Error::EmptyRange(s, t));
        }
        Ok(self.ell(s, t))
    }

    /// `ℓ(s, t)` for `s < t`.
    pub(crate) fn ell(&self, s: i64, t: i64) -> i64 {
        let span = t - s - 1;
        let (mut crosses, mut occupied) = (0, 0);
        for (_, &sym) in self.symbols.range(s + 1..t) {
            occupied += 1;
            if sym == Symbol::Cross {
                crosses += 1;
            }
        }
        crosses - (span - occupied)
    }

    /// Number of crosses strictly between `s < t`.
    pub(crate) fn crosses_between(&self, s: i64, t: i64) -> usize {
        self.crosses.iter().filter(|&&x| s < x && x < t).count()
    }

    /// Replaces the crosses at `removed` by crosses at `added`. The added
    /// vertices must be empty once `removed` are cleared.
    pub(crate) fn relocate_crosses(&self, removed: &[i64], added: &[i64]) -> Self {
        let mut symbols = self.symbols.clone();
        for v in removed {
            let old = symbols.remove(v);
            debug_assert_eq!(old, Some(Symbol::Cross));
        }
        for &v in added {
            let old = symbols.insert(v, Symbol::Cross);
            debug_assert!(old.is_none(), "cross placed on occupied vertex {v}");
        }
        Self::from_symbols(symbols).expect("cross counts are preserved")
    }

    /// The same diagram with every vertex index increased by `c`.
    pub fn shifted(&self, c: i64) -> Self {
        Self::from_symbols(self.symbols.iter().map(|(&v, &s)| (v + c, s)))
            .expect("shift preserves counts")
    }

    /// The hull string, without the `@start:` prefix.
    pub fn hull_string(&self) -> String {
        (self.min_vertex()..=self.max_vertex())
            .map(|v| self.symbol(v).as_char())
            .collect()
    }
}

/// `@<start>:<symbols>` over the hull of the non-empty vertices.
impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:{}", self.min_vertex(), self.hull_string())
    }
}

impl WeightDiagram {
    pub fn from_parts(start: i64, symbols: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (k, c) in symbols.chars().enumerate() {
            let sym = Symbol::from_char(c).ok_or_else(|| Error::Parse {
                what: "diagram symbol",
                token: c.to_string(),
            })?;
            out.push((start + k as i64, sym));
        }
        Self::from_symbols(out)
    }
}

impl FromStr for WeightDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t.strip_prefix('@').ok_or_else(|| Error::Parse {
            what: "diagram (expected leading `@`)",
            token: t.to_string(),
        })?;
        let (start, symbols) = body.split_once(':').ok_or_else(|| Error::Parse {
            what: "diagram (expected `@start:symbols`)",
            token: t.to_string(),
        })?;
        let start = start.trim().parse::<i64>().map_err(|_| Error::Parse {
            what: "diagram start vertex",
            token: start.to_string(),
        })?;
        Self::from_parts(start, symbols.trim())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    start: i64,
    symbols: String,
}

impl Serialize for WeightDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            start: self.min_vertex(),
            symbols: self.hull_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        WeightDiagram::from_parts(j.start, &j.symbols).map_err(serde::de::Error::custom)
    }
}
