//! The primitive weight graph of a Kac module.
//!
//! Vertices are the left paths of `λ`. A skeleton edge `p → q` joins paths
//! with `ℓ(q) = ℓ(p) + 1` when either `p` is a subpath of `q`, or `p` has
//! bridges and `q` comes from `p` by splitting one move `L_{ij}` (`i < j`)
//! into `L_{ia}`, `L_{bj}` with `b` the smallest admissible value in
//! `[a, j]`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::WeightDiagram;
use crate::enumerate::{enumerate_paths, PathSet};
use crate::error::Result;
use crate::moves::{bridgeless_path, validate_left_path, LeftPath};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeRule {
    Subpath,
    Split,
}

#[derive(Debug, Clone)]
pub struct PrimitiveWeightGraph {
    set: PathSet,
    edges: BTreeSet<(usize, usize)>,
    rules: HashMap<(usize, usize), EdgeRule>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    duplicate_edges: usize,
}

/// Reachability over the skeleton, excluding the trivial `v ⤳ v`.
#[derive(Debug, Clone)]
pub struct Closure {
    words: usize,
    bits: Vec<u64>,
}

impl Closure {
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.bits[from * self.words + to / 64] >> (to % 64) & 1 == 1
    }

    fn set(&mut self, from: usize, to: usize) {
        self.bits[from * self.words + to / 64] |= 1 << (to % 64);
    }

    fn merge_row(&mut self, into: usize, from: usize) {
        for k in 0..self.words {
            let v = self.bits[from * self.words + k];
            self.bits[into * self.words + k] |= v;
        }
    }
}

impl PrimitiveWeightGraph {
    pub fn build(w: &Weight) -> Result<Self> {
        Ok(Self::from_diagram(&WeightDiagram::of(w)?))
    }

    pub fn from_diagram(d: &WeightDiagram) -> Self {
        let set = enumerate_paths(d);
        let index: HashMap<Vec<(usize, usize)>, usize> = set
            .paths()
            .iter()
            .enumerate()
            .map(|(k, p)| (p.pairs(), k))
            .collect();
        let paths = set.paths();
        let mut edges = BTreeSet::new();
        let mut rules = HashMap::new();
        let mut duplicate_edges = 0;

        for (u, p) in paths.iter().enumerate() {
            for (v, q) in paths.iter().enumerate() {
                if q.len() == p.len() + 1 && p.is_subpath_of(q) {
                    edges.insert((u, v));
                    rules.insert((u, v), EdgeRule::Subpath);
                }
            }
        }

        for (u, p) in paths.iter().enumerate() {
            if !p.has_bridges() {
                continue;
            }
            for v in split_successors(d, p) {
                let v = index[&v];
                if edges.insert((u, v)) {
                    rules.insert((u, v), EdgeRule::Split);
                } else {
                    duplicate_edges += 1;
                }
            }
        }

        let n = paths.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in &edges {
            succ[u].push(v);
            pred[v].push(u);
        }
        PrimitiveWeightGraph {
            set,
            edges,
            rules,
            succ,
            pred,
            duplicate_edges,
        }
    }

    pub fn paths(&self) -> &PathSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn r(&self) -> usize {
        self.set.r()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn edge_rule(&self, u: usize, v: usize) -> Option<EdgeRule> {
        self.rules.get(&(u, v)).copied()
    }

    /// Split edges that were also produced by the subpath rule or by a
    /// second choice of `a`; they are stored once.
    pub fn duplicate_edges(&self) -> usize {
        self.duplicate_edges
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn path(&self, v: usize) -> &LeftPath {
        &self.set.paths()[v]
    }

    pub fn vertex_of(&self, p: &LeftPath) -> Option<usize> {
        self.set.index_of(p)
    }

    pub fn source(&self) -> usize {
        self.set.index_of(&LeftPath::empty()).expect("empty path")
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&v| self.path(v).len() == self.r())
            .expect("bottom path")
    }

    /// Layer `k` holds the paths of length `k`.
    pub fn jantzen_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = vec![Vec::new(); self.r() + 1];
        for v in 0..self.len() {
            layers[self.path(v).len()].push(v);
        }
        layers
    }

    pub fn derived_closure(&self) -> Closure {
        let n = self.len();
        let words = n.div_ceil(64).max(1);
        let mut c = Closure {
            words,
            bits: vec![0; n * words],
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.path(v).len()));
        for v in order {
            for &w in &self.succ[v] {
                c.set(v, w);
                c.merge_row(v, w);
            }
        }
        c
    }

    /// Longest skeleton chain, as its number of edges and a witness.
    pub fn max_chain(&self) -> (usize, Vec<usize>) {
        let n = self.len();
        let mut best = vec![0usize; n];
        let mut next = vec![None; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.path(v).len()));
        for v in order {
            for &w in &self.succ[v] {
                if best[w] + 1 > best[v] {
                    best[v] = best[w] + 1;
                    next[v] = Some(w);
                }
            }
        }
        let start = (0..n)
            .max_by_key(|&v| (best[v], std::cmp::Reverse(v)))
            .expect("non-empty");
        let mut chain = vec![start];
        while let Some(w) = next[*chain.last().unwrap()] {
            chain.push(w);
        }
        (best[start], chain)
    }

    /// `L_∅ → L_{[1,1]} → … → L_{[1,r]}`, or `None` if some step is not a
    /// skeleton edge.
    pub fn canonical_chain(&self) -> Option<Vec<usize>> {
        let d = self.set.base();
        let chain: Vec<usize> = (0..=self.r())
            .map(|k| self.vertex_of(&bridgeless_path(d, k).ok()?))
            .collect::<Option<_>>()?;
        chain
            .windows(2)
            .all(|w| self.has_edge(w[0], w[1]))
            .then_some(chain)
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let name = |v: usize| format!("\"{}\"", self.path(v));
        writeln!(out, "digraph kac {{").unwrap();
        writeln!(out, "  rankdir=TB;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for v in 0..self.len() {
            writeln!(
                out,
                "  {} [label=\"{}\\n{}\"];",
                name(v),
                self.path(v),
                self.set.weights()[v]
            )
            .unwrap();
        }
        for layer in self.jantzen_layers() {
            let members: Vec<String> = layer.iter().map(|&v| name(v)).collect();
            writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {} -> {};", name(u), name(v)).unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            r: self.r(),
            weight: self.set.base().weight(),
            vertices: (0..self.len())
                .map(|v| VertexJson {
                    id: v,
                    path: self.path(v).to_string(),
                    length: self.path(v).len(),
                    weight: self.set.weights()[v].clone(),
                })
                .collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            layers: self.jantzen_layers(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub path: String,
    pub length: usize,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub r: usize,
    pub weight: Weight,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub layers: Vec<Vec<usize>>,
}

/// Targets of the split rule from `p`, as move lists. Each `(move, a)`
/// choice contributes at most one path.
fn split_successors(d: &WeightDiagram, p: &LeftPath) -> Vec<Vec<(usize, usize)>> {
    let pairs = p.pairs();
    let mut out = Vec::new();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if i >= j {
            continue;
        }
        for a in i..=j {
            for b in a..=j {
                let mut cand: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != k)
                    .map(|(_, &m)| m)
                    .collect();
                cand.push((i, a));
                cand.push((b, j));
                cand.sort_by_key(|&(_, jj)| jj);
                if validate_left_path(d, &cand).is_ok() {
                    out.push(cand);
                    break;
                }
            }
        }
    }
    out
}
