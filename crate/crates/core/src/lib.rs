//! Exact combinatorics of Kac modules for `gl(m|n)` and `osp(2|2n)`.
//!
//! Integral dominant weights are encoded as weight diagrams; composition
//! factors of the Kac module `K(λ)` are enumerated as left paths on the
//! diagram of `λ`. From the path set we build the primitive weight graph,
//! the Jantzen (= Loewy) layers, the Jantzen polynomials and, by exact
//! unitriangular inversion, the Kazhdan-Lusztig polynomials. Blocks reduce
//! to the maximally atypical block of `gl(r|r)`.
//!
//! All arithmetic is on machine integers; nothing here uses floating point.

pub mod check;
pub mod code;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod kl;
pub mod moves;
pub mod osp;
pub mod poly;
pub mod reduction;
pub mod sample;
pub mod weight;

pub use code::{path_to_code, Code};
pub use diagram::{Symbol, WeightDiagram};
pub use enumerate::{brundan_check, enumerate_paths, primitive_weights, PathSet};
pub use error::{Error, Result};
pub use graph::PrimitiveWeightGraph;
pub use kl::{ClosurePoset, KlMatrices};
pub use moves::{LeftMove, LeftPath, PathViolation, RightPath};
pub use osp::OspWeight;
pub use poly::QPoly;
pub use weight::{AtypicalityData, RhoWeight, Weight};
