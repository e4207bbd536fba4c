//! Motif cut sparsification.
//!
//! A motif cut sparsifier of a weighted graph `G` is a reweighted subgraph whose
//! weighted count of motif instances crossing every cut stays within `1 ± ε` of
//! the count in `G`. This crate holds the algorithmic core:
//!
//! * [`graph`]: graphs, cuts, instance weights and motif cut values.
//! * [`motif`] and [`enumerate`]: motif patterns and instance enumeration.
//! * [`hypergraph`]: the motif hypergraph, hypergraph minimum cuts and strengths.
//! * [`weights`]: per-edge motif weights without enumeration (tuple-graph reduction).
//! * [`connectivity`]: max flow and Gomory–Hu flow trees.
//! * [`sparsify`]: the strength-based and connectivity-based sparsification engines.
//! * [`verify`]: brute-force oracles, cut error measurement and the induced-motif lab.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod connectivity;
pub mod enumerate;
mod error;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod motif;
pub mod sampling;
pub mod sparsify;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{Cut, Edge, Graph, Kind};
pub use motif::{Motif, MotifInstance};
