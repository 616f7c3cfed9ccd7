//! Exact computation of zero-forcing / domination hybrid graph invariants.
//!
//! The crate is built around two value types: [`Graph`], an immutable simple
//! undirected graph stored as one adjacency bit row per vertex, and
//! [`VertexSet`], a fixed-width bit vector that carries every black set,
//! dominating set and witness in the library. On top of those sit
//!
//! * the color-change rule and its closure ([`forcing`]),
//! * exact minimum-cardinality solvers for Z, Z_c, gamma, gamma_c, F_d,
//!   F_cd and the max-leaf number ([`mod@solve`]),
//! * constructors for the named graph families and graph products
//!   ([`family`], [`product`]),
//! * closed-form predictions and constructive witnesses for those families
//!   ([`predict`]).
//!
//! Everything here is `no_std` (with `alloc`); IO, file formats and the
//! verification harness live in the companion CLI crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod family;
pub mod forcing;
pub mod graph;
pub mod predict;
pub mod product;
pub mod set;
pub mod solve;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use forcing::{
    closure, closure_rescan, is_connected_dom_forcing, is_czfs, is_dom_forcing, is_zfs, trace,
    ForcingTrace,
};
pub use graph::Graph;
pub use predict::{
    grid_witness, predict_family, predict_family_dom_forcing, predict_gamma_c_grid,
    predict_product, predict_splitting_of_family, splitting_gamma_c, splitting_path_zero_forcing,
    tree_formula, Outcome, Prediction,
};
pub use product::{
    cartesian, corona, generalized_corona, iterated_corona, join, rooted_product,
    rooted_product_sequence, splitting, ProductSpec,
};
pub use set::{VertexSet, MAX_VERTICES};
pub use solve::{
    all_minimum_sets, maxleaf, solve, spanning_tree_leaf_oracle, InvariantKind, Method,
    SolveBudget, SolveResult,
};
