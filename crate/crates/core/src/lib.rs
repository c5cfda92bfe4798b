//! Exact VC dimension of axis-parallel half-spaces in `R^d`.
//!
//! The family `A_d = {{x : x^i <= a} : 1 <= i <= d, a in R}` has VC dimension
//! `max{n : C(n, floor(n/2)) <= d}`, which grows like `log2 d` rather than `d`.
//! This crate computes that value exactly for arbitrarily large `d`, evaluates
//! the Stirling-type envelopes around it, and builds and checks explicit
//! shattered point configurations.
//!
//! - [`combinatorics`]: exact binomials and factorials, Stirling envelopes.
//! - [`vcdim`]: the VC dimension formula, its log-scale bounds and the d-vs-VC table.
//! - [`shattering`]: chain decompositions, witness construction, shattering checks.
//! - [`config_file`]: the on-disk witness format.
//! - [`cli`]: the `axis-vc` command line front end.

pub mod cli;
pub mod combinatorics;
pub mod config_file;
mod error;
pub mod shattering;
pub mod vcdim;

pub use combinatorics::{
    binom, central_binom, central_binom_envelope, factorial, stirling_factorial_bounds, BoundKind,
    ExactInteger, RealBound,
};
pub use error::{Error, Result};
pub use shattering::{
    build_chain_config, build_shattered_config, exhaustive_vc_oracle, is_shattered,
    realized_subsets, symmetric_chain_decomposition, Chain, CutHypothesis, MaskSet, PointConfig,
    SubsetMask, Verdict, MAX_POINTS,
};
pub use vcdim::{
    min_dimension_for_vc, stirling_bounds, vc_dim, vc_dim_big, vc_table, StirlingBounds, VcReport,
    VcTable,
};
