//! Shattering of finite point sets by axis-parallel cuts.
//!
//! A configuration of `n` points in `R^d` is shattered when every one of its
//! `2^n` subsets is the trace `{x_j : x_j^i <= a}` of some cut. Only the
//! per-coordinate order of the points matters, so coordinates are small
//! positive integers and each cut sits at a half-integer threshold.
//!
//! Construction goes through a symmetric chain decomposition of the subset
//! lattice: every chain becomes one coordinate whose value-prefixes are
//! exactly the chain's members, so `C(n, floor(n/2))` coordinates suffice.
//! Verification is independent of the construction and reports the smallest
//! missing subset when shattering fails.

mod chains;
mod config;
mod oracle;
mod verify;

pub use chains::{symmetric_chain_decomposition, Chain};
pub use config::{CutHypothesis, PointConfig, SubsetMask};
pub use oracle::exhaustive_vc_oracle;
pub use verify::{is_shattered, realized_subsets, realizing_cut, MaskSet, Verdict};

use crate::error::{Error, Result};
use crate::vcdim::vc_dim;

/// Largest point count handled by mask enumeration (`2^24` masks).
pub const MAX_POINTS: u32 = 24;

pub(crate) fn check_point_count(n: u64) -> Result<()> {
    if n == 0 || n > MAX_POINTS as u64 {
        return Err(Error::PointCount { n, max: MAX_POINTS });
    }
    Ok(())
}

/// `n` points in `R^d` with one coordinate per chain of the decomposition of
/// `{1..n}`, for as many chains as `d` allows. Coordinates past the chain
/// count are the constant `n`.
///
/// Shattered exactly when `d >= C(n, floor(n/2))`.
pub fn build_chain_config(n: u32, d: usize) -> Result<PointConfig> {
    check_point_count(n as u64)?;
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let n_us = n as usize;
    let chains = symmetric_chain_decomposition(n)?;
    let mut coords = vec![n; n_us * d];
    for (axis, chain) in chains.iter().take(d).enumerate() {
        for (point, value) in chain.value_order(n).into_iter().enumerate() {
            coords[point * d + axis] = value;
        }
    }
    PointConfig::new(n_us, d, coords)
}

/// A configuration of `vc_dim(d)` points in `R^d` shattered by the
/// axis-parallel cuts.
pub fn build_shattered_config(d: u64) -> Result<PointConfig> {
    let n = vc_dim(d)?;
    check_point_count(n as u64)?;
    build_chain_config(n, d as usize)
}
