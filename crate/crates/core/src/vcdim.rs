//! The VC dimension of axis-parallel cuts, `max{n : C(n, floor(n/2)) <= d}`,
//! and its log-scale envelope
//! `log2 d - 0.38 <= VC <= log2(d sqrt(d+3)) + 0.51` for `d >= 2`.

use num_bigint::BigUint;

use crate::combinatorics::{central_binom, ExactInteger};
use crate::error::{Error, Result};

const LOWER_OFFSET: f64 = 0.38;
const UPPER_OFFSET: f64 = 0.51;

/// `C(n+1, floor((n+1)/2))` from `C(n, floor(n/2))`.
///
/// Odd `n` doubles; even `n` multiplies by `(n+1)/(n/2+1)`, exactly divisible.
fn next_central_u128(n: u128, current: u128) -> u128 {
    if n % 2 == 1 {
        current * 2
    } else {
        current * (n + 1) / (n / 2 + 1)
    }
}

fn next_central_big(n: u64, current: &BigUint) -> BigUint {
    if n % 2 == 1 {
        current << 1u32
    } else {
        current * (n + 1) / (n / 2 + 1)
    }
}

/// VC dimension of the axis-parallel cuts in `R^d`.
///
/// Scans `n = 1, 2, ...` while updating the central binomial by its ratio,
/// so the cost is `O(log d)`.
pub fn vc_dim(d: u64) -> Result<u32> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let d = d as u128;
    let mut n: u128 = 1;
    let mut next = 2u128; // C(2, 1)
    while next <= d {
        n += 1;
        next = next_central_u128(n, next);
    }
    Ok(n as u32)
}

/// [`vc_dim`] for dimensions beyond `u64`.
pub fn vc_dim_big(d: &BigUint) -> Result<u64> {
    if d.bits() == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut n: u64 = 1;
    let mut next = BigUint::from(2u32);
    while &next <= d {
        n += 1;
        next = next_central_big(n, &next);
    }
    Ok(n)
}

/// Least `d` whose VC dimension reaches `n`, i.e. `C(n, floor(n/2))`.
pub fn min_dimension_for_vc(n: u64) -> ExactInteger {
    central_binom(n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StirlingBounds {
    pub lower: f64,
    pub upper: f64,
}

impl StirlingBounds {
    /// `lower - slack <= vc <= upper + slack`.
    pub fn sandwiches(&self, vc: u32, slack: f64) -> bool {
        let vc = vc as f64;
        self.lower - slack <= vc && vc <= self.upper + slack
    }
}

/// `(log2 d - 0.38, log2(d sqrt(d+3)) + 0.51)`, defined for `d >= 2`.
pub fn stirling_bounds(d: u64) -> Result<StirlingBounds> {
    if d < 2 {
        return Err(Error::BoundsDomain(d));
    }
    let x = d as f64;
    let lower = x.ln() / std::f64::consts::LN_2 - LOWER_OFFSET;
    // log(d sqrt(d+3)) split into two logs so large d cannot overflow.
    let upper = (x.ln() + 0.5 * (x + 3.0).ln()) / std::f64::consts::LN_2 + UPPER_OFFSET;
    Ok(StirlingBounds { lower, upper })
}

/// One row of the d-vs-VC table. `stirling` is `None` for `d = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VcReport {
    pub d: u64,
    pub vc: u32,
    pub stirling: Option<StirlingBounds>,
}

/// Rows `d = 1..=d_max` in order, produced lazily in constant memory.
pub fn vc_table(d_max: u64) -> VcTable {
    VcTable {
        d: 1,
        d_max,
        vc: 1,
        next_jump: 2,
    }
}

#[derive(Debug, Clone)]
pub struct VcTable {
    d: u64,
    d_max: u64,
    vc: u32,
    // C(vc+1, floor((vc+1)/2))
    next_jump: u128,
}

impl Iterator for VcTable {
    type Item = VcReport;

    fn next(&mut self) -> Option<VcReport> {
        if self.d > self.d_max || self.d == 0 {
            return None;
        }
        let d = self.d;
        while self.next_jump <= d as u128 {
            self.vc += 1;
            self.next_jump = next_central_u128(self.vc as u128, self.next_jump);
        }
        // d_max == u64::MAX would otherwise wrap.
        self.d = d.checked_add(1).unwrap_or(0);
        Some(VcReport {
            d,
            vc: self.vc,
            stirling: stirling_bounds(d).ok(),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.d == 0 || self.d > self.d_max {
            return (0, Some(0));
        }
        let left = usize::try_from(self.d_max - self.d + 1).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// `true` when `d` is one of the jump points `C(n, floor(n/2))`, `n >= 2`.
pub fn is_jump_point(d: u64) -> bool {
    d >= 2 && vc_dim(d) != vc_dim(d - 1)
}
