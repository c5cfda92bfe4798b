//! Exact integer combinatorics and the Stirling envelopes around `n!` and
//! `C(n, floor(n/2))`.
//!
//! The real-valued bounds are kept in log-space: `2^(n+1) (n+1)^(n+1/2)`
//! leaves the `f64` range long before `n = 1024`, while its logarithm stays
//! small. Compare them against exact integers with [`ln_exact`].

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision nonnegative integer.
pub type ExactInteger = BigUint;

/// Which side of the bracketed quantity a [`RealBound`] sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

/// A positive real bound stored by its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealBound {
    ln: f64,
    kind: BoundKind,
}

impl RealBound {
    fn new(ln: f64, kind: BoundKind) -> Self {
        debug_assert!(ln.is_finite());
        RealBound { ln, kind }
    }

    pub fn kind(&self) -> BoundKind {
        self.kind
    }

    /// Natural logarithm of the bound. Always finite.
    pub fn ln(&self) -> f64 {
        self.ln
    }

    /// The bound itself. Overflows to `+inf` once `ln` exceeds ~709.78.
    pub fn value(&self) -> f64 {
        self.ln.exp()
    }

    /// Whether the bound holds for a quantity with natural log `exact_ln`,
    /// allowing `rel_slack * max(1, |exact_ln|)` of float error.
    pub fn admits(&self, exact_ln: f64, rel_slack: f64) -> bool {
        let slack = rel_slack * exact_ln.abs().max(1.0);
        match self.kind {
            BoundKind::Lower => self.ln <= exact_ln + slack,
            BoundKind::Upper => self.ln >= exact_ln - slack,
        }
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> ExactInteger {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, floor(n/2))`. Defined as 1 at `n = 0`.
pub fn central_binom(n: u64) -> ExactInteger {
    binom(n, n / 2)
}

pub fn factorial(n: u64) -> ExactInteger {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Natural logarithm of a positive exact integer, accurate to a few ulps.
///
/// Returns `-inf` for zero.
pub fn ln_exact(x: &ExactInteger) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value fits in f64");
    top.ln() + shift as f64 * LN_2
}

/// `sqrt(2 pi) e^-(n+1) (n+1)^(n+1/2) <= n! <= same * e^(1/(12(n+1)))`.
///
/// Valid for every `n >= 1`; returns `(lower, upper)`.
pub fn stirling_factorial_bounds(n: u64) -> (RealBound, RealBound) {
    assert!(n >= 1, "stirling_factorial_bounds requires n >= 1");
    let m = n as f64 + 1.0;
    let ln_lower = 0.5 * (2.0 * PI).ln() - m + (m - 0.5) * m.ln();
    let ln_upper = ln_lower + 1.0 / (12.0 * m);
    (
        RealBound::new(ln_lower, BoundKind::Lower),
        RealBound::new(ln_upper, BoundKind::Upper),
    )
}

/// Lower and upper bounds on `C(n, floor(n/2))` obtained by combining the
/// factorial bounds, with a separate closed form for each parity of `n`.
///
/// Even `n`:
/// `e^(1/(12(n+1))) e/sqrt(2 pi) 2^(n+1) (n+1)^(n+1/2) / (n+2)^(n+1)` above,
/// the same core times `e^(-1/(3n+6))` below.
///
/// Odd `n`:
/// `e^(1/(12(n+1))) e/sqrt(2 pi) 2^(n+1) (n+1)^((n+1)/2) / (n+3)^(n/2+1)` above,
/// the same core times `e^(-(n+2)/(3(n+3)(n+1)))` below.
pub fn central_binom_envelope(n: u64) -> (RealBound, RealBound) {
    assert!(n >= 1, "central_binom_envelope requires n >= 1");
    let x = n as f64;
    let common = 1.0 - 0.5 * (2.0 * PI).ln() + (x + 1.0) * LN_2;
    let (core, lower_corr) = if n.is_multiple_of(2) {
        let core = common + (x + 0.5) * (x + 1.0).ln() - (x + 1.0) * (x + 2.0).ln();
        (core, 1.0 / (3.0 * x + 6.0))
    } else {
        let core = common + 0.5 * (x + 1.0) * (x + 1.0).ln() - (0.5 * x + 1.0) * (x + 3.0).ln();
        (core, (x + 2.0) / (3.0 * (x + 3.0) * (x + 1.0)))
    };
    let upper_corr = 1.0 / (12.0 * (x + 1.0));
    (
        RealBound::new(core - lower_corr, BoundKind::Lower),
        RealBound::new(core + upper_corr, BoundKind::Upper),
    )
}
