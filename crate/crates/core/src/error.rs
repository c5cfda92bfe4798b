use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("the log-scale bounds are only defined for d >= 2, got d = {0}")]
    BoundsDomain(u64),

    #[error("point count {n} is outside the supported range 1..={max}")]
    PointCount { n: u64, max: u32 },

    #[error(
        "exhaustive search with d = {d}, n_cap = {n_cap} exceeds the cost cap (d <= 3, n_cap <= 5)"
    )]
    OracleCostCap { d: usize, n_cap: usize },

    #[error("configuration shape mismatch: {0}")]
    Shape(String),

    #[error("coordinate value {value} of point {point} is outside 1..={n}")]
    CoordinateRange { point: usize, value: i64, n: usize },
}
