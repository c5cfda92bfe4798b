use std::fmt;

use crate::error::{Error, Result};

/// A subset of the points `x_1..x_n`; bit `j` stands for `x_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn new(bits: u32) -> Self {
        SubsetMask(bits)
    }

    /// All of `x_1..x_n`.
    pub fn full(n: u32) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// From zero-based point indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask(indices.into_iter().fold(0, |m, j| m | (1 << j)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        point < 32 && self.0 & (1 << point) != 0
    }

    /// Zero-based indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&j| self.0 & (1 << j) != 0)
    }
}

/// One-based set notation, e.g. `{1,3}` or `{}`.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, j) in self.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        f.write_str("}")
    }
}

/// `n` points in `R^d`, every coordinate an integer in `1..=n`.
///
/// Stored row-major: point `j` occupies `coords[j*d .. (j+1)*d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    n: usize,
    d: usize,
    coords: Vec<u32>,
}

impl PointConfig {
    pub fn new(n: usize, d: usize, coords: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("at least one point is required".into()));
        }
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.len() != n * d {
            return Err(Error::Shape(format!(
                "expected {n} x {d} = {} coordinates, found {}",
                n * d,
                coords.len()
            )));
        }
        if let Some(pos) = coords.iter().position(|&v| v == 0 || v as usize > n) {
            return Err(Error::CoordinateRange {
                point: pos / d,
                value: coords[pos] as i64,
                n,
            });
        }
        Ok(PointConfig { n, d, coords })
    }

    /// From one row of `d` values per point.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        let mut coords = Vec::with_capacity(n * d);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::Shape(format!(
                    "point {} has {} coordinates, expected {d}",
                    j + 1,
                    row.len()
                )));
            }
            for &v in row {
                if v < 1 || v > n as i64 {
                    return Err(Error::CoordinateRange {
                        point: j,
                        value: v,
                        n,
                    });
                }
                coords.push(v as u32);
            }
        }
        PointConfig::new(n, d, coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point(&self, j: usize) -> &[u32] {
        &self.coords[j * self.d..(j + 1) * self.d]
    }

    pub fn points(&self) -> impl Iterator<Item = &[u32]> {
        self.coords.chunks_exact(self.d)
    }

    pub fn value(&self, point: usize, axis: usize) -> u32 {
        self.coords[point * self.d + axis]
    }

    pub fn column(&self, axis: usize) -> impl Iterator<Item = u32> + '_ {
        self.coords[axis..].iter().step_by(self.d).copied()
    }

    /// Same per-coordinate orders with ties broken by point index, so every
    /// column becomes a permutation of `1..=n`.
    pub fn refine_ties(&self) -> PointConfig {
        let mut coords = vec![0u32; self.coords.len()];
        let mut order: Vec<usize> = Vec::with_capacity(self.n);
        for axis in 0..self.d {
            order.clear();
            order.extend(0..self.n);
            order.sort_by_key(|&j| (self.value(j, axis), j));
            for (rank, &j) in order.iter().enumerate() {
                coords[j * self.d + axis] = rank as u32 + 1;
            }
        }
        PointConfig {
            n: self.n,
            d: self.d,
            coords,
        }
    }
}

/// The half-space `{x : x^axis <= bound + 1/2}`.
///
/// Thresholds are half-integers, so on integer coordinates the test reduces
/// to `x^axis <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutHypothesis {
    pub axis: usize,
    pub bound: i64,
}

impl CutHypothesis {
    pub fn new(axis: usize, bound: i64) -> Self {
        CutHypothesis { axis, bound }
    }

    pub fn threshold(&self) -> f64 {
        self.bound as f64 + 0.5
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        point[self.axis] as i64 <= self.bound
    }

    /// `{x_1..x_n} ∩ A` for this cut `A`.
    pub fn trace(&self, config: &PointConfig) -> SubsetMask {
        SubsetMask::from_indices(
            config
                .points()
                .enumerate()
                .filter(|(_, p)| self.contains(p))
                .map(|(j, _)| j),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_display() {
        assert_eq!(SubsetMask::EMPTY.to_string(), "{}");
        assert_eq!(SubsetMask::new(0b10).to_string(), "{2}");
        assert_eq!(SubsetMask::new(0b1101).to_string(), "{1,3,4}");
        assert_eq!(SubsetMask::full(24).len(), 24);
    }

    #[test]
    fn rows_round_trip() {
        let cfg = PointConfig::from_rows(&[vec![1, 2], vec![2, 2]]).unwrap();
        assert_eq!(cfg.point(1), &[2, 2]);
        assert_eq!(cfg.column(0).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(cfg.column(1).collect::<Vec<_>>(), vec![2, 2]);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            PointConfig::from_rows(&[vec![1, 2], vec![2]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            PointConfig::from_rows(&[vec![3], vec![1]]),
            Err(Error::CoordinateRange { value: 3, .. })
        ));
        assert!(matches!(
            PointConfig::from_rows(&[vec![0]]),
            Err(Error::CoordinateRange { value: 0, .. })
        ));
        assert!(PointConfig::from_rows(&[]).is_err());
        assert_eq!(PointConfig::new(1, 0, vec![]), Err(Error::ZeroDimension));
        assert!(matches!(
            PointConfig::new(2, 1, vec![1]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn refine_ties_by_index() {
        let cfg = PointConfig::from_rows(&[vec![2, 1], vec![1, 1], vec![2, 3]]).unwrap();
        let refined = cfg.refine_ties();
        assert_eq!(refined.column(0).collect::<Vec<_>>(), vec![2, 1, 3]);
        assert_eq!(refined.column(1).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn cut_trace() {
        let cfg = PointConfig::from_rows(&[vec![1, 3], vec![2, 1], vec![3, 2]]).unwrap();
        let cut = CutHypothesis::new(1, 2);
        assert_eq!(cut.threshold(), 2.5);
        assert_eq!(cut.trace(&cfg), SubsetMask::from_indices([1, 2]));
        assert_eq!(CutHypothesis::new(0, 0).trace(&cfg), SubsetMask::EMPTY);
    }
}
