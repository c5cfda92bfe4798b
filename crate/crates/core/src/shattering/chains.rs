use super::{check_point_count, SubsetMask};
use crate::error::Result;

/// Nested subsets `S_k ⊂ S_{k+1} ⊂ ... ⊂ S_{n-k}` of `{1..n}` with `|S_j| = j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    subsets: Vec<SubsetMask>,
}

impl Chain {
    pub fn subsets(&self) -> &[SubsetMask] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn min_size(&self) -> u32 {
        self.subsets[0].len()
    }

    pub fn max_size(&self) -> u32 {
        self.subsets[self.subsets.len() - 1].len()
    }

    /// Coordinate values `1..=n`, one per point, whose value-prefixes are the
    /// chain members: the bottom set takes `1..=k` in index order, each
    /// step's added element takes the next value, and points outside the top
    /// set take what is left in index order.
    pub fn value_order(&self, n: u32) -> Vec<u32> {
        let mut values = vec![0u32; n as usize];
        let mut next = 1u32;
        let bottom = self.subsets[0];
        for j in bottom.indices() {
            values[j] = next;
            next += 1;
        }
        for pair in self.subsets.windows(2) {
            let added = pair[1].bits() & !pair[0].bits();
            values[added.trailing_zeros() as usize] = next;
            next += 1;
        }
        let top = self.subsets[self.subsets.len() - 1];
        for (j, value) in values.iter_mut().enumerate() {
            if !top.contains(j) {
                *value = next;
                next += 1;
            }
        }
        values
    }
}

/// Partition of all `2^n` subsets of `{1..n}` into `C(n, floor(n/2))`
/// symmetric chains by parenthesis matching.
///
/// Read a subset left to right, an absent index as `(` and a present one as
/// `)`. Matched pairs stay fixed along a chain; the unmatched positions always
/// read `)))(((`, and the next chain member turns the leftmost unmatched `(`
/// into `)`. A chain starts at every subset with no unmatched `)`.
pub fn symmetric_chain_decomposition(n: u32) -> Result<Vec<Chain>> {
    check_point_count(n as u64)?;
    let mut chains = Vec::new();
    let mut open = Vec::with_capacity(n as usize);
    for start in 0u32..(1u32 << n) {
        open.clear();
        let mut unmatched_close = false;
        for j in 0..n {
            if start & (1 << j) == 0 {
                open.push(j);
            } else if open.pop().is_none() {
                unmatched_close = true;
                break;
            }
        }
        if unmatched_close {
            continue;
        }
        let mut subsets = Vec::with_capacity(open.len() + 1);
        let mut mask = start;
        subsets.push(SubsetMask::new(mask));
        for &j in open.iter() {
            mask |= 1 << j;
            subsets.push(SubsetMask::new(mask));
        }
        chains.push(Chain { subsets });
    }
    Ok(chains)
}
