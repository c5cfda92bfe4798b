use crate::error::{Error, Result};

const MAX_ORACLE_D: usize = 3;
const MAX_ORACLE_N: usize = 5;

/// All orderings of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                prefix.push(j);
                extend(prefix, used, out);
                prefix.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The subsets one coordinate can cut out when the points are ordered by
/// `order` (smallest value first), as a bitset over the `2^n` masks.
fn prefix_family(order: &[usize]) -> u64 {
    let mut family = 1u64; // empty set
    let mut mask = 0usize;
    for &j in order {
        mask |= 1 << j;
        family |= 1 << mask;
    }
    family
}

fn any_cover(families: &[u64], depth: usize, acc: u64, full: u64) -> bool {
    if depth == 0 {
        return acc == full;
    }
    families
        .iter()
        .any(|&f| any_cover(families, depth - 1, acc | f, full))
}

/// Largest `n <= n_cap` for which some `n`-point configuration in `R^d` is
/// shattered, found by trying every assignment of a strict order to each of
/// the `d` coordinates.
///
/// Strict orders lose nothing: breaking ties never removes a realizable
/// subset. Cost grows as `(n!)^d`, so `d <= 3` and `n_cap <= 5`.
pub fn exhaustive_vc_oracle(d: usize, n_cap: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if d > MAX_ORACLE_D || n_cap == 0 || n_cap > MAX_ORACLE_N {
        return Err(Error::OracleCostCap { d, n_cap });
    }
    let mut best = 0;
    for n in 1..=n_cap {
        let families: Vec<u64> = permutations(n).iter().map(|p| prefix_family(p)).collect();
        let full = (1u64 << (1 << n)) - 1;
        if any_cover(&families, d, 0, full) {
            best = n;
        }
    }
    Ok(best)
}
