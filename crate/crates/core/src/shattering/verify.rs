use super::{check_point_count, CutHypothesis, PointConfig, SubsetMask};
use crate::error::Result;

/// A set of subsets of `{x_1..x_n}`, one bit per mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskSet {
    n: u32,
    words: Vec<u64>,
}

impl MaskSet {
    pub fn new(n: u32) -> Self {
        let words = (1usize << n).div_ceil(64);
        MaskSet {
            n,
            words: vec![0; words],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn insert(&mut self, mask: SubsetMask) {
        let b = mask.bits() as usize;
        self.words[b / 64] |= 1 << (b % 64);
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        let b = mask.bits() as usize;
        b < (1usize << self.n) && self.words[b / 64] & (1 << (b % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// All `2^n` subsets present.
    pub fn is_complete(&self) -> bool {
        self.len() == 1usize << self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..1u32 << self.n)
            .map(SubsetMask::new)
            .filter(move |&m| self.contains(m))
    }

    /// Numerically smallest absent mask.
    pub fn first_missing(&self) -> Option<SubsetMask> {
        let limit = 1usize << self.n;
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != u64::MAX)
            .map(|(i, &w)| i * 64 + (!w).trailing_zeros() as usize)
            .filter(|&b| b < limit)
            .map(|b| SubsetMask::new(b as u32))
    }

    /// Number of absent subsets with exactly `size` points.
    pub fn missing_of_size(&self, size: u32) -> usize {
        (0..1u32 << self.n)
            .map(SubsetMask::new)
            .filter(|m| m.len() == size && !self.contains(*m))
            .count()
    }
}

/// `{ {x_1..x_n} ∩ A : A an axis-parallel cut }`.
///
/// Each coordinate contributes its value-prefixes: sort the column, and after
/// every run of equal values record the points seen so far. Tied points enter
/// together. The cut below every value gives the empty set.
pub fn realized_subsets(config: &PointConfig) -> Result<MaskSet> {
    check_point_count(config.n() as u64)?;
    let mut set = MaskSet::new(config.n() as u32);
    set.insert(SubsetMask::EMPTY);
    let mut column: Vec<(u32, usize)> = Vec::with_capacity(config.n());
    for axis in 0..config.d() {
        column.clear();
        column.extend(config.column(axis).enumerate().map(|(j, v)| (v, j)));
        column.sort_unstable();
        let mut mask = 0u32;
        for (i, &(value, j)) in column.iter().enumerate() {
            mask |= 1 << j;
            if column.get(i + 1).is_none_or(|&(next, _)| next != value) {
                set.insert(SubsetMask::new(mask));
            }
        }
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Shattered,
    /// `missing` is the numerically smallest subset no cut realizes.
    NotShattered {
        missing: SubsetMask,
    },
}

impl Verdict {
    pub fn is_shattered(&self) -> bool {
        matches!(self, Verdict::Shattered)
    }
}

pub fn is_shattered(config: &PointConfig) -> Result<Verdict> {
    let realized = realized_subsets(config)?;
    Ok(match realized.first_missing() {
        None => Verdict::Shattered,
        Some(missing) => Verdict::NotShattered { missing },
    })
}

/// Some cut whose trace on `config` is exactly `target`, if one exists.
pub fn realizing_cut(config: &PointConfig, target: SubsetMask) -> Option<CutHypothesis> {
    if target.is_empty() {
        return Some(CutHypothesis::new(0, 0));
    }
    (0..config.d()).find_map(|axis| {
        // The tightest candidate is the largest value inside the target.
        let bound = target.indices().map(|j| config.value(j, axis)).max()? as i64;
        let cut = CutHypothesis::new(axis, bound);
        (cut.trace(config) == target).then_some(cut)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binom;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Every cut that can matter: below all values, and at each column value.
    fn brute_force_traces(config: &PointConfig) -> BTreeSet<SubsetMask> {
        let mut out = BTreeSet::new();
        for axis in 0..config.d() {
            for bound in 0..=config.n() as i64 + 1 {
                out.insert(CutHypothesis::new(axis, bound).trace(config));
            }
        }
        out
    }

    fn single_column(values: &[i64]) -> PointConfig {
        let rows: Vec<Vec<i64>> = values.iter().map(|&v| vec![v]).collect();
        PointConfig::from_rows(&rows).unwrap()
    }

    fn masks(sets: &[&[usize]]) -> Vec<SubsetMask> {
        sets.iter()
            .map(|s| SubsetMask::from_indices(s.iter().map(|i| i - 1)))
            .collect()
    }

    #[test]
    fn strict_column_prefixes() {
        let got: Vec<_> = realized_subsets(&single_column(&[1, 2, 3]))
            .unwrap()
            .iter()
            .collect();
        let mut want = masks(&[&[], &[1], &[1, 2], &[1, 2, 3]]);
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn ties_enter_together() {
        let got: Vec<_> = realized_subsets(&single_column(&[1, 1]))
            .unwrap()
            .iter()
            .collect();
        assert_eq!(got, masks(&[&[], &[1, 2]]));
    }

    #[test]
    fn larger_point_cannot_be_isolated() {
        let verdict = is_shattered(&single_column(&[1, 2])).unwrap();
        assert_eq!(
            verdict,
            Verdict::NotShattered {
                missing: SubsetMask::from_indices([1])
            }
        );
        assert_eq!(verdict_string(verdict), "{2}");
    }

    fn verdict_string(v: Verdict) -> String {
        match v {
            Verdict::Shattered => String::new(),
            Verdict::NotShattered { missing } => missing.to_string(),
        }
    }

    #[test]
    fn three_points_in_plane_never_shattered() {
        // All 27^2 value assignments in 1..=3 for two coordinates.
        let mut rows = vec![vec![0i64; 2]; 3];
        for code in 0..729u32 {
            let mut c = code;
            for row in rows.iter_mut() {
                for v in row.iter_mut() {
                    *v = (c % 3) as i64 + 1;
                    c /= 3;
                }
            }
            let cfg = PointConfig::from_rows(&rows).unwrap();
            let realized = realized_subsets(&cfg).unwrap();
            assert!(!is_shattered(&cfg).unwrap().is_shattered());
            // C(3,1) - 2 = 1 singleton must be missing.
            assert!(realized.missing_of_size(1) >= 1);
        }
    }

    #[test]
    fn first_missing_edges() {
        let mut set = MaskSet::new(7);
        for m in 0..128 {
            set.insert(SubsetMask::new(m));
        }
        assert!(set.is_complete());
        assert_eq!(set.first_missing(), None);
        let mut set = MaskSet::new(2);
        set.insert(SubsetMask::new(0));
        set.insert(SubsetMask::new(1));
        set.insert(SubsetMask::new(3));
        assert_eq!(set.first_missing(), Some(SubsetMask::new(2)));
        assert!(!set.contains(SubsetMask::new(9)));
    }

    #[test]
    fn realizing_cut_agrees_with_census() {
        let cfg = crate::shattering::build_chain_config(5, 7).unwrap();
        let realized = realized_subsets(&cfg).unwrap();
        for m in 0..32 {
            let mask = SubsetMask::new(m);
            match realizing_cut(&cfg, mask) {
                Some(cut) => {
                    assert!(realized.contains(mask));
                    assert_eq!(cut.trace(&cfg), mask);
                }
                None => assert!(!realized.contains(mask)),
            }
        }
    }

    #[test]
    fn rejects_more_than_24_points() {
        let n = 25;
        let cfg = PointConfig::new(n, 1, (1..=n as u32).collect()).unwrap();
        assert!(realized_subsets(&cfg).is_err());
        assert!(is_shattered(&cfg).is_err());
    }

    fn arb_config(max_n: usize, max_d: usize) -> impl Strategy<Value = PointConfig> {
        (1..=max_n, 1..=max_d).prop_flat_map(|(n, d)| {
            proptest::collection::vec(1..=n as u32, n * d)
                .prop_map(move |coords| PointConfig::new(n, d, coords).unwrap())
        })
    }

    proptest! {
        #[test]
        fn census_matches_brute_force(cfg in arb_config(8, 6)) {
            let fast: BTreeSet<_> = realized_subsets(&cfg).unwrap().iter().collect();
            prop_assert_eq!(fast, brute_force_traces(&cfg));
        }

        #[test]
        fn tie_refinement_only_adds(cfg in arb_config(9, 5)) {
            let coarse = realized_subsets(&cfg).unwrap();
            let fine = realized_subsets(&cfg.refine_ties()).unwrap();
            for m in coarse.iter() {
                prop_assert!(fine.contains(m));
            }
        }

        #[test]
        fn per_coordinate_bound(cfg in arb_config(10, 8)) {
            let count = realized_subsets(&cfg).unwrap().len();
            prop_assert!(count <= cfg.d() * (cfg.n() - 1) + 2);
        }

        #[test]
        fn counting_argument(cfg in arb_config(10, 12)) {
            let n = cfg.n() as u64;
            let p = n / 2;
            let central: u64 = binom(n, p).try_into().unwrap();
            prop_assume!(central > cfg.d() as u64);
            let realized = realized_subsets(&cfg).unwrap();
            prop_assert!(!realized.is_complete());
            prop_assert!(realized.missing_of_size(p as u32) as u64 >= central - cfg.d() as u64);
            prop_assert!(!is_shattered(&cfg).unwrap().is_shattered());
        }

        #[test]
        fn witness_is_smallest_missing(cfg in arb_config(7, 4)) {
            let traces = brute_force_traces(&cfg);
            let expected = (0..1u32 << cfg.n()).map(SubsetMask::new).find(|m| !traces.contains(m));
            let got = match is_shattered(&cfg).unwrap() {
                Verdict::Shattered => None,
                Verdict::NotShattered { missing } => Some(missing),
            };
            prop_assert_eq!(got, expected);
        }
    }
}
