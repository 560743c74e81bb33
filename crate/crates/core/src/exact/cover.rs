//! Covering profile of a code: for every source word, the Hamming distance
//! to its nearest codeword.

use crate::error::{Error, Result};
use crate::numerics::check_unit;

use super::code::LdgmCode;
use super::enumerator::{check_generator_budget, for_each_codeword};

/// Largest blocklength for which the `2^m` distance table is built.
pub const MAX_COVER_BLOCKLENGTH: usize = 26;

/// `histogram[d]` = number of source words whose nearest codeword is at
/// distance exactly `d`. Sums to `2^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProfile {
    m: usize,
    histogram: Vec<u64>,
}

impl CoverProfile {
    pub fn from_histogram(m: usize, histogram: Vec<u64>) -> Result<Self> {
        if histogram.len() != m + 1 {
            return Err(Error::LengthMismatch {
                expected: m + 1,
                got: histogram.len(),
            });
        }
        let total: u128 = histogram.iter().map(|&c| c as u128).sum();
        if m >= 128 || total != 1u128 << m {
            return Err(Error::Infeasible(format!(
                "histogram sums to {total}, not 2^{m}"
            )));
        }
        Ok(CoverProfile { m, histogram })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn histogram(&self) -> &[u64] {
        &self.histogram
    }

    /// Largest nearest-codeword distance (the covering radius).
    pub fn covering_radius(&self) -> usize {
        self.histogram.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// Ball radius `floor(d m)` used for distortion `d`. A `1e-9` guard
    /// absorbs float error in `d m` (e.g. `0.29 * 100`).
    pub fn radius_for(&self, d: f64) -> usize {
        ((d * self.m as f64 + 1e-9).floor() as usize).min(self.m)
    }

    /// `|C(radius)|`: source words within `radius` of some codeword.
    pub fn covered_count(&self, radius: usize) -> u64 {
        self.histogram[..=radius.min(self.m)].iter().sum()
    }

    /// `2^{-m} |C(d)|`.
    pub fn covered_fraction(&self, d: f64) -> Result<f64> {
        check_unit("d", d)?;
        Ok(self.covered_count(self.radius_for(d)) as f64 / self.size() as f64)
    }

    /// Sum over source words of the distance to the nearest codeword.
    pub fn total_distance(&self) -> u128 {
        self.histogram
            .iter()
            .enumerate()
            .map(|(d, &c)| d as u128 * c as u128)
            .sum()
    }

    /// `(1/m) E[distance to nearest codeword]` for a uniform source word.
    pub fn average_distortion(&self) -> f64 {
        self.total_distance() as f64 / (self.m as f64 * self.size() as f64)
    }

    fn size(&self) -> u64 {
        1u64 << self.m
    }
}

/// Nearest-codeword distance of every source word, aggregated per distance.
///
/// Seeds distance 0 at every codeword, then relaxes one coordinate at a
/// time: after pass `j`, `dist[s]` is the least distance to a codeword that
/// agrees with `s` outside coordinates `0..=j`. Hamming distance is a sum
/// over coordinates, so `m` passes give exact distances in `O(m 2^m)`.
pub fn distance_transform(code: &LdgmCode) -> Result<CoverProfile> {
    let m = code.m();
    if m > MAX_COVER_BLOCKLENGTH {
        return Err(Error::Budget {
            what: "m",
            value: m,
            limit: MAX_COVER_BLOCKLENGTH,
        });
    }
    check_generator_budget(code)?;
    let masks = code.generator_masks()?;
    let size = 1usize << m;
    let mut dist = vec![u8::MAX; size];
    for_each_codeword(&masks, |c| dist[c as usize] = 0);

    for j in 0..m {
        let bit = 1usize << j;
        for block in dist.chunks_exact_mut(2 * bit) {
            let (lo, hi) = block.split_at_mut(bit);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (da, db) = (*a, *b);
                *a = da.min(db.saturating_add(1));
                *b = db.min(da.saturating_add(1));
            }
        }
    }

    let mut histogram = vec![0u64; m + 1];
    for &d in &dist {
        histogram[d as usize] += 1;
    }
    Ok(CoverProfile { m, histogram })
}

/// Exact minimum of `(1/m) E[d(S, decode(encode(S)))]` over all encoders:
/// each source word is mapped to its nearest codeword.
pub fn optimal_average_distortion(code: &LdgmCode) -> Result<f64> {
    Ok(distance_transform(code)?.average_distortion())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn zero_code_distances_are_weights() {
        let m = 10;
        let code = LdgmCode::new(m, vec![]).unwrap();
        let p = distance_transform(&code).unwrap();
        for d in 0..=m {
            assert_eq!(p.histogram()[d], binom(m as u64, d as u64));
        }
        assert_eq!(p.average_distortion(), 0.5);
        assert_eq!(p.covered_fraction(1.0).unwrap(), 1.0);
        assert_eq!(p.covered_fraction(0.0).unwrap(), 1.0 / 1024.0);
        // binomial tail at radius floor(0.35 * 10) = 3
        let tail: u64 = (0..=3).map(|i| binom(10, i)).sum();
        assert_eq!(p.covered_fraction(0.35).unwrap(), tail as f64 / 1024.0);
    }

    #[test]
    fn full_space_code() {
        let code = LdgmCode::new(4, (0..4).map(|j| vec![j]).collect()).unwrap();
        let p = distance_transform(&code).unwrap();
        assert_eq!(p.histogram(), &[16, 0, 0, 0, 0]);
        assert_eq!(p.average_distortion(), 0.0);
        assert_eq!(optimal_average_distortion(&code).unwrap(), 0.0);
    }

    #[test]
    fn fixed_instance_matches_naive() {
        let code = LdgmCode::new(
            7,
            vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6], vec![0, 3, 6]],
        )
        .unwrap();
        let masks = code.generator_masks().unwrap();
        let mut words = Vec::new();
        for_each_codeword(&masks, |c| words.push(c));
        let mut naive = vec![0u64; 8];
        for s in 0u64..128 {
            let d = words.iter().map(|&c| (s ^ c).count_ones()).min().unwrap();
            naive[d as usize] += 1;
        }
        assert_eq!(
            distance_transform(&code).unwrap().histogram(),
            naive.as_slice()
        );
    }

    #[test]
    fn covered_fraction_at_zero_counts_distinct_codewords() {
        let code = LdgmCode::new(4, vec![vec![0, 1], vec![0, 1], vec![2]]).unwrap();
        let p = distance_transform(&code).unwrap();
        // distinct codewords: 0, {0,1}, {2}, {0,1,2}
        assert_eq!(p.covered_fraction(0.0).unwrap(), 4.0 / 16.0);
    }

    #[test]
    fn budgets() {
        let code = LdgmCode::new(27, vec![]).unwrap();
        assert!(matches!(
            distance_transform(&code),
            Err(Error::Budget { .. })
        ));
        let code = LdgmCode::new(20, vec![vec![0]; 25]).unwrap();
        assert!(matches!(
            distance_transform(&code),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn histogram_validation() {
        assert!(CoverProfile::from_histogram(2, vec![1, 2, 1]).is_ok());
        assert!(CoverProfile::from_histogram(2, vec![1, 2, 2]).is_err());
        assert!(CoverProfile::from_histogram(2, vec![4]).is_err());
    }

    #[test]
    fn radius_guard() {
        let p = distance_transform(&LdgmCode::new(10, vec![]).unwrap()).unwrap();
        assert_eq!(p.radius_for(0.3), 3);
        assert_eq!(p.radius_for(0.29), 2);
        assert_eq!(p.radius_for(1.0), 10);
    }
}
