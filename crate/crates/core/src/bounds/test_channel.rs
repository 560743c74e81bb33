//! Test-channel bound for generator-regular codes, `L(x) = x^l`.
//!
//! A uniformly random codeword passed through a BSC(`D'`) puts at least
//! `2^{-m(R + h(D) + KL(D||D') - R log2(1 + c^l))}` mass (up to a factor `m`)
//! on every covered source word, `c = D'/(1-D')`. Since the mass sums to at
//! most one, distortion `D` needs
//!
//! ```text
//! R >= sup_{D <= D' <= 1/2} (1 - h(D) - KL(D||D')) / (1 - log2(1 + c^l)).
//! ```

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::numerics::{bisect_threshold, check_unit, grid_golden_min, h2};

const GRID_POINTS: usize = 257;

/// The supremum and the flip probability attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestChannelOptimum {
    pub rate: f64,
    pub flip_probability: f64,
}

impl TestChannelOptimum {
    /// Residual of the first-order condition for an interior optimum,
    /// `D' = 1 / (1 + (R l / (D' - D) - 1)^{1/l})`.
    pub fn stationarity_residual(&self, l: u32, d: f64) -> f64 {
        let dp = self.flip_probability;
        let ratio = self.rate * l as f64 / (dp - d) - 1.0;
        dp - 1.0 / (1.0 + ratio.powf(1.0 / l as f64))
    }
}

/// Ratio for a single flip probability `dp` in `[d, 1/2]`.
///
/// Numerator `1 - h(D) - KL(D||D') = D log2(2D') + (1-D) log2(2(1-D'))`,
/// denominator `-log2((1 + c^l)/2)`. Both vanish at `D' = 1/2`, where the
/// ratio tends to `(1 - 2D)/l`.
fn ratio(l: u32, d: f64, dp: f64) -> f64 {
    if dp >= 0.5 {
        return (1.0 - 2.0 * d) / l as f64;
    }
    let eps = 0.5 - dp;
    let mut num = (1.0 - d) * (2.0 * eps).ln_1p();
    if d > 0.0 {
        num += d * (-2.0 * eps).ln_1p();
    }
    let lnc = (dp / (1.0 - dp)).ln();
    let den = -(0.5 * (l as f64 * lnc).exp_m1()).ln_1p();
    // both carry a 1/ln 2 factor
    num / den
}

fn check_args(l: u32, d: f64) -> Result<()> {
    if l == 0 {
        return Err(Error::domain("l", 0.0, "positive integers"));
    }
    if !(0.0..=0.5).contains(&d) {
        return Err(Error::domain("D", d, "[0, 1/2]"));
    }
    Ok(())
}

pub fn test_channel_optimum(l: u32, d: f64) -> Result<TestChannelOptimum> {
    check_args(l, d)?;
    if d == 0.5 {
        return Ok(TestChannelOptimum {
            rate: 0.0,
            flip_probability: 0.5,
        });
    }
    let span = 0.5 - d;
    let grid: Vec<f64> = (0..GRID_POINTS)
        .map(|k| d + span * k as f64 / (GRID_POINTS - 1) as f64)
        .collect();
    let (dp, neg) = grid_golden_min(|dp| -ratio(l, d, dp), &grid, 1e-14);
    Ok(TestChannelOptimum {
        rate: -neg,
        flip_probability: dp,
    })
}

/// Smallest rate compatible with distortion `d` for generator degree `l`.
pub fn test_channel_rate_bound(l: u32, d: f64) -> Result<f64> {
    Ok(test_channel_optimum(l, d)?.rate)
}

/// The bound with `D' = D`: `(1 - h(D)) / (1 - log2(1 + (D/(1-D))^l))`.
pub fn test_channel_weak_bound(l: u32, d: f64) -> Result<f64> {
    check_args(l, d)?;
    if d == 0.5 {
        return Ok(0.0);
    }
    let lnc = (d / (1.0 - d)).ln();
    let den = -(0.5 * (l as f64 * lnc).exp_m1()).ln_1p() / LN_2;
    Ok((1.0 - h2(d)) / den)
}

/// Largest `d` with `test_channel_rate_bound(l, d) >= rate`: the test-channel
/// lower bound on distortion at `rate`.
pub fn test_channel_distortion_bound(l: u32, rate: f64) -> Result<f64> {
    check_args(l, 0.0)?;
    check_unit("rate", rate)?;
    if rate >= 1.0 {
        return Ok(0.0);
    }
    if rate <= 0.0 {
        return Ok(0.5);
    }
    Ok(bisect_threshold(
        |d| test_channel_rate_bound(l, d).map_or(true, |r| r < rate),
        0.0,
        0.5,
        1e-13,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::kl_bernoulli;

    #[test]
    fn ratio_matches_direct_formula() {
        for &(l, d, dp) in &[
            (2u32, 0.1, 0.2),
            (3, 0.05, 0.3),
            (1, 0.2, 0.25),
            (2, 0.0, 0.1),
        ] {
            let c: f64 = dp / (1.0 - dp);
            let num = 1.0 - h2(d) - kl_bernoulli(d, dp).unwrap();
            let den = 1.0 - (1.0 + c.powi(l as i32)).log2();
            assert!((ratio(l, d, dp) - num / den).abs() < 1e-12);
        }
    }

    #[test]
    fn ratio_limit_at_half() {
        let (l, d) = (2, 0.1);
        let near = ratio(l, d, 0.5 - 1e-7);
        assert!((near - ratio(l, d, 0.5)).abs() < 1e-6);
    }

    #[test]
    fn zero_distortion_needs_full_rate() {
        for l in 1..=4 {
            // for l = 1 the ratio is identically 1, so only roundoff separates D' values
            assert!((test_channel_rate_bound(l, 0.0).unwrap() - 1.0).abs() < 1e-12);
            assert_eq!(test_channel_distortion_bound(l, 1.0).unwrap(), 0.0);
            assert_eq!(test_channel_distortion_bound(l, 0.0).unwrap(), 0.5);
        }
        assert_eq!(test_channel_rate_bound(2, 0.5).unwrap(), 0.0);
    }

    #[test]
    fn supremum_dominates_weak_form() {
        for l in 1..=4 {
            for k in 1..50 {
                let d = k as f64 / 100.0;
                let sup = test_channel_rate_bound(l, d).unwrap();
                let weak = test_channel_weak_bound(l, d).unwrap();
                assert!(sup >= weak - 1e-15);
                if l > 1 {
                    assert!(weak > 1.0 - h2(d));
                }
            }
        }
    }

    #[test]
    fn interior_optimum_is_stationary() {
        for &(l, d) in &[(2u32, 0.1), (2, 0.05), (3, 0.08), (3, 0.15)] {
            let opt = test_channel_optimum(l, d).unwrap();
            assert!(opt.flip_probability > d && opt.flip_probability < 0.5);
            assert!(opt.stationarity_residual(l, d).abs() < 1e-6);
        }
    }

    #[test]
    fn regular2_half_rate() {
        let d = test_channel_distortion_bound(2, 0.5).unwrap();
        assert!((d - 0.115).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(test_channel_rate_bound(0, 0.1).is_err());
        assert!(test_channel_rate_bound(2, 0.6).is_err());
        assert!(test_channel_distortion_bound(2, -0.1).is_err());
    }
}
