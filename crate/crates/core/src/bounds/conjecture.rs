//! Conjectured bound for generator-regular codes from the EXIT function of a
//! repetition code over BSC(`D`):
//!
//! ```text
//! R >= (1 - h(D)) / (1 - sum_i C(l,i) (1-D)^i D^{l-i} log2(1 + (D/(1-D))^{2i-l}))
//! ```
//!
//! It would follow if full source entropy under the test channel were
//! necessary for distortion `D`. That has not been shown, so this is NOT a
//! proven bound.

use crate::error::{Error, Result};
use crate::numerics::{bisect_threshold, check_unit, entropy_deficit_near_half};

/// `1 - log2(1 + c^k) = -log2((1 + c^k)/2)` for `0 < c < 1`, accurate when
/// `c` is close to one.
fn one_minus_log2_one_plus_pow(lnc: f64, k: i32) -> f64 {
    -(0.5 * (k as f64 * lnc).exp_m1()).ln_1p() / std::f64::consts::LN_2
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// The conjectured rate lower bound at distortion `d`.
pub fn conjectured_exit_rate(l: u32, d: f64) -> Result<f64> {
    if l == 0 {
        return Err(Error::domain("l", 0.0, "positive integers"));
    }
    if !(d > 0.0 && d < 0.5) {
        return Err(Error::domain("D", d, "(0, 1/2)"));
    }
    // the weights sum to one, so 1 - sum w_i log2(1 + c^k_i) = sum w_i (1 - log2(1 + c^k_i))
    let lnc = (d / (1.0 - d)).ln();
    let den: f64 = (0..=l)
        .map(|i| {
            binomial(l, i)
                * (1.0 - d).powi(i as i32)
                * d.powi((l - i) as i32)
                * one_minus_log2_one_plus_pow(lnc, 2 * i as i32 - l as i32)
        })
        .sum();
    Ok(entropy_deficit_near_half(0.5 - d) / den)
}

/// Smallest distortion the conjectured bound allows at `rate`; `1/2` when
/// none below `1/2` qualifies (the conjectured curve tends to `R = 1/l` as
/// `D -> 1/2`).
pub fn conjectured_exit_distortion(l: u32, rate: f64) -> Result<f64> {
    if l == 0 {
        return Err(Error::domain("l", 0.0, "positive integers"));
    }
    check_unit("rate", rate)?;
    if rate >= 1.0 {
        return Ok(0.0);
    }
    if rate == 0.0 {
        return Ok(0.5);
    }
    Ok(bisect_threshold(
        |d| d >= 0.5 || matches!(conjectured_exit_rate(l, d), Ok(b) if b <= rate),
        0.0,
        0.5,
        1e-13,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::h2;

    #[test]
    fn tends_to_one_at_zero_distortion() {
        for l in 1..=4 {
            let v = conjectured_exit_rate(l, 1e-9).unwrap();
            assert!((v - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn degree_one_is_identically_one() {
        // two terms: D log2(1 + (1-D)/D) + (1-D) log2(1 + D/(1-D)) = h(D)
        for k in 1..50 {
            let d = k as f64 / 100.0;
            let hand = d * (1.0 + (1.0 - d) / d).log2() + (1.0 - d) * (1.0 + d / (1.0 - d)).log2();
            assert!((hand - h2(d)).abs() < 1e-12);
            assert!((conjectured_exit_rate(1, d).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn above_shannon_with_denominator_at_most_one() {
        let v = conjectured_exit_rate(2, 0.11).unwrap();
        assert!(v.is_finite());
        assert!(v >= 1.0 - h2(0.11));
        for l in 1..=5 {
            for k in 1..50 {
                let d = k as f64 / 100.0;
                let v = conjectured_exit_rate(l, d).unwrap();
                assert!(v >= 1.0 - h2(d) - 1e-15);
            }
        }
    }

    #[test]
    fn decreasing_in_distortion() {
        for l in 2..=4 {
            let mut prev = f64::INFINITY;
            for k in 1..100 {
                let v = conjectured_exit_rate(l, k as f64 / 200.0).unwrap();
                assert!(v < prev);
                prev = v;
            }
            assert!((prev - 1.0 / l as f64).abs() < 1e-3);
        }
    }

    #[test]
    fn inversion() {
        let d = conjectured_exit_distortion(2, 0.7).unwrap();
        assert!((conjectured_exit_rate(2, d).unwrap() - 0.7).abs() < 1e-9);
        assert_eq!(conjectured_exit_distortion(2, 0.4).unwrap(), 0.5);
        assert_eq!(conjectured_exit_distortion(2, 1.0).unwrap(), 0.0);
    }
}
