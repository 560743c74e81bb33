//! The DWR ensemble bound for left-Poisson LDGM codes with check degree `r`:
//! with high probability
//! `R (1 - e^{-(1-D) r / R}) >= 1 - h(D)`.

use crate::error::{Error, Result};
use crate::numerics::{bisect_monotone, bisect_threshold, check_unit, entropy_deficit_near_half};

fn lhs(r: u32, d: f64, rate: f64) -> f64 {
    if rate <= 0.0 {
        return 0.0;
    }
    rate * -(-(1.0 - d) * r as f64 / rate).exp_m1()
}

/// Smallest rate satisfying the DWR inequality at distortion `d`.
///
/// The left side is increasing in `R`, so the boundary is the root of
/// `R (1 - e^{-(1-D) r / R}) = 1 - h(D)`.
pub fn dwr_rate_boundary(r: u32, d: f64) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("r", 0.0, "positive integers"));
    }
    if !(d > 0.0 && d < 0.5) {
        return Err(Error::domain("D", d, "(0, 1/2)"));
    }
    let target = entropy_deficit_near_half(0.5 - d);
    if lhs(r, d, 1.0) < target {
        return Err(Error::NoSolution(d));
    }
    bisect_monotone(|rate| lhs(r, d, rate), 0.0, 1.0, target, 1e-15)
}

/// Smallest distortion the DWR inequality allows at `rate`; `1/2` when no
/// distortion below `1/2` qualifies.
pub fn dwr_distortion_bound(r: u32, rate: f64) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("r", 0.0, "positive integers"));
    }
    check_unit("rate", rate)?;
    if rate == 0.0 {
        return Ok(0.5);
    }
    Ok(bisect_threshold(
        |d| d >= 0.5 || matches!(dwr_rate_boundary(r, d), Ok(b) if b <= rate),
        0.0,
        0.5,
        1e-13,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::h2;

    /// Fixed-point iteration `R <- (1 - h(D)) / (1 - e^{-(1-D) r / R})`,
    /// started at `R = 1`. Independent of the bisection solver.
    fn fixed_point(r: u32, d: f64) -> f64 {
        let t = 1.0 - h2(d);
        let mut rate = 1.0;
        for _ in 0..10_000 {
            let next = t / (1.0 - (-(1.0 - d) * r as f64 / rate).exp());
            if (next - rate).abs() < 1e-15 {
                return next;
            }
            rate = next;
        }
        rate
    }

    #[test]
    fn two_solvers_agree() {
        for &(r, d) in &[(4u32, 0.05), (2, 0.1), (2, 0.2), (6, 0.01), (3, 0.3)] {
            let a = dwr_rate_boundary(r, d).unwrap();
            let b = fixed_point(r, d);
            assert!((a - b).abs() < 1e-8, "r = {r}, d = {d}: {a} vs {b}");
        }
    }

    #[test]
    fn boundary_exceeds_shannon_and_tends_to_it() {
        for k in 1..50 {
            let d = k as f64 / 100.0;
            if let Ok(b) = dwr_rate_boundary(2, d) {
                assert!(b >= 1.0 - h2(d) - 1e-15);
                // beyond this the exponential term is below f64 resolution
                if d <= 0.3 {
                    assert!(b > 1.0 - h2(d));
                }
            }
        }
        let d = 0.1;
        let b = dwr_rate_boundary(40, d).unwrap();
        assert!((b - (1.0 - h2(d))).abs() < 1e-12);
    }

    #[test]
    fn no_solution_at_small_distortion() {
        // R = 1 gives 1 - e^{-(1-D) r} < 1 - h(D) for tiny D and small r
        assert!(matches!(
            dwr_rate_boundary(1, 1e-6),
            Err(Error::NoSolution(_))
        ));
        assert!(dwr_rate_boundary(2, 0.5).is_err());
        assert!(dwr_rate_boundary(0, 0.1).is_err());
    }

    #[test]
    fn distortion_bound_inverts_boundary() {
        for &rate in &[0.4, 0.6, 0.9] {
            let d = dwr_distortion_bound(2, rate).unwrap();
            let b = dwr_rate_boundary(2, d).unwrap();
            assert!((b - rate).abs() < 1e-9);
        }
        assert_eq!(dwr_distortion_bound(2, 0.0).unwrap(), 0.5);
    }
}
