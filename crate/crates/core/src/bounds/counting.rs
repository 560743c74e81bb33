//! The counting bound.
//!
//! `|C(D)|`, the number of source words within distance `Dm` of the code, is
//! at most `2^{m g(D, R)}`. Wherever `g < 1` the covered fraction vanishes
//! and the distortion is at least `D`. Setting `g = 1` at its stationary
//! point `x/(1+x) = D + R a(x)` gives the parametric curve
//!
//! ```text
//! R^(x) = (1 - h(x/(1+x))) / (1 - log2(f(x) / x^{a(x)}))
//! D^(x) = x/(1+x) - a(x) R^(x)
//! ```
//!
//! used for `R >= 1/L'`. Below `1/L'` at least a fraction `1 - R L'` of the
//! source bits touch no generator, which gives the straight line from
//! `(1/2, 0)` to the curve point at `R = 1/L'`.

use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};
use crate::numerics::{
    bisect_monotone, check_unit, entropy_deficit_near_half, grid_golden_min, h2,
};

use super::RatePoint;

/// Number of cells used to check that `R^` is monotone before inverting it.
const MONOTONE_CHECK_CELLS: usize = 64;

fn check_x(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain("x", x, "[0, 1]"))
    }
}

/// `R^(x)`. The endpoints are the analytic limits: `1 / (1 - L_0)` at
/// `x = 0` and `1 / sum_i i^2 L_i` at `x = 1`.
pub fn r_hat(dist: &DegreeDistribution, x: f64) -> Result<f64> {
    check_x(x)?;
    if x == 1.0 {
        let m2 = dist.second_moment();
        if m2 == 0.0 {
            return Err(Error::Singular("R^", x));
        }
        return Ok(1.0 / m2);
    }
    let den = dist.exponent_deficit_unchecked(x);
    if den <= 0.0 {
        return Err(Error::Singular("R^", x));
    }
    // x/(1+x) = 1/2 - delta
    let delta = (1.0 - x) / (2.0 * (1.0 + x));
    Ok(entropy_deficit_near_half(delta) / den)
}

/// `D^(x) = x/(1+x) - a(x) R^(x)`.
pub fn d_hat(dist: &DegreeDistribution, x: f64) -> Result<f64> {
    let r = r_hat(dist, x)?;
    Ok(x / (1.0 + x) - dist.a_unchecked(x) * r)
}

/// The two ends of the parametric curve and, when `L' > 1`, the point at
/// `R = 1/L'` where the straight-line portion joins it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingEndpoints {
    /// `x = 0`
    pub start: RatePoint,
    /// `x = 1`
    pub end: RatePoint,
    pub junction: Option<RatePoint>,
}

pub fn counting_endpoints(dist: &DegreeDistribution) -> Result<CountingEndpoints> {
    let at = |x: f64| -> Result<RatePoint> {
        Ok(RatePoint::new(d_hat(dist, x)?.max(0.0), r_hat(dist, x)?))
    };
    let l_avg = dist.average_degree();
    let junction = if l_avg > 1.0 {
        let x = solve_x_of_rate(dist, 1.0 / l_avg)?;
        Some(RatePoint::new(d_hat(dist, x)?, 1.0 / l_avg))
    } else {
        None
    };
    Ok(CountingEndpoints {
        start: at(0.0)?,
        end: at(1.0)?,
        junction,
    })
}

/// The `x` in `[0, 1]` with `R^(x) = rate`, for `1/L' <= rate <= 1`.
///
/// `R^` is checked to be decreasing on a grid first; a non-monotone `R^`
/// is reported rather than inverted.
pub fn solve_x_of_rate(dist: &DegreeDistribution, rate: f64) -> Result<f64> {
    let l_avg = dist.average_degree();
    if l_avg <= 1.0 {
        return Err(Error::domain(
            "average degree",
            l_avg,
            "(1, inf) for the parametric curve",
        ));
    }
    let lo_rate = 1.0 / l_avg;
    if !(rate >= lo_rate - 1e-12 && rate <= 1.0) {
        return Err(Error::domain("rate", rate, "[1/L', 1]"));
    }
    let mut prev = r_hat(dist, 0.0)?;
    for k in 1..=MONOTONE_CHECK_CELLS {
        let v = r_hat(dist, k as f64 / MONOTONE_CHECK_CELLS as f64)?;
        if v > prev + 1e-13 {
            return Err(Error::NotMonotone("R^"));
        }
        prev = v;
    }
    bisect_monotone(
        |x| r_hat(dist, x).unwrap_or(f64::NAN),
        0.0,
        1.0,
        rate,
        1e-15,
    )
}

/// Lower bound on the distortion of any code with generator degree law
/// `dist` at `rate`.
pub fn counting_bound_distortion(dist: &DegreeDistribution, rate: f64) -> Result<f64> {
    check_unit("rate", rate)?;
    let l_avg = dist.average_degree();
    if l_avg <= 1.0 {
        // R^ is identically 1 for L(x) = x: only the straight line remains
        return Ok(0.5 * (1.0 - rate * l_avg));
    }
    if rate >= 1.0 / l_avg {
        let x = solve_x_of_rate(dist, rate)?;
        return Ok(d_hat(dist, x)?.clamp(0.0, 0.5));
    }
    let x = solve_x_of_rate(dist, 1.0 / l_avg)?;
    let knee = x / (1.0 + x) - dist.a_unchecked(x) / l_avg;
    Ok(0.5 * (1.0 - rate * l_avg * (1.0 - 2.0 * knee)))
}

/// Value and minimiser of the covering exponent `g(D, R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GExponent {
    pub value: f64,
    pub minimizer_x: f64,
}

const G_GRID_POINTS: usize = 256;

/// `g(D, R) = inf { R (1 - log2(f(x)/x^{a(x)})) + h(D + a(x) R) : x >= 0, D + a(x) R <= 1/2 }`.
///
/// The derivative of the objective has the sign of `x/(1+x) - (D + R a(x))`,
/// which is nonnegative for `x >= 1` on the feasible set, so the search runs
/// over `[0, min(1, x_max)]`: a log-spaced grid, golden-section refinement of
/// the best cell, then bisection on the stationarity condition when the cell
/// brackets it.
pub fn g_exponent(dist: &DegreeDistribution, d: f64, rate: f64) -> Result<GExponent> {
    if !(0.0..=0.5).contains(&d) {
        return Err(Error::domain("D", d, "[0, 1/2]"));
    }
    check_unit("rate", rate)?;
    let slack = 0.5 - d;
    let occupancy = |x: f64| d + dist.a_unchecked(x) * rate;
    let objective = |x: f64| rate * dist.exponent_deficit_unchecked(x) + h2(occupancy(x).min(0.5));

    let x_hi = if dist.a_unchecked(1.0) * rate <= slack {
        1.0
    } else {
        bisect_monotone(|x| dist.a_unchecked(x) * rate, 0.0, 1.0, slack, 1e-15)?
    };
    if x_hi == 0.0 {
        return Ok(GExponent {
            value: objective(0.0),
            minimizer_x: 0.0,
        });
    }

    let mut grid = Vec::with_capacity(G_GRID_POINTS + 1);
    grid.push(0.0);
    for k in 0..G_GRID_POINTS {
        let e = -12.0 * (1.0 - k as f64 / (G_GRID_POINTS - 1) as f64);
        grid.push(x_hi * 10f64.powf(e));
    }
    let (mut x, mut value) = grid_golden_min(objective, &grid, 1e-14);

    let stationarity = |x: f64| x / (1.0 + x) - occupancy(x);
    let k = grid.partition_point(|&g| g < x);
    if k > 0 && k < grid.len() && x < x_hi {
        let lo = grid[k - 1];
        let hi = if grid[k] > x {
            grid[k]
        } else {
            grid[(k + 1).min(grid.len() - 1)]
        };
        if stationarity(lo) < 0.0 && stationarity(hi) > 0.0 {
            let xs = bisect_monotone(stationarity, lo, hi, 0.0, 1e-16)?;
            let vs = objective(xs);
            if vs <= value + 1e-15 {
                x = xs;
                value = vs.min(value);
            }
        }
    }
    Ok(GExponent {
        value,
        minimizer_x: x,
    })
}
