//! Rate-distortion bound families and sampled curves.
//!
//! Every bound is a lower bound on the distortion achievable at a given rate
//! (equivalently, a lower bound on the rate needed for a given distortion):
//!
//! | family | applies to | entry point |
//! |--------|------------|-------------|
//! | Shannon | any code | [`shannon_distortion`] |
//! | counting | any code with generator degree law `L` | [`counting_bound_distortion`] |
//! | test channel | any generator-regular code | [`test_channel_rate_bound`] |
//! | DWR | left-Poisson ensembles, check degree `r` | [`dwr_rate_boundary`] |
//! | conjectured EXIT | unproven | [`conjectured_exit_rate`] |
//!
//! The last family is unproven. [`BoundSpec::is_conjecture`] flags it so
//! downstream output can label it.

mod conjecture;
mod counting;
mod dwr;
mod test_channel;

pub use conjecture::{conjectured_exit_distortion, conjectured_exit_rate};
pub use counting::{
    counting_bound_distortion, counting_endpoints, d_hat, g_exponent, r_hat, solve_x_of_rate,
    CountingEndpoints, GExponent,
};
pub use dwr::{dwr_distortion_bound, dwr_rate_boundary};
pub use test_channel::{
    test_channel_distortion_bound, test_channel_optimum, test_channel_rate_bound,
    test_channel_weak_bound, TestChannelOptimum,
};

use std::fmt;

use crate::degree::DegreeSpec;
use crate::error::{Error, Result};
use crate::numerics::{check_unit, inverse_binary_entropy};

/// A `(D, R)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint {
    pub distortion: f64,
    pub rate: f64,
}

impl RatePoint {
    pub fn new(distortion: f64, rate: f64) -> Self {
        RatePoint { distortion, rate }
    }
}

/// Distortion of the Shannon rate-distortion curve, `h^{-1}(1 - R)`.
pub fn shannon_distortion(rate: f64) -> Result<f64> {
    check_unit("rate", rate)?;
    inverse_binary_entropy(1.0 - rate)
}

/// Which bound to sample, with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundSpec {
    Shannon,
    Counting(DegreeSpec),
    TestChannel { l: u32 },
    Dwr { r: u32 },
    ConjecturedExit { l: u32 },
}

impl BoundSpec {
    /// Short name used on the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            BoundSpec::Shannon => "shannon",
            BoundSpec::Counting(_) => "counting",
            BoundSpec::TestChannel { .. } => "test-channel",
            BoundSpec::Dwr { .. } => "dwr",
            BoundSpec::ConjecturedExit { .. } => "conjecture",
        }
    }

    pub fn is_conjecture(&self) -> bool {
        matches!(self, BoundSpec::ConjecturedExit { .. })
    }

    /// The bound's distortion at `rate`.
    pub fn distortion_at(&self, rate: f64) -> Result<f64> {
        check_unit("rate", rate)?;
        match self {
            BoundSpec::Shannon => shannon_distortion(rate),
            BoundSpec::Counting(spec) => {
                if rate == 0.0 {
                    // no generators: every source bit is a coin flip
                    return Ok(0.5);
                }
                counting_bound_distortion(&spec.resolve(rate)?, rate)
            }
            BoundSpec::TestChannel { l } => test_channel_distortion_bound(*l, rate),
            BoundSpec::Dwr { r } => dwr_distortion_bound(*r, rate),
            BoundSpec::ConjecturedExit { l } => conjectured_exit_distortion(*l, rate),
        }
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSpec::Shannon => write!(f, "shannon"),
            BoundSpec::Counting(spec) => write!(f, "counting degrees={spec}"),
            BoundSpec::TestChannel { l } => write!(f, "test-channel l={l}"),
            BoundSpec::Dwr { r } => write!(f, "dwr r={r}"),
            BoundSpec::ConjecturedExit { l } => write!(f, "conjecture l={l}"),
        }
    }
}

/// A bound sampled on a rate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub spec: BoundSpec,
    /// Points in ascending rate order, distortion non-increasing.
    pub points: Vec<RatePoint>,
    /// Parametric endpoints, for counting bounds with a rate-independent
    /// degree distribution.
    pub endpoints: Option<CountingEndpoints>,
}

/// Slack allowed when checking that a sampled curve is monotone.
const MONOTONE_SLACK: f64 = 1e-12;

/// Evaluates `spec` at every rate of an ascending grid in `[0, 1]`.
pub fn sample_curve(spec: &BoundSpec, rate_grid: &[f64]) -> Result<BoundCurve> {
    for &r in rate_grid {
        check_unit("rate", r)?;
    }
    if rate_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::NotMonotone("rate grid"));
    }
    let points = rate_grid
        .iter()
        .map(|&rate| Ok(RatePoint::new(spec.distortion_at(rate)?, rate)))
        .collect::<Result<Vec<_>>>()?;
    if points
        .windows(2)
        .any(|w| w[1].distortion > w[0].distortion + MONOTONE_SLACK)
    {
        return Err(Error::NotMonotone("bound curve"));
    }
    let endpoints = match spec {
        BoundSpec::Counting(ds) if ds.is_fixed() => Some(counting_endpoints(&ds.resolve(1.0)?)?),
        _ => None,
    };
    Ok(BoundCurve {
        spec: spec.clone(),
        points,
        endpoints,
    })
}

/// `steps` equally spaced rates from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    check_unit("rate-min", min)?;
    check_unit("rate-max", max)?;
    if min >= max {
        return Err(Error::domain("rate-min", min, "values below rate-max"));
    }
    if steps < 2 {
        return Err(Error::domain("steps", steps as f64, "integers >= 2"));
    }
    let span = max - min;
    Ok((0..steps)
        .map(|k| {
            if k + 1 == steps {
                max
            } else {
                min + span * k as f64 / (steps - 1) as f64
            }
        })
        .collect())
}
