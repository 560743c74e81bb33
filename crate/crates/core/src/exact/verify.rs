use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::bounds::counting_bound_distortion;
use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};

use super::code::{degree_counts_for, LdgmCode};
use super::cover::distance_transform;
use super::enumerator::{cumulative_generating_counts, lower_bound_at, weight_enumerator};

/// Slack allowed between the exact optimal distortion of a code and the
/// (floating point) counting bound.
pub const BOUND_SLACK: f64 = 1e-9;

/// `E[d]/m >= d (1 - 2^{-m} |C(d)|)` at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverCheck {
    pub d: f64,
    pub radius: usize,
    pub covered_fraction: f64,
    /// `d (1 - covered_fraction)`
    pub lower_bound: f64,
    /// `optimal_distortion - lower_bound`
    pub margin: f64,
    /// Decided in exact rational arithmetic.
    pub pass: bool,
}

/// Cumulative weight enumerator against `N(w)` for `w = 0..=m`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumeratorCheck {
    pub cumulative: Vec<u64>,
    pub lower_bound: Vec<BigUint>,
    pub first_violation: Option<usize>,
}

impl EnumeratorCheck {
    pub fn pass(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub seed: Option<u64>,
    pub m: usize,
    pub n: usize,
    pub degrees: DegreeDistribution,
    pub optimal_distortion: f64,
    pub counting_bound: f64,
    /// `optimal_distortion - counting_bound`
    pub bound_margin: f64,
    pub bound_pass: bool,
    pub cover_checks: Vec<CoverCheck>,
    pub enumerator: EnumeratorCheck,
}

impl VerificationReport {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn cover_pass(&self) -> bool {
        self.cover_checks.iter().all(|c| c.pass)
    }

    pub fn min_cover_margin(&self) -> f64 {
        self.cover_checks
            .iter()
            .map(|c| c.margin)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn passed(&self) -> bool {
        self.bound_pass && self.cover_pass() && self.enumerator.pass()
    }
}

/// Checks one code against the bounds:
///
/// 1. `E[d]/m >= d (1 - 2^{-m}|C(d)|)` at every `d` of `d_grid`, exactly;
/// 2. `sum_{i<=w} A(i) >= N(w)` for every `w`, exactly;
/// 3. optimal distortion `>= counting_bound_distortion(dist, n/m) - 1e-9`.
///
/// The code's generator degrees must realize `dist` exactly.
pub fn verify_code(
    code: &LdgmCode,
    dist: &DegreeDistribution,
    d_grid: &[f64],
) -> Result<VerificationReport> {
    let (m, n) = (code.m(), code.n());
    let counts = degree_counts_for(dist, n)?;
    if n > 0 && counts != code.degree_counts() {
        return Err(Error::Infeasible(format!(
            "code degrees {:?} do not realize L = {dist}",
            code.degree_counts()
        )));
    }

    let profile = distance_transform(code)?;
    let optimal = profile.average_distortion();
    let total_distance = BigInt::from(profile.total_distance());
    let m_big = BigInt::from(m);
    let size = 1u64 << m;

    let cover_checks = d_grid
        .iter()
        .map(|&d| {
            let covered_fraction = profile.covered_fraction(d)?;
            let radius = profile.radius_for(d);
            let uncovered = size - profile.covered_count(radius);
            let lower_bound = d * (1.0 - covered_fraction);
            // sum_s dist(s) >= d m |uncovered|, both sides scaled by m 2^m
            let d_exact =
                BigRational::from_float(d).ok_or_else(|| Error::domain("d", d, "finite values"))?;
            let rhs = d_exact * BigRational::from_integer(&m_big * BigInt::from(uncovered));
            let pass = BigRational::from_integer(total_distance.clone()) >= rhs;
            Ok(CoverCheck {
                d,
                radius,
                covered_fraction,
                lower_bound,
                margin: optimal - lower_bound,
                pass,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let cumulative = weight_enumerator(code)?.cumulative();
    let table = cumulative_generating_counts(&counts);
    let lower_bound: Vec<BigUint> = (0..=m).map(|w| lower_bound_at(&table, w).clone()).collect();
    let first_violation = cumulative
        .iter()
        .zip(&lower_bound)
        .position(|(&a, nw)| BigUint::from(a) < *nw);

    let counting_bound = counting_bound_distortion(dist, code.rate())?;
    let bound_margin = optimal - counting_bound;

    Ok(VerificationReport {
        seed: None,
        m,
        n,
        degrees: dist.clone(),
        optimal_distortion: optimal,
        counting_bound,
        bound_margin,
        bound_pass: bound_margin >= -BOUND_SLACK,
        cover_checks,
        enumerator: EnumeratorCheck {
            cumulative,
            lower_bound,
            first_violation,
        },
    })
}

/// `steps` equally spaced distortions from 0 to 1/2 inclusive.
pub fn distortion_grid(steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![0.5],
        _ => (0..steps)
            .map(|k| 0.5 * k as f64 / (steps - 1) as f64)
            .collect(),
    }
}
