//! Scalar information-theoretic functions and the one-dimensional solvers
//! shared by every bound.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Default absolute tolerance on the argument for root finding.
pub const ROOT_TOL: f64 = 1e-12;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        check_unit("probability", value)?;
        Ok(Probability(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

pub(crate) fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::domain(what, value, "[0, 1]"))
    }
}

/// `-p log2 p` with `0 log 0 = 0`.
fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Binary entropy without the domain check, for callers that have already
/// validated `p`.
pub(crate) fn h2(p: f64) -> f64 {
    plogp(p) + plogp(1.0 - p)
}

/// Binary entropy `h(p) = -p log2 p - (1-p) log2 (1-p)` in bits.
pub fn binary_entropy(p: f64) -> Result<f64> {
    check_unit("p", p)?;
    Ok(h2(p))
}

/// `1 - h(1/2 - delta)` evaluated without cancellation for small `delta`.
///
/// Uses `1 - h(p) = p log2(2p) + (1-p) log2(2(1-p))` with `2p = 1 - 2 delta`.
pub(crate) fn entropy_deficit_near_half(delta: f64) -> f64 {
    let p = 0.5 - delta;
    let lo = if p <= 0.0 {
        0.0
    } else {
        p * (-2.0 * delta).ln_1p()
    };
    (lo + (1.0 - p) * (2.0 * delta).ln_1p()) / LN_2
}

/// The unique `p` in `[0, 1/2]` with `h(p) = y`.
pub fn inverse_binary_entropy(y: f64) -> Result<f64> {
    check_unit("y", y)?;
    if y == 0.0 {
        return Ok(0.0);
    }
    if y == 1.0 {
        return Ok(0.5);
    }
    bisect_monotone(h2, 0.0, 0.5, y, ROOT_TOL)
}

/// Kullback-Leibler divergence between Bernoulli(`d`) and Bernoulli(`dp`) in
/// bits.
pub fn kl_bernoulli(d: f64, dp: f64) -> Result<f64> {
    check_unit("d", d)?;
    check_unit("d'", dp)?;
    if d == dp {
        return Ok(0.0);
    }
    if dp == 0.0 || dp == 1.0 {
        return Err(Error::domain("d'", dp, "(0, 1) when d differs from d'"));
    }
    let term = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a * (a / b).log2() };
    Ok((term(d, dp) + term(1.0 - d, 1.0 - dp)).max(0.0))
}

/// Solves `f(x) = target` for a function monotone on `[lo, hi]` by bisection.
///
/// The bracket must contain a sign change of `f(x) - target`; an endpoint
/// that hits the target exactly is returned as is. Iteration stops once the
/// bracket is narrower than `tol`, and the midpoint is returned.
pub fn bisect_monotone<F>(f: F, lo: f64, hi: f64, target: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let f_lo = f(lo) - target;
    let f_hi = f(hi) - target;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }
    let (mut a, mut b) = (lo, hi);
    let lo_negative = f_lo < 0.0;
    // 200 halvings exhaust any f64 interval.
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        let v = f(mid) - target;
        if v == 0.0 {
            return Ok(mid);
        }
        if (v < 0.0) == lo_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Smallest `x` in `[lo, hi]` where a monotone predicate (false, then true)
/// becomes true, to within `tol`. Returns `hi` when the predicate never holds
/// at `lo`'s side of the interval and `lo` when it already holds at `lo`.
pub(crate) fn bisect_threshold<P>(pred: P, lo: f64, hi: f64, tol: f64) -> f64
where
    P: Fn(f64) -> bool,
{
    if pred(lo) {
        return lo;
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        if pred(mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    b
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section minimisation of a unimodal function on `[lo, hi]`.
/// Returns `(argmin, min)`.
pub(crate) fn golden_section_min<F>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if c >= d {
            break;
        }
    }
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for x in [lo, hi] {
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Minimises `f` over `[lo, hi]` by scanning `grid` points and refining the
/// best cell with golden-section search. Ties go to the smaller `x`.
pub(crate) fn grid_golden_min<F>(f: F, grid: &[f64], tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    debug_assert!(!grid.is_empty());
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let mut k = 0;
    for (i, &v) in values.iter().enumerate() {
        if v < values[k] {
            k = i;
        }
    }
    if grid.len() < 3 {
        return (grid[k], values[k]);
    }
    let a = grid[k.saturating_sub(1)];
    let b = grid[(k + 1).min(grid.len() - 1)];
    let (x, fx) = golden_section_min(&f, a, b, tol);
    if fx < values[k] {
        (x, fx)
    } else {
        (grid[k], values[k])
    }
}
