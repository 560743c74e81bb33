//! Generator-node degree distributions `L(x) = sum_i L_i x^i` and the derived
//! functions `f(x) = prod_i (1 + x^i)^{L_i}` and `a(x) = sum_i i L_i x^i / (1 + x^i)`.
//!
//! `a` is the scaled logarithmic derivative of `f`, `a(x) = x f'(x) / f(x)`;
//! for `L(x) = x^l` this is `l x^l / (1 + x^l)`.

use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Tolerance on the total mass of a distribution.
const MASS_TOL: f64 = 1e-12;

/// Largest tail mass a truncated Poisson law may drop.
pub const POISSON_TAIL_LIMIT: f64 = 1e-10;

/// A normalized generator-node degree distribution.
///
/// Entries are `(degree, fraction)` pairs with distinct degrees in ascending
/// order and fractions summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    entries: Vec<(u32, f64)>,
}

impl DegreeDistribution {
    /// Builds a distribution from `(degree, fraction)` pairs. Pairs may come
    /// in any order; zero fractions are dropped.
    pub fn new(mut entries: Vec<(u32, f64)>) -> Result<Self> {
        if let Some(&(deg, frac)) = entries.iter().find(|(_, f)| !f.is_finite() || *f < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "fraction {frac} for degree {deg} is not a finite nonnegative number"
            )));
        }
        entries.retain(|&(_, f)| f > 0.0);
        entries.sort_by_key(|&(d, _)| d);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidDistribution("repeated degree".into()));
        }
        let total: f64 = entries.iter().map(|&(_, f)| f).sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidDistribution(format!(
                "fractions sum to {total}, not 1"
            )));
        }
        Ok(DegreeDistribution { entries })
    }

    /// Every generator has degree `l`.
    pub fn regular(l: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::domain("l", 0.0, "positive integers"));
        }
        Ok(DegreeDistribution {
            entries: vec![(l, 1.0)],
        })
    }

    /// Poisson law with mean `r / rate`, truncated at `max_degree` and
    /// renormalized. Fails if the dropped tail exceeds [`POISSON_TAIL_LIMIT`].
    ///
    /// This is the limiting generator degree distribution of codes whose
    /// check nodes all have degree `r` and connect uniformly with repetition.
    pub fn poisson_truncated(r: f64, rate: f64, max_degree: u32) -> Result<Self> {
        let lambda = poisson_mean(r, rate)?;
        let (pmf, tail) = poisson_pmf(lambda, max_degree);
        if tail > POISSON_TAIL_LIMIT {
            return Err(Error::Truncation { max_degree, tail });
        }
        Self::from_unnormalized(pmf)
    }

    /// Poisson law with mean `r / rate`, truncated at the first degree where
    /// the dropped tail falls below `1e-12`.
    pub fn poisson(r: f64, rate: f64) -> Result<Self> {
        let lambda = poisson_mean(r, rate)?;
        let mut max_degree = lambda.ceil() as u32 + 8;
        loop {
            let (pmf, tail) = poisson_pmf(lambda, max_degree);
            if tail < 1e-12 {
                return Self::from_unnormalized(pmf);
            }
            max_degree += 8;
        }
    }

    fn from_unnormalized(pmf: Vec<f64>) -> Result<Self> {
        let mass: f64 = pmf.iter().sum();
        let entries = pmf
            .into_iter()
            .enumerate()
            .map(|(i, p)| (i as u32, p / mass))
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.last().map_or(0, |&(d, _)| d)
    }

    /// Fraction of generators with degree zero.
    pub fn zero_degree_fraction(&self) -> f64 {
        self.entries
            .iter()
            .find(|&&(d, _)| d == 0)
            .map_or(0.0, |&(_, f)| f)
    }

    /// `L'(1) = sum_i i L_i`.
    pub fn average_degree(&self) -> f64 {
        self.entries.iter().map(|&(d, f)| d as f64 * f).sum()
    }

    /// `sum_i i^2 L_i`.
    pub fn second_moment(&self) -> f64 {
        self.entries
            .iter()
            .map(|&(d, f)| (d as f64) * (d as f64) * f)
            .sum()
    }

    /// `log2 f(x) = sum_i L_i log2(1 + x^i)`.
    pub fn log2_f(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        Ok(self
            .entries
            .iter()
            .map(|&(d, f)| f * (1.0 + pow(x, d)).log2())
            .sum())
    }

    /// `a(x) = sum_i i L_i x^i / (1 + x^i)`.
    pub fn a(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        Ok(self.a_unchecked(x))
    }

    pub(crate) fn a_unchecked(&self, x: f64) -> f64 {
        self.entries
            .iter()
            .map(|&(d, f)| {
                let u = pow(x, d);
                d as f64 * f * u / (1.0 + u)
            })
            .sum()
    }

    /// The growth exponent `log2 f(x) - a(x) log2 x = log2(f(x) / x^{a(x)})`.
    pub fn exponent(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        Ok(1.0 - self.exponent_deficit_unchecked(x))
    }

    /// `1 - log2(f(x) / x^{a(x)})`, computed per degree with `ln_1p`/`expm1`
    /// so it keeps full relative precision as `x -> 1`, where it vanishes
    /// quadratically.
    pub fn exponent_deficit(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        Ok(self.exponent_deficit_unchecked(x))
    }

    pub(crate) fn exponent_deficit_unchecked(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 1.0 - self.zero_degree_fraction();
        }
        let ln_x = x.ln();
        self.entries
            .iter()
            .map(|&(d, f)| {
                if d == 0 {
                    return 0.0;
                }
                // u = x^d = e^t; per-degree term is
                // 1 - log2(1 + u) + u/(1+u) log2 u = -log2((1+u)/2) + sigma(t) t / ln 2
                let t = d as f64 * ln_x;
                let em = t.exp_m1();
                let half_log = (0.5 * em).ln_1p();
                let sigma = (1.0 + em) / (2.0 + em);
                f * (sigma * t - half_log) / LN_2
            })
            .sum()
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (d, frac)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}:{frac}")?;
        }
        Ok(())
    }
}

/// Parses the literal form `"degree:fraction,degree:fraction,..."`.
impl FromStr for DegreeDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidDistribution(msg);
        let mut entries = Vec::new();
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (d, f) = pair
                .split_once(':')
                .ok_or_else(|| bad(format!("expected degree:fraction, got {pair:?}")))?;
            let d: u32 = d
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad degree {d:?}")))?;
            let f: f64 = f
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad fraction {f:?}")))?;
            entries.push((d, f));
        }
        if entries.is_empty() {
            return Err(bad("empty degree distribution".into()));
        }
        Self::new(entries)
    }
}

/// A degree distribution as given on the command line. Poisson laws depend
/// on the rate, so they are resolved per rate.
#[derive(Debug, Clone, PartialEq)]
pub enum DegreeSpec {
    Literal(DegreeDistribution),
    Regular(u32),
    /// Check-regular codes with check degree `r`: Poisson(`r / R`) generators.
    Poisson(f64),
}

impl DegreeSpec {
    pub fn resolve(&self, rate: f64) -> Result<DegreeDistribution> {
        match self {
            DegreeSpec::Literal(d) => Ok(d.clone()),
            DegreeSpec::Regular(l) => DegreeDistribution::regular(*l),
            DegreeSpec::Poisson(r) => DegreeDistribution::poisson(*r, rate),
        }
    }

    /// True if the distribution does not depend on the rate.
    pub fn is_fixed(&self) -> bool {
        !matches!(self, DegreeSpec::Poisson(_))
    }
}

impl FromStr for DegreeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(l) = s.strip_prefix("regular:") {
            let l: u32 = l
                .trim()
                .parse()
                .map_err(|_| Error::InvalidDistribution(format!("bad regular degree {l:?}")))?;
            DegreeDistribution::regular(l)?;
            return Ok(DegreeSpec::Regular(l));
        }
        if let Some(r) = s.strip_prefix("poisson:") {
            let r: f64 = r
                .trim()
                .parse()
                .map_err(|_| Error::InvalidDistribution(format!("bad check degree {r:?}")))?;
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::domain("r", r, "(0, inf)"));
            }
            return Ok(DegreeSpec::Poisson(r));
        }
        Ok(DegreeSpec::Literal(s.parse()?))
    }
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSpec::Literal(d) => write!(f, "{d}"),
            DegreeSpec::Regular(l) => write!(f, "regular:{l}"),
            DegreeSpec::Poisson(r) => write!(f, "poisson:{r}"),
        }
    }
}

fn check_nonneg(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("x", x, "[0, inf)"))
    }
}

/// `x^d` with `0^0 = 1`.
fn pow(x: f64, d: u32) -> f64 {
    x.powi(d as i32)
}

fn poisson_mean(r: f64, rate: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("r", r, "(0, inf)"));
    }
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::domain("rate", rate, "(0, 1]"));
    }
    Ok(r / rate)
}

/// Poisson(`lambda`) masses for degrees `0..=max_degree` and the mass beyond.
fn poisson_pmf(lambda: f64, max_degree: u32) -> (Vec<f64>, f64) {
    let ln_lambda = lambda.ln();
    let mut ln_fact = 0.0;
    let mut pmf = Vec::with_capacity(max_degree as usize + 1);
    let mut i = 0u32;
    let mut tail = 0.0;
    loop {
        if i > 0 {
            ln_fact += (i as f64).ln();
        }
        let p = (-lambda + i as f64 * ln_lambda - ln_fact).exp();
        if i <= max_degree {
            pmf.push(p);
        } else {
            tail += p;
            // past the mode the terms decay at least geometrically
            if i as f64 > lambda && (p < 1e-300 || p < tail * 1e-17) {
                break;
            }
        }
        i += 1;
    }
    (pmf, tail)
}
