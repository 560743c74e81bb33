//! Weight enumerators of concrete codes and the generating-function lower
//! bound on them.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};
use crate::numerics::bisect_monotone;

use super::code::{degree_counts_for, LdgmCode};

/// Largest number of generators enumerated exhaustively.
pub const MAX_ENUM_GENERATORS: usize = 24;

/// `counts[w]` = number of index words whose codeword has weight `w`.
///
/// Index words are counted, not distinct codewords, so the counts sum to
/// `2^n` and a codeword produced by `2^{n - rank}` index words is counted
/// that many times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `sum_{i <= w} counts[i]` for every `w`.
    pub fn cumulative(&self) -> Vec<u64> {
        self.counts
            .iter()
            .scan(0u64, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }
}

pub(crate) fn check_generator_budget(code: &LdgmCode) -> Result<()> {
    if code.n() > MAX_ENUM_GENERATORS {
        return Err(Error::Budget {
            what: "n",
            value: code.n(),
            limit: MAX_ENUM_GENERATORS,
        });
    }
    Ok(())
}

/// Calls `visit` with every codeword (as a mask), walking the index words in
/// Gray-code order so each step flips one generator.
pub(crate) fn for_each_codeword(masks: &[u64], mut visit: impl FnMut(u64)) {
    let mut word = 0u64;
    visit(word);
    for i in 1u64..(1u64 << masks.len()) {
        word ^= masks[i.trailing_zeros() as usize];
        visit(word);
    }
}

pub fn weight_enumerator(code: &LdgmCode) -> Result<WeightEnumerator> {
    check_generator_budget(code)?;
    let masks = code.generator_masks()?;
    let mut counts = vec![0u64; code.m() + 1];
    for_each_codeword(&masks, |c| counts[c.count_ones() as usize] += 1);
    Ok(WeightEnumerator { counts })
}

/// `N(w) = sum_{i <= w} coef{ f(x)^n, x^i }` for `w = 0 ..= n sum_i i L_i`,
/// where `f(x)^n = prod_i (1 + x^i)^{n L_i}`. Requires every `n L_i` to be an
/// integer. Past the last index `N(w) = 2^n`.
pub fn coefficient_lower_bound(dist: &DegreeDistribution, n: usize) -> Result<Vec<BigUint>> {
    Ok(cumulative_generating_counts(&degree_counts_for(dist, n)?))
}

/// [`coefficient_lower_bound`] from explicit `(degree, generator count)`
/// pairs.
pub fn cumulative_generating_counts(degree_counts: &[(u32, usize)]) -> Vec<BigUint> {
    let mut poly = vec![BigUint::one()];
    for &(deg, count) in degree_counts {
        let deg = deg as usize;
        for _ in 0..count {
            // multiply by 1 + x^deg
            poly.resize(poly.len() + deg, BigUint::zero());
            if deg == 0 {
                for c in poly.iter_mut() {
                    *c <<= 1;
                }
                continue;
            }
            for k in (deg..poly.len()).rev() {
                let (lo, hi) = poly.split_at_mut(k);
                hi[0] += &lo[k - deg];
            }
        }
    }
    let mut acc = BigUint::zero();
    for c in poly.iter_mut() {
        acc += &*c;
        *c = acc.clone();
    }
    poly
}

/// `N(w)` with the tail convention `N(w) = N(last)` past the table.
pub fn lower_bound_at(table: &[BigUint], w: usize) -> &BigUint {
    &table[w.min(table.len() - 1)]
}

/// Growth rate `log2 f(x_w) - w log2 x_w` of `N(floor(w n))`, where `x_w`
/// solves `a(x) = w`, for `w` in `[0, L'/2]`.
pub fn asymptotic_n_exponent(dist: &DegreeDistribution, omega: f64) -> Result<f64> {
    let top = dist.average_degree() / 2.0;
    if !(0.0..=top).contains(&omega) || top == 0.0 {
        return Err(Error::domain("omega", omega, "[0, L'/2]"));
    }
    if omega == top {
        return dist.exponent(1.0);
    }
    if omega == 0.0 {
        return dist.exponent(0.0);
    }
    let x = bisect_monotone(|x| dist.a_unchecked(x), 0.0, 1.0, omega, 1e-15)?;
    dist.exponent(x)
}

/// `log2` of a big integer, exact to double precision.
pub fn log2_big(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_u64().unwrap_or(u64::MAX);
    shift as f64 + (top as f64).log2()
}
