//! Concrete small LDGM codes and exhaustive oracles.
//!
//! Everything here is exact: weight enumerators are integer counts over all
//! `2^n` index words, covering profiles list the nearest-codeword distance
//! of all `2^m` source words, and the optimal distortion follows from the
//! profile because the nearest-codeword encoder is optimal. Budgets:
//! `n <= 24` generators, `m <= 26` for covering profiles.

mod code;
mod cover;
mod enumerator;
mod verify;

pub use code::{LdgmCode, MAX_MASK_BITS};
pub use cover::{
    distance_transform, optimal_average_distortion, CoverProfile, MAX_COVER_BLOCKLENGTH,
};
pub use enumerator::{
    asymptotic_n_exponent, coefficient_lower_bound, cumulative_generating_counts, log2_big,
    lower_bound_at, weight_enumerator, WeightEnumerator, MAX_ENUM_GENERATORS,
};
pub use verify::{
    distortion_grid, verify_code, CoverCheck, EnumeratorCheck, VerificationReport, BOUND_SLACK,
};
