//! Lower bounds on the rate-distortion function of individual low-density
//! generator-matrix (LDGM) codes used for lossy compression of a binary
//! symmetric source.
//!
//! The crate has two halves:
//!
//! * [`bounds`] evaluates the bound families as functions of rate and
//!   distortion: the Shannon curve `D = h^{-1}(1 - R)`, the counting bound
//!   for a given generator degree distribution, the test-channel bound for
//!   generator-regular codes, the DWR ensemble bound for left-Poisson
//!   codes and a conjectured bound built from the
//!   EXIT function of a repetition code.
//! * [`exact`] builds concrete small codes and computes, by exhaustive
//!   enumeration, their weight enumerators, covering profiles and optimal
//!   (nearest codeword) distortion. [`exact::verify_code`] checks the bounds
//!   against those exact quantities.
//!
//! All logarithms are base 2 and all rates and entropies are in bits.

pub mod bounds;
pub mod degree;
pub mod exact;
pub mod numerics;

mod error;

pub use bounds::{BoundCurve, BoundSpec, GExponent, RatePoint};
pub use degree::{DegreeDistribution, DegreeSpec};
pub use error::{Error, Result};
pub use exact::{CoverProfile, LdgmCode, VerificationReport, WeightEnumerator};
pub use numerics::Probability;
