//! Generalized hypergeometric series with complex parameters, the classical
//! Gauss / second-Gauss / Bailey summation theorems and their contiguous
//! `3F2` extensions, and a registry of machine-checked identities for
//! `e^π`, `e^{π/2}` and the Heegner near-integers.
//!
//! The numerical core (gamma, series summation, closed forms) is generic over
//! the real scalar through [`Real`]; identity parameters are carried as exact
//! Gaussian rationals until they are evaluated. Most callers want the `f64`
//! aliases re-exported here.

pub mod closed_forms;
pub mod dd;
mod error;
pub mod gamma;
pub mod heegner;
pub mod identities;
pub mod levin;
pub mod series;

pub use error::{Error, Result};

pub use closed_forms::{
    bailey_ext_half, bailey_half, gauss_ext_unit, gauss_unit, second_gauss_ext_half,
    second_gauss_half,
};
pub use dd::DDReal;
pub use gamma::{gamma, log_gamma};
pub use heegner::{heegner_row, heegner_table, HeegnerRow, HEEGNER_NUMBERS};
pub use identities::{
    corollary_case, gelfond, gelfond_lambda, registry, sqrt_gelfond_pair, theorem1, theorem2,
    verify, CorollaryKind, IdentityCase, Verdict, VerificationReport,
};
pub use levin::levin_accelerate;
pub use series::{
    contiguous_reduce_3f2, sum_pfq, sum_pfq_unit, SeriesSpec, SumPolicy, SumResult, SumStatus,
    UnitArgumentMode,
};

use num_traits::{Float, FloatConst};
use std::fmt::Debug;

/// Real scalar the numerical core is generic over (`f32`, `f64`).
pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {}

impl<T: Float + FloatConst + Debug + Send + Sync + 'static> Real for T {}

/// Complex number over a [`Real`] scalar.
pub type Complex<T> = num_complex::Complex<T>;

/// The default complex scalar: a pair of binary64 reals.
pub type ComplexValue = num_complex::Complex<f64>;

/// Single-precision complex scalar.
pub type Complex32 = num_complex::Complex<f32>;

/// Exact rational used for identity parameters (`2/9`, `15/26`, ...).
pub type Rational = num_rational::Ratio<i64>;

/// Exact Gaussian rational (`1/2 + i`, `-15/22`, ...).
pub type ExactComplex = num_complex::Complex<Rational>;

#[inline]
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from(x).expect("f64 constant representable in scalar type")
}

/// Distance from `z` to the nearest non-positive integer, or `None` when the
/// nearest integer is positive.
pub(crate) fn nonpositive_integer_distance<T: Real>(z: Complex<T>) -> Option<(i64, T)> {
    let k = z.re.round();
    if k > T::zero() {
        return None;
    }
    let dist = (z - Complex::new(k, T::zero())).norm();
    Some((k.to_i64()?, dist))
}
