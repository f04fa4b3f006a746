//! Complex gamma and log-gamma.
//!
//! Lanczos approximation (g = 7, nine coefficients) on `Re z >= 1/2`, the
//! reflection formula `Γ(z)Γ(1-z) = π / sin(πz)` below that.

use crate::{cast, nonpositive_integer_distance, Complex, Error, Real, Result};

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Arguments closer than this to a non-positive integer are treated as poles.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Largest `|Im z|` accepted by the reflection branch.
pub const MAX_REFLECTION_IM: f64 = 30.0;

/// Returns `true` when `z` is within [`POLE_TOLERANCE`] of `0, -1, -2, ...`.
pub fn is_pole<T: Real>(z: Complex<T>) -> bool {
    matches!(nonpositive_integer_distance(z), Some((_, d)) if d < cast(POLE_TOLERANCE))
}

fn check_pole<T: Real>(z: Complex<T>) -> Result<()> {
    if is_pole(z) {
        Err(Error::pole(z.re, z.im))
    } else {
        Ok(())
    }
}

/// `sin(πz)` with the real part reduced modulo 2 before scaling by π, so the
/// zeros at the integers stay sharp.
pub(crate) fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let two: T = cast(2.0);
    let r = z.re - two * (z.re / two).round();
    let pi = T::PI();
    let (s, c) = (pi * r).sin_cos();
    let y = pi * z.im;
    Complex::new(s * y.cosh(), c * y.sinh())
}

fn lanczos_log_gamma<T: Real>(z: Complex<T>) -> Complex<T> {
    let half: T = cast(0.5);
    let zm1 = z - T::one();
    let mut acc = Complex::new(cast::<T>(LANCZOS_COEFFS[0]), T::zero());
    for (k, &coef) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + Complex::new(cast::<T>(coef), T::zero()) / (zm1 + cast::<T>(k as f64));
    }
    let t = zm1 + cast::<T>(LANCZOS_G) + half;
    let half_ln_two_pi = half * (T::TAU()).ln();
    (zm1 + half) * t.ln() - t + acc.ln() + half_ln_two_pi
}

fn check_reflection_range<T: Real>(z: Complex<T>) -> Result<()> {
    if z.im.abs() > cast(MAX_REFLECTION_IM) {
        return Err(Error::Range(format!(
            "|Im z| = {:?} exceeds {MAX_REFLECTION_IM} in reflection",
            z.im.abs()
        )));
    }
    Ok(())
}

/// `log Γ(z)`.
///
/// For `Re z >= 1/2` this is the analytic continuation of the real log-gamma
/// (continuous in `Im z`); below that it comes from the reflection formula
/// and its imaginary part is only defined modulo `2π`. `exp(log_gamma(z))`
/// is always `Γ(z)`.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("non-finite argument".into()));
    }
    check_pole(z)?;
    if z.re >= cast(0.5) {
        return Ok(lanczos_log_gamma(z));
    }
    check_reflection_range(z)?;
    let one = Complex::new(T::one(), T::zero());
    let refl = lanczos_log_gamma(one - z);
    Ok(Complex::new(T::PI().ln(), T::zero()) - sin_pi(z).ln() - refl)
}

/// `Γ(z)`.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("non-finite argument".into()));
    }
    check_pole(z)?;
    if z.re >= cast(0.5) {
        return Ok(lanczos_log_gamma(z).exp());
    }
    check_reflection_range(z)?;
    let one = Complex::new(T::one(), T::zero());
    let g1mz = lanczos_log_gamma(one - z).exp();
    Ok(Complex::new(T::PI(), T::zero()) / (sin_pi(z) * g1mz))
}

/// `1/Γ(z)`, zero at the poles of `Γ`.
pub fn rgamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_pole(z) {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    Ok((-log_gamma(z)?).exp())
}
