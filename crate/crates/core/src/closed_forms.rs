//! Closed-form evaluations of special `2F1` and `3F2` values.
//!
//! Gamma ratios are formed in log space. Gamma factors in a denominator that
//! sit on a pole contribute zero rather than an error; poles in a numerator
//! are errors.

use crate::gamma::{is_pole, log_gamma};
use crate::{cast, nonpositive_integer_distance, Complex, Error, Real, Result};

/// Minimum distance of `d` from `0, -1, -2, ...` in the extended theorems.
pub const D_TOLERANCE: f64 = 1e-6;

fn c<T: Real>(x: f64) -> Complex<T> {
    Complex::new(cast(x), T::zero())
}

/// `Π Γ(num) / Π Γ(den)`.
fn gamma_ratio<T: Real>(num: &[Complex<T>], den: &[Complex<T>]) -> Result<Complex<T>> {
    for z in num {
        if is_pole(*z) {
            return Err(Error::pole(z.re, z.im));
        }
    }
    if den.iter().any(|z| is_pole(*z)) {
        return Ok(c(0.0));
    }
    let mut acc = c::<T>(0.0);
    for &z in num {
        acc = acc + log_gamma(z)?;
    }
    for &z in den {
        acc = acc - log_gamma(z)?;
    }
    Ok(acc.exp())
}

fn check_d<T: Real>(d: Complex<T>) -> Result<()> {
    let tol: T = cast(D_TOLERANCE);
    if d.norm() < tol {
        return Err(Error::pole(d.re, d.im));
    }
    if let Some((_, dist)) = nonpositive_integer_distance(d) {
        if dist < tol {
            return Err(Error::pole(d.re, d.im));
        }
    }
    Ok(())
}

fn check_unit_domain<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> Result<()> {
    let s = (c - a - b).re;
    if s <= T::zero() {
        return Err(Error::ConvergenceDomain(s.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Gauss: `2F1(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b))`, `Re(c−a−b) > 0`.
pub fn gauss_unit<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> Result<Complex<T>> {
    check_unit_domain(a, b, c)?;
    gamma_ratio(&[c, c - a - b], &[c - a, c - b])
}

/// Contiguous extension of Gauss:
///
/// `3F2(a, b, d+1; c+1, d; 1)
///   = Γ(c+1)Γ(c−a−b) / (Γ(c−a+1)Γ(c−b+1)) · (c − a − b + ab/d)`.
pub fn gauss_ext_unit<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> Result<Complex<T>> {
    check_unit_domain(a, b, c)?;
    check_d(d)?;
    let one = self::c::<T>(1.0);
    let ratio = gamma_ratio(&[c + one, c - a - b], &[c - a + one, c - b + one])?;
    Ok(ratio * (c - a - b + a * b / d))
}

/// Second Gauss: `2F1(a, b; (a+b+1)/2; 1/2) = Γ(½)Γ((a+b+1)/2) / (Γ((a+1)/2)Γ((b+1)/2))`.
pub fn second_gauss_half<T: Real>(a: Complex<T>, b: Complex<T>) -> Result<Complex<T>> {
    let half = c::<T>(0.5);
    gamma_ratio(
        &[half, (a + b) * half + half],
        &[(a * half) + half, (b * half) + half],
    )
}

/// Bailey: `2F1(a, 1−a; c; 1/2) = Γ(c/2)Γ((c+1)/2) / (Γ((c+a)/2)Γ((c−a+1)/2))`.
pub fn bailey_half<T: Real>(a: Complex<T>, c: Complex<T>) -> Result<Complex<T>> {
    let half = self::c::<T>(0.5);
    gamma_ratio(
        &[c * half, c * half + half],
        &[(c + a) * half, (c - a) * half + half],
    )
}

/// Contiguous extension of the second Gauss theorem:
/// `3F2(a, b, d+1; (a+b+3)/2, d; 1/2)`.
///
/// The prefactor `Γ(x−½)/Γ(x+3/2)` with `x = (a−b)/2` is evaluated as the
/// rational `1/((x−½)(x+½))`; it has poles only at `a − b = ±1`.
pub fn second_gauss_ext_half<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    d: Complex<T>,
) -> Result<Complex<T>> {
    check_d(d)?;
    let half = c::<T>(0.5);
    let one = c::<T>(1.0);
    let two = c::<T>(2.0);
    let x = (a - b) * half;
    let shift = (x - half) * (x + half);
    if shift.norm() < cast(crate::gamma::POLE_TOLERANCE) {
        return Err(Error::pole(x.re, x.im));
    }
    let top = (a + b) * half + c::<T>(1.5);
    let first = gamma_ratio(&[half, top], &[a * half + half, b * half + half])?;
    let second = gamma_ratio(&[half, top], &[a * half, b * half])?;
    let w1 = (a + b - one) * half - a * b / d;
    let w2 = (a + b + one) / d - two;
    Ok((first * w1 + second * w2) / shift)
}

/// Contiguous extension of Bailey's theorem:
///
/// `3F2(a, 1−a, d+1; c+1, d; 1/2) = 2^{−c} Γ(½)Γ(c+1)
///   · { (2/d) / (Γ((c+a)/2)Γ((c−a+1)/2)) + (1 − c/d) / (Γ((c+a+1)/2)Γ((c−a)/2 + 1)) }`.
pub fn bailey_ext_half<T: Real>(
    a: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> Result<Complex<T>> {
    check_d(d)?;
    let half = self::c::<T>(0.5);
    let one = self::c::<T>(1.0);
    let two = self::c::<T>(2.0);
    let top = [half, c + one];
    let first = gamma_ratio(&top, &[(c + a) * half, (c - a) * half + half])?;
    let second = gamma_ratio(&top, &[(c + a) * half + half, (c - a) * half + one])?;
    let scale = (-c * self::c::<T>(std::f64::consts::LN_2)).exp();
    Ok(scale * (first * (two / d) + second * (one - c / d)))
}
