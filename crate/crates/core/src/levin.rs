//! Levin u-transform for slowly convergent series.

use crate::{cast, Complex, Error, Real, Result};

/// Fewest terms [`levin_accelerate`] accepts.
pub const MIN_TERMS: usize = 8;

/// Highest transform order tried.
pub const MAX_ORDER: usize = 20;

const BETA: f64 = 1.0;
const START_OFFSETS: [usize; 4] = [0, 8, 16, 32];

/// One entry `L_k^{(n)}` of the u-transform table built from `terms`,
/// using partial sums `S_n .. S_{n+k}` and remainder estimates
/// `ω_m = (β + m) a_m`. Returns `None` if a remainder estimate vanishes.
pub fn levin_u<T: Real>(
    terms: &[Complex<T>],
    partial_sums: &[Complex<T>],
    start: usize,
    order: usize,
) -> Option<Complex<T>> {
    let beta: T = cast(BETA);
    let zero = Complex::new(T::zero(), T::zero());
    let (mut num, mut den) = (zero, zero);
    let last: T = beta + cast::<T>((start + order) as f64);
    let mut binom = T::one();
    for j in 0..=order {
        let m = start + j;
        let omega = terms[m] * (beta + cast::<T>(m as f64));
        if omega.norm_sqr() == T::zero() {
            return None;
        }
        let ratio = (beta + cast::<T>(m as f64)) / last;
        let mut weight = binom * ratio.powi(order as i32 - 1);
        if j % 2 == 1 {
            weight = -weight;
        }
        let inv = omega.inv() * weight;
        num = num + partial_sums[m] * inv;
        den = den + inv;
        binom = binom * cast::<T>((order - j) as f64) / cast::<T>((j + 1) as f64);
    }
    let v = num / den;
    (v.re.is_finite() && v.im.is_finite()).then_some(v)
}

/// Estimate the sum of a series from its leading terms.
///
/// Evaluates the u-transform for orders up to [`MAX_ORDER`] from a few
/// starting offsets and keeps the entry whose last two order-to-order
/// differences are smallest. The returned error estimate is the larger of
/// those two differences.
pub fn levin_accelerate<T: Real>(terms: &[Complex<T>]) -> Result<(Complex<T>, T)> {
    if terms.len() < MIN_TERMS {
        return Err(Error::InsufficientTerms {
            needed: MIN_TERMS,
            got: terms.len(),
        });
    }
    let mut partial = Vec::with_capacity(terms.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for &t in terms {
        acc = acc + t;
        partial.push(acc);
    }

    let mut best: Option<(Complex<T>, T)> = None;
    for &start in START_OFFSETS.iter() {
        if start + 3 > terms.len() {
            break;
        }
        let max_order = MAX_ORDER.min(terms.len() - 1 - start);
        let mut prev: [Option<Complex<T>>; 2] = [None, None];
        for order in 1..=max_order {
            let cur = levin_u(terms, &partial, start, order);
            if let (Some(c), Some(p1), Some(p2)) = (cur, prev[1], prev[0]) {
                let est = (c - p1).norm().max((p1 - p2).norm());
                if best.is_none_or(|(_, e)| est < e) {
                    best = Some((c, est));
                }
            }
            prev = [prev[1], cur];
        }
    }
    match best {
        Some(b) => Ok(b),
        None => {
            // Every window hit a vanishing term; fall back to the raw sum.
            let last = terms[terms.len() - 1].norm();
            Ok((acc, last * cast::<T>(terms.len() as f64)))
        }
    }
}
