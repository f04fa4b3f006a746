//! `e^{π√n}` for the four largest Heegner numbers, next to the integers
//! `c³ + 744` they nearly equal.

use crate::dd::{dd_exp, dd_pi, dd_sqrt, DDReal, DD_EPS};
use crate::{Error, Result};

/// `(n, c)` with `e^{π√n} ≈ c³ + 744`.
pub const HEEGNER_NUMBERS: [(u32, u64); 4] = [(19, 96), (43, 960), (67, 5_280), (163, 640_320)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeegnerRow {
    pub n: u32,
    /// `e^{π√n}`.
    pub value: DDReal,
    pub cube_base: u64,
    /// `cube_base³ + 744`.
    pub reference: i128,
    /// `reference − value`.
    pub deviation: DDReal,
    /// Absolute error bound on `value` (and hence on `deviation`).
    pub error_bound: f64,
}

/// Relative error bound of `dd_exp(π√n)`: the exponent carries a few units
/// of `2^-106` (π, the root, their product), amplified by its own size, plus
/// the reduction and the Taylor evaluation.
fn relative_error_bound(exponent: f64) -> f64 {
    (4.0 * exponent.abs() + 64.0) * DD_EPS
}

pub fn heegner_row(n: u32) -> Result<HeegnerRow> {
    let cube_base = HEEGNER_NUMBERS
        .iter()
        .find(|&&(m, _)| m == n)
        .map(|&(_, c)| c)
        .ok_or_else(|| Error::Domain(format!("{n} is not one of 19, 43, 67, 163")))?;
    let exponent = dd_pi() * dd_sqrt(DDReal::from_f64(f64::from(n)))?;
    let value = dd_exp(exponent)?;
    let c = i128::from(cube_base);
    let reference = c * c * c + 744;
    let deviation = DDReal::from_i128(reference) - value;
    Ok(HeegnerRow {
        n,
        value,
        cube_base,
        reference,
        deviation,
        error_bound: value.hi * relative_error_bound(exponent.hi),
    })
}

pub fn heegner_table() -> Vec<HeegnerRow> {
    HEEGNER_NUMBERS
        .iter()
        .map(|&(n, _)| heegner_row(n).expect("table entries are valid"))
        .collect()
}
