//! Double-double reals: an unevaluated sum `hi + lo` of two binary64 values
//! with `|lo| <= ulp(hi)/2`, good for about 31 significant digits.

use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Taylor order used by [`dd_exp`] after range reduction.
pub const EXP_TAYLOR_ORDER: usize = 30;

/// Unit roundoff of the double-double format, `2^-106`.
pub const DD_EPS: f64 = 1.232_595_164_407_831e-32;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DDReal {
    pub hi: f64,
    pub lo: f64,
}

/// `s + e = a + b` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

/// [`two_sum`] for `|a| >= |b|`.
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// `p + e = a * b` exactly (fused multiply-add).
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl DDReal {
    pub const ZERO: DDReal = DDReal { hi: 0.0, lo: 0.0 };
    pub const ONE: DDReal = DDReal { hi: 1.0, lo: 0.0 };

    /// Renormalizing constructor.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        DDReal { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        DDReal { hi: x, lo: 0.0 }
    }

    /// Exact for any `|n| < 2^106`.
    pub fn from_i128(n: i128) -> Self {
        let hi = n as f64;
        let rest = n - hi as i128;
        DDReal::new(hi, rest as f64)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_normalized(self) -> bool {
        self.hi + self.lo == self.hi
    }

    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    pub fn abs(self) -> Self {
        if self.is_sign_negative() {
            -self
        } else {
            self
        }
    }

    /// Multiply by `2^k` exactly.
    pub fn ldexp(self, k: i32) -> Self {
        let s = pow2(k);
        DDReal {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        DDReal { hi, lo }
    }

    /// Nearest integer (ties away from zero), as `i128`.
    pub fn round_to_i128(self) -> i128 {
        let hi = self.hi.round();
        let rem = (self - DDReal::from_f64(hi)).to_f64();
        hi as i128 + rem.round() as i128
    }

    /// Parse a plain decimal literal (`-12.345`, `2.6e17`).
    pub fn parse_decimal(text: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("not a decimal literal: {text:?}"));
        let (mantissa, exp) = match text.find(['e', 'E']) {
            Some(pos) => (
                &text[..pos],
                text[pos + 1..].parse::<i32>().map_err(|_| bad())?,
            ),
            None => (text, 0),
        };
        let (neg, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let mut value = DDReal::ZERO;
        let mut scale = exp;
        let mut seen_point = false;
        let mut any = false;
        for ch in digits.chars() {
            match ch {
                '.' if !seen_point => seen_point = true,
                '0'..='9' => {
                    any = true;
                    value = value.mul_f64(10.0) + DDReal::from_f64(f64::from(ch as u8 - b'0'));
                    if seen_point {
                        scale -= 1;
                    }
                }
                _ => return Err(bad()),
            }
        }
        if !any {
            return Err(bad());
        }
        let value = value * pow10(scale);
        Ok(if neg { -value } else { value })
    }

    /// Scientific notation with `digits` significant digits, e.g.
    /// `2.625374126407687439999999999992e17`.
    pub fn to_scientific(self, digits: usize) -> String {
        if self.hi == 0.0 {
            return format!("{:.*}e0", digits.saturating_sub(1), 0.0);
        }
        let neg = self.is_sign_negative();
        let x = self.abs();
        let mut exp10 = x.hi.log10().floor() as i32;
        let mut m = x * pow10(-exp10);
        if m.hi >= 10.0 {
            m = m * pow10(-1);
            exp10 += 1;
        } else if m.hi < 1.0 {
            m = m.mul_f64(10.0);
            exp10 -= 1;
        }
        let mut out: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let mut d = m.hi.floor();
            let mut rest = m - DDReal::from_f64(d);
            if rest.is_sign_negative() {
                d -= 1.0;
                rest = rest + DDReal::ONE;
            }
            out.push(d.clamp(0.0, 9.0) as u8);
            m = rest.mul_f64(10.0);
        }
        // round on the extra digit
        let round_up = out.pop().is_some_and(|d| d >= 5);
        if round_up {
            let mut i = out.len();
            loop {
                if i == 0 {
                    out.insert(0, 1);
                    out.pop();
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if out[i] == 9 {
                    out[i] = 0;
                } else {
                    out[i] += 1;
                    break;
                }
            }
        }
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push((b'0' + out[0]) as char);
        if out.len() > 1 {
            s.push('.');
            s.extend(out[1..].iter().map(|&d| (b'0' + d) as char));
        }
        s.push_str(&format!("e{exp10}"));
        s
    }
}

fn pow2(k: i32) -> f64 {
    2f64.powi(k)
}

fn pow10(k: i32) -> DDReal {
    let ten = DDReal::from_f64(10.0);
    let mut result = DDReal::ONE;
    let mut base = ten;
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            result = result * base;
        }
        base = base * base;
        n >>= 1;
    }
    if k < 0 {
        DDReal::ONE / result
    } else {
        result
    }
}

impl From<f64> for DDReal {
    fn from(x: f64) -> Self {
        DDReal::from_f64(x)
    }
}

impl Neg for DDReal {
    type Output = DDReal;
    fn neg(self) -> DDReal {
        DDReal {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DDReal {
    type Output = DDReal;
    fn add(self, rhs: DDReal) -> DDReal {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        DDReal { hi, lo }
    }
}

impl Sub for DDReal {
    type Output = DDReal;
    fn sub(self, rhs: DDReal) -> DDReal {
        self + (-rhs)
    }
}

impl Mul for DDReal {
    type Output = DDReal;
    fn mul(self, rhs: DDReal) -> DDReal {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DDReal { hi, lo }
    }
}

/// Panics on a zero divisor; use [`dd_div`] for a checked quotient.
impl Div for DDReal {
    type Output = DDReal;
    fn div(self, rhs: DDReal) -> DDReal {
        dd_div(self, rhs).expect("double-double division by zero")
    }
}

impl PartialOrd for DDReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for DDReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_scientific(f.precision().unwrap_or(31)))
    }
}

pub fn dd_add(x: DDReal, y: DDReal) -> DDReal {
    x + y
}

pub fn dd_mul(x: DDReal, y: DDReal) -> DDReal {
    x * y
}

pub fn dd_div(x: DDReal, y: DDReal) -> Result<DDReal> {
    if y.hi == 0.0 {
        return Err(Error::DivideByZero);
    }
    // three quotient digits, each correcting the remainder of the last
    let q1 = x.hi / y.hi;
    let r = x - y.mul_f64(q1);
    let q2 = r.hi / y.hi;
    let r = r - y.mul_f64(q2);
    let q3 = r.hi / y.hi;
    let (q1, q2) = quick_two_sum(q1, q2);
    Ok(DDReal { hi: q1, lo: q2 } + DDReal::from_f64(q3))
}

pub fn dd_sqrt(x: DDReal) -> Result<DDReal> {
    if x.is_sign_negative() && (x.hi != 0.0 || x.lo != 0.0) {
        return Err(Error::Domain(format!("square root of negative {}", x.to_f64())));
    }
    if x.hi == 0.0 {
        return Ok(DDReal::ZERO);
    }
    // one Newton step from the binary64 root: s + (x - s²) / 2s
    let s = x.hi.sqrt();
    let (p, e) = two_prod(s, s);
    let resid = x - DDReal::new(p, e);
    let corr = resid.hi / (2.0 * s);
    let (hi, lo) = two_sum(s, corr);
    Ok(DDReal { hi, lo })
}

pub fn dd_pi() -> DDReal {
    DDReal {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    }
}

pub fn dd_ln2() -> DDReal {
    DDReal {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    }
}

/// Largest `|x|` accepted by [`dd_exp`].
pub const EXP_MAX_ARG: f64 = 700.0;

/// `e^x` by reduction `x = k ln 2 + r`, `|r| <= ln2/2`, a fixed-order Taylor
/// polynomial in `r`, and an exact scaling by `2^k`.
pub fn dd_exp(x: DDReal) -> Result<DDReal> {
    if !x.hi.is_finite() || x.hi.abs() > EXP_MAX_ARG {
        return Err(Error::Range(format!("dd_exp argument {} outside ±{EXP_MAX_ARG}", x.hi)));
    }
    let ln2 = dd_ln2();
    let k = (x.hi / std::f64::consts::LN_2).round();
    let r = x - ln2.mul_f64(k);
    // Horner: 1 + r(1 + r/2(1 + r/3(...)))
    let mut acc = DDReal::ONE;
    for n in (1..=EXP_TAYLOR_ORDER).rev() {
        acc = DDReal::ONE + (r * acc) / DDReal::from_f64(n as f64);
    }
    Ok(acc.ldexp(k as i32))
}
