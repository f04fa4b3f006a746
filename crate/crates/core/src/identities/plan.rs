//! Building blocks of an identity: exact parameters, series plans, closed-form
//! plans and the exponential target they should all agree with.

use crate::closed_forms::{
    bailey_ext_half, bailey_half, gauss_ext_unit, gauss_unit, second_gauss_ext_half,
    second_gauss_half,
};
use crate::{ComplexValue, ExactComplex, Rational, Result, SeriesSpec};
use num_traits::Zero;
use std::f64::consts::PI;
use std::fmt;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// A series or closed-form parameter. Rational ones stay exact until
/// [`Param::value`] is called.
#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Exact(ExactComplex),
    Approx(ComplexValue),
}

impl Param {
    pub fn real(r: Rational) -> Self {
        Param::Exact(ExactComplex::new(r, Rational::zero()))
    }

    pub fn int(n: i64) -> Self {
        Param::real(Rational::from_integer(n))
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Param::Exact(ExactComplex::new(re, im))
    }

    pub fn float(x: f64) -> Self {
        Param::Approx(ComplexValue::new(x, 0.0))
    }

    pub fn value(&self) -> ComplexValue {
        match self {
            Param::Exact(z) => ComplexValue::new(rational_to_f64(z.re), rational_to_f64(z.im)),
            Param::Approx(z) => *z,
        }
    }

    fn exact_eq(&self, other: &Param) -> bool {
        matches!((self, other), (Param::Exact(a), Param::Exact(b)) if a == b)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Exact(z) => {
                let (re, im) = (z.re, z.im);
                match (re.is_zero(), im.is_zero()) {
                    (_, true) => write!(f, "{re}"),
                    (true, false) => write!(f, "{im}i"),
                    (false, false) if im < Rational::zero() => write!(f, "{re}{im}i"),
                    _ => write!(f, "{re}+{im}i"),
                }
            }
            Param::Approx(z) if z.im == 0.0 => write!(f, "{}", z.re),
            Param::Approx(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

/// One weighted series on the left-hand side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTerm {
    pub upper: Vec<Param>,
    pub lower: Vec<Param>,
    pub argument: Param,
    pub weight: Param,
}

impl SeriesTerm {
    /// Builds the term, removing upper/lower pairs that are exactly equal.
    pub fn new(upper: Vec<Param>, mut lower: Vec<Param>, argument: Param, weight: Param) -> Self {
        let mut kept = Vec::with_capacity(upper.len());
        for a in upper {
            match lower.iter().position(|b| b.exact_eq(&a)) {
                Some(pos) => {
                    lower.remove(pos);
                }
                None => kept.push(a),
            }
        }
        SeriesTerm {
            upper: kept,
            lower,
            argument,
            weight,
        }
    }

    pub fn spec(&self) -> SeriesSpec {
        SeriesSpec::new(
            self.upper.iter().map(Param::value).collect(),
            self.lower.iter().map(Param::value).collect(),
            self.argument.value(),
        )
    }

    pub fn is_unit_argument(&self) -> bool {
        (self.argument.value().norm() - 1.0).abs() < 1e-12
    }
}

impl fmt::Display for SeriesTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Param]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{}*{}F{}({}; {}; {})",
            self.weight,
            self.upper.len(),
            self.lower.len(),
            join(&self.upper),
            join(&self.lower),
            self.argument
        )
    }
}

/// A call into [`crate::closed_forms`].
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    GaussUnit { a: Param, b: Param, c: Param },
    GaussExtUnit { a: Param, b: Param, c: Param, d: Param },
    SecondGaussHalf { a: Param, b: Param },
    BaileyHalf { a: Param, c: Param },
    SecondGaussExtHalf { a: Param, b: Param, d: Param },
    BaileyExtHalf { a: Param, c: Param, d: Param },
}

impl ClosedForm {
    pub fn evaluate(&self) -> Result<ComplexValue> {
        use ClosedForm::*;
        match self {
            GaussUnit { a, b, c } => gauss_unit(a.value(), b.value(), c.value()),
            GaussExtUnit { a, b, c, d } => gauss_ext_unit(a.value(), b.value(), c.value(), d.value()),
            SecondGaussHalf { a, b } => second_gauss_half(a.value(), b.value()),
            BaileyHalf { a, c } => bailey_half(a.value(), c.value()),
            SecondGaussExtHalf { a, b, d } => second_gauss_ext_half(a.value(), b.value(), d.value()),
            BaileyExtHalf { a, c, d } => bailey_ext_half(a.value(), c.value(), d.value()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedTerm {
    pub form: ClosedForm,
    pub weight: Param,
}

/// Exponential constants the expected values are built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponential {
    /// `e^π`
    Pi,
    /// `e^{−π}`
    NegPi,
    /// `e^{π/2}`
    HalfPi,
    /// `e^{−π/2}`
    NegHalfPi,
    /// `e^{πλ}`
    PiTimes(f64),
}

impl Exponential {
    pub fn value(self) -> f64 {
        match self {
            Exponential::Pi => PI.exp(),
            Exponential::NegPi => (-PI).exp(),
            Exponential::HalfPi => (PI / 2.0).exp(),
            Exponential::NegHalfPi => (-PI / 2.0).exp(),
            Exponential::PiTimes(l) => (PI * l).exp(),
        }
    }
}

impl fmt::Display for Exponential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponential::Pi => f.write_str("e^pi"),
            Exponential::NegPi => f.write_str("e^-pi"),
            Exponential::HalfPi => f.write_str("e^(pi/2)"),
            Exponential::NegHalfPi => f.write_str("e^(-pi/2)"),
            Exponential::PiTimes(l) => write!(f, "e^({l}*pi)"),
        }
    }
}

/// Rational combination of exponentials, evaluated only through `f64::exp`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Target {
    pub terms: Vec<(Rational, Exponential)>,
}

impl Target {
    pub fn single(coef: Rational, e: Exponential) -> Self {
        Target {
            terms: vec![(coef, e)],
        }
    }

    pub fn pair(c1: Rational, e1: Exponential, c2: Rational, e2: Exponential) -> Self {
        Target {
            terms: vec![(c1, e1), (c2, e2)],
        }
    }

    pub fn coefficient(&self, e: Exponential) -> Rational {
        self.terms
            .iter()
            .filter(|(_, x)| *x == e)
            .fold(Rational::zero(), |s, (c, _)| s + c)
    }

    pub fn value(&self) -> f64 {
        self.terms
            .iter()
            .map(|&(c, e)| rational_to_f64(c) * e.value())
            .sum()
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, e)| format!("({c})*{e}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
