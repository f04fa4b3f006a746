//! Registry of hypergeometric identities for `e^π`, `e^{π/2}` and `e^{πλ}`.
//!
//! Every case carries three independent routes to the same number: the
//! series plan (summed term by term), the closed-form plan (gamma ratios)
//! and the expected value (rational combination of `exp` of multiples of
//! π). [`verify`] checks them against each other.

mod plan;
mod verify;

pub use plan::{
    rational_to_f64, ClosedForm, ClosedTerm, Exponential, Param, SeriesTerm, Target,
};
pub use verify::{
    verify, Verdict, VerificationReport, CLOSED_TOLERANCE, HALF_ARGUMENT_TOLERANCE,
    REALNESS_TOLERANCE, UNIT_ARGUMENT_SUM_TOLERANCE, UNIT_ARGUMENT_TOLERANCE,
};

use crate::closed_forms::{bailey_half, gauss_unit, second_gauss_half, D_TOLERANCE};
use crate::{ComplexValue, Error, Rational, Result};
use num_traits::Zero;
use plan::rat;
use std::f64::consts::{PI, SQRT_2};

/// Largest `|λ|` accepted by [`gelfond_lambda`].
pub const MAX_LAMBDA: f64 = 15.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Erratum {
    None,
    /// A parameter differs from the printed one; the note says which.
    CorrectedParameter(String),
    /// Parameters exactly as printed; the printed right-hand side is kept in
    /// [`IdentityCase::claimed`] and may not be reproducible.
    AsPrinted(String),
}

impl Erratum {
    pub fn is_flagged(&self) -> bool {
        !matches!(self, Erratum::None)
    }

    pub fn note(&self) -> Option<&str> {
        match self {
            Erratum::None => None,
            Erratum::CorrectedParameter(s) | Erratum::AsPrinted(s) => Some(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    Evaluated,
    /// The series plan is expected to diverge; that is the pass condition.
    ExpectedDivergent,
    /// Listed for completeness, never evaluated.
    DocumentedOnly,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CaseParams {
    pub n: Option<u32>,
    pub lambda: Option<f64>,
    pub d1: Option<Rational>,
    pub d2: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase {
    pub id: String,
    pub description: String,
    pub params: CaseParams,
    pub lhs_plan: Vec<SeriesTerm>,
    /// Empty when no closed form applies.
    pub rhs_closed_plan: Vec<ClosedTerm>,
    pub expected: Target,
    /// The right-hand side as printed, when it differs in form from
    /// `expected` (corollaries).
    pub claimed: Option<Target>,
    pub erratum: Erratum,
    pub kind: CaseKind,
    pub reference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryKind {
    Cor1,
    Cor2,
    Cor3,
    Cor4,
}

fn i_unit() -> Param {
    Param::gaussian(rat(0, 1), rat(1, 1))
}

fn neg_i() -> Param {
    Param::gaussian(rat(0, 1), rat(-1, 1))
}

fn half_plus(im: Rational) -> Param {
    Param::gaussian(rat(1, 2), im)
}

fn complex(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn check_d(d: Rational) -> Result<()> {
    let x = rational_to_f64(d);
    let near_int = d <= Rational::zero() && (x - x.round()).abs() < D_TOLERANCE;
    if x.abs() < D_TOLERANCE || near_int {
        return Err(Error::pole(x, 0.0));
    }
    Ok(())
}

/// `e^π = 2F1(i, −i; ½; 1) + 2·2F1(½+i, ½−i; 3/2; 1)` via Gauss.
pub fn gelfond() -> f64 {
    gelfond_lambda(1.0).expect("λ = 1 is in range")
}

/// `e^{πλ} = 2F1(iλ, −iλ; ½; 1) + 2λ·2F1(½+iλ, ½−iλ; 3/2; 1)` via Gauss.
pub fn gelfond_lambda(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda.abs() > MAX_LAMBDA {
        return Err(Error::Range(format!("|λ| = {lambda} exceeds {MAX_LAMBDA}")));
    }
    let first = gauss_unit(complex(0.0, lambda), complex(0.0, -lambda), complex(0.5, 0.0))?;
    let second = gauss_unit(complex(0.5, lambda), complex(0.5, -lambda), complex(1.5, 0.0))?;
    Ok((first + second * (2.0 * lambda)).re)
}

/// `(e^{π/2}, e^{−π/2}) = S ± √2·B` with `S = 2F1(i, −i; ½; ½)` by the
/// second Gauss theorem and `B = 2F1(½+i, ½−i; 3/2; ½)` by Bailey's.
pub fn sqrt_gelfond_pair() -> (f64, f64) {
    let s = second_gauss_half(complex(0.0, 1.0), complex(0.0, -1.0)).expect("regular point");
    let b = bailey_half(complex(0.5, 1.0), complex(1.5, 0.0)).expect("regular point");
    ((s + b * SQRT_2).re, (s - b * SQRT_2).re)
}

/// Coefficients of `(e^π, e^{−π})` in the contiguous Gelfond identity.
pub fn theorem1_coefficients(d1: Rational, d2: Rational) -> (Rational, Rational) {
    let a = Rational::from_integer(1) / (rat(5, 1) * d1);
    let b = rat(15, 32) / d2;
    (a + b + rat(23, 80), a - b - rat(7, 80))
}

/// Coefficients of `(e^{π/2}, e^{−π/2})` in the half-argument identity.
pub fn theorem2_coefficients(d1: Rational, d2: Rational) -> (Rational, Rational) {
    let inv1 = Rational::from_integer(1) / d1;
    let inv2 = Rational::from_integer(1) / d2;
    (
        inv1 * rat(1, 10) + inv2 * rat(3, 16) + rat(27, 40),
        inv1 * rat(3, 10) - inv2 * rat(21, 16) + rat(11, 40),
    )
}

fn format_params(d1: Rational, d2: Rational) -> String {
    format!("d1 = {d1}, d2 = {d2}")
}

/// `second_lower` is the first lower parameter of the second series
/// (`5/2` in the identity; `3/2` reproduces a printed variant).
fn theorem1_case(id: String, d1: Rational, d2: Rational, second_lower: Rational) -> Result<IdentityCase> {
    check_d(d1)?;
    check_d(d2)?;
    let one = Rational::from_integer(1);
    let first = SeriesTerm::new(
        vec![i_unit(), neg_i(), Param::real(d1 + one)],
        vec![Param::real(rat(3, 2)), Param::real(d1)],
        Param::int(1),
        Param::int(1),
    );
    let second = SeriesTerm::new(
        vec![half_plus(rat(1, 1)), half_plus(rat(-1, 1)), Param::real(d2 + one)],
        vec![Param::real(second_lower), Param::real(d2)],
        Param::int(1),
        Param::int(2),
    );
    let closed = vec![
        ClosedTerm {
            form: ClosedForm::GaussExtUnit {
                a: i_unit(),
                b: neg_i(),
                c: Param::real(rat(1, 2)),
                d: Param::real(d1),
            },
            weight: Param::int(1),
        },
        ClosedTerm {
            form: ClosedForm::GaussExtUnit {
                a: half_plus(rat(1, 1)),
                b: half_plus(rat(-1, 1)),
                c: Param::real(second_lower - one),
                d: Param::real(d2),
            },
            weight: Param::int(2),
        },
    ];
    let (cp, cm) = theorem1_coefficients(d1, d2);
    Ok(IdentityCase {
        id,
        description: format!(
            "3F2(i,-i,d1+1;3/2,d1;1) + 2*3F2(1/2+i,1/2-i,d2+1;{second_lower},d2;1), {}",
            format_params(d1, d2)
        ),
        params: CaseParams {
            d1: Some(d1),
            d2: Some(d2),
            ..CaseParams::default()
        },
        lhs_plan: vec![first, second],
        rhs_closed_plan: closed,
        expected: Target::pair(cp, Exponential::Pi, cm, Exponential::NegPi),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: "contiguous Gauss sums at unit argument".into(),
    })
}

/// The contiguous extension of the Gelfond identity at unit argument:
///
/// `3F2(i,−i,d₁+1; 3/2,d₁; 1) + 2·3F2(½+i,½−i,d₂+1; 5/2,d₂; 1)
///   = e^π(1/(5d₁) + 15/(32d₂) + 23/80) + e^{−π}(1/(5d₁) − 15/(32d₂) − 7/80)`.
pub fn theorem1(d1: Rational, d2: Rational) -> Result<IdentityCase> {
    theorem1_case(format!("thm1[{d1},{d2}]"), d1, d2, rat(5, 2))
}

/// The half-argument analogue:
///
/// `3F2(i,−i,d₁+1; 3/2,d₁; ½) + √2·3F2(½+i,½−i,d₂+1; 5/2,d₂; ½)
///   = e^{π/2}(1/(10d₁) + 3/(16d₂) + 27/40) + e^{−π/2}(3/(10d₁) − 21/(16d₂) + 11/40)`.
pub fn theorem2(d1: Rational, d2: Rational) -> Result<IdentityCase> {
    theorem2_case(format!("thm2[{d1},{d2}]"), d1, d2)
}

fn theorem2_case(id: String, d1: Rational, d2: Rational) -> Result<IdentityCase> {
    check_d(d1)?;
    check_d(d2)?;
    let one = Rational::from_integer(1);
    let half = Param::real(rat(1, 2));
    let first = SeriesTerm::new(
        vec![i_unit(), neg_i(), Param::real(d1 + one)],
        vec![Param::real(rat(3, 2)), Param::real(d1)],
        half.clone(),
        Param::int(1),
    );
    let second = SeriesTerm::new(
        vec![half_plus(rat(1, 1)), half_plus(rat(-1, 1)), Param::real(d2 + one)],
        vec![Param::real(rat(5, 2)), Param::real(d2)],
        half,
        Param::float(SQRT_2),
    );
    let closed = vec![
        ClosedTerm {
            form: ClosedForm::SecondGaussExtHalf {
                a: i_unit(),
                b: neg_i(),
                d: Param::real(d1),
            },
            weight: Param::int(1),
        },
        ClosedTerm {
            form: ClosedForm::BaileyExtHalf {
                a: half_plus(rat(1, 1)),
                c: Param::real(rat(3, 2)),
                d: Param::real(d2),
            },
            weight: Param::float(SQRT_2),
        },
    ];
    let (cp, cm) = theorem2_coefficients(d1, d2);
    Ok(IdentityCase {
        id,
        description: format!(
            "3F2(i,-i,d1+1;3/2,d1;1/2) + sqrt2*3F2(1/2+i,1/2-i,d2+1;5/2,d2;1/2), {}",
            format_params(d1, d2)
        ),
        params: CaseParams {
            d1: Some(d1),
            d2: Some(d2),
            ..CaseParams::default()
        },
        lhs_plan: vec![first, second],
        rhs_closed_plan: closed,
        expected: Target::pair(cp, Exponential::HalfPi, cm, Exponential::NegHalfPi),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: "contiguous second-Gauss and Bailey sums at one half".into(),
    })
}

fn with_corollary(mut case: IdentityCase, id: String, n: u32, reference: String) -> IdentityCase {
    case.id = id;
    case.params.n = Some(n);
    case.reference = reference;
    case
}

/// Corollary family member `n`. Families with a printed erratum return the
/// primary case first, then its companion.
pub fn corollary_case(kind: CorollaryKind, n: u32) -> Result<Vec<IdentityCase>> {
    if n == 0 {
        return Err(Error::Domain("corollary index n must be >= 1".into()));
    }
    let ni = i64::from(n);
    let nr = Rational::from_integer(ni);
    match kind {
        CorollaryKind::Cor1 => {
            let (d1, d2) = (rat(2, 5 * ni - 1), rat(15, 2 * (8 * ni - 3)));
            let mut case = with_corollary(
                theorem1_case(String::new(), d1, d2, rat(5, 2))?,
                format!("cor1-n{n}"),
                n,
                format!("n e^pi family, n = {n}"),
            );
            case.claimed = Some(Target::single(nr, Exponential::Pi));
            Ok(vec![case])
        }
        CorollaryKind::Cor2 => {
            let (d1, d2) = (rat(2, 5 * ni - 1), rat(-15, 2 * (8 * ni + 3)));
            let claim = Target::single(nr, Exponential::NegPi);
            let mut fixed = with_corollary(
                theorem1_case(String::new(), d1, d2, rat(5, 2))?,
                format!("cor2-n{n}"),
                n,
                format!("n e^-pi family, n = {n}"),
            );
            fixed.claimed = Some(claim.clone());
            fixed.erratum = Erratum::CorrectedParameter(
                "second series lower parameter 5/2, not the printed 3/2".into(),
            );
            let mut printed = with_corollary(
                theorem1_case(String::new(), d1, d2, rat(3, 2))?,
                format!("cor2-n{n}-printed"),
                n,
                format!("n e^-pi family as printed, n = {n}"),
            );
            printed.expected = claim.clone();
            printed.claimed = Some(claim);
            printed.kind = CaseKind::ExpectedDivergent;
            printed.erratum = Erratum::AsPrinted(
                "printed lower parameter 3/2 gives convergence parameter -1/2; the second series diverges".into(),
            );
            Ok(vec![fixed, printed])
        }
        CorollaryKind::Cor3 => {
            let d2 = rat(-5, 2);
            let claim = Target::pair(nr, Exponential::Pi, nr, Exponential::NegPi);
            let mut printed = with_corollary(
                theorem1_case(String::new(), rat(1, 2 * (10 * ni - 1)), d2, rat(5, 2))?,
                format!("cor3-n{n}-printed"),
                n,
                format!("2n cosh(pi) family as printed, n = {n}"),
            );
            printed.claimed = Some(claim.clone());
            printed.erratum = Erratum::AsPrinted(format!(
                "printed d1 = 1/(2(10n-1)) gives ({}) (e^pi + e^-pi), not n (e^pi + e^-pi); second series lower parameter taken as 5/2",
                printed.expected.coefficient(Exponential::Pi)
            ));
            let mut fixed = with_corollary(
                theorem1_case(String::new(), rat(2, 10 * ni - 1), d2, rat(5, 2))?,
                format!("cor3-n{n}-corrected"),
                n,
                format!("2n cosh(pi) family corrected, n = {n}"),
            );
            fixed.claimed = Some(claim);
            fixed.erratum = Erratum::CorrectedParameter(
                "d1 = 2/(10n-1) in place of the printed 1/(2(10n-1)); second series lower parameter 5/2".into(),
            );
            Ok(vec![printed, fixed])
        }
        CorollaryKind::Cor4 => {
            let (d1, d2) = (rat(1, 7 * ni - 5), rat(15, 24 * ni - 14));
            let mut case = with_corollary(
                theorem2_case(String::new(), d1, d2)?,
                format!("cor4-n{n}"),
                n,
                format!("n e^(pi/2) family, n = {n}"),
            );
            case.claimed = Some(Target::single(nr, Exponential::HalfPi));
            Ok(vec![case])
        }
    }
}

fn gauss_pair_case(id: &str, lambda: Rational, sign: i64, reference: &str) -> IdentityCase {
    let zero = Rational::zero();
    let two_lambda = Rational::from_integer(2 * sign) * lambda;
    let lam = rational_to_f64(lambda);
    let weight = Param::real(two_lambda);
    let a = Param::gaussian(zero, lambda);
    let b = Param::gaussian(zero, -lambda);
    let ha = half_plus(lambda);
    let hb = half_plus(-lambda);
    let first = SeriesTerm::new(
        vec![a.clone(), b.clone()],
        vec![Param::real(rat(1, 2))],
        Param::int(1),
        Param::int(1),
    );
    let second = SeriesTerm::new(
        vec![ha.clone(), hb.clone()],
        vec![Param::real(rat(3, 2))],
        Param::int(1),
        weight.clone(),
    );
    let signed = lambda * Rational::from_integer(sign);
    IdentityCase {
        id: id.into(),
        description: format!(
            "2F1(i l,-i l;1/2;1) {} 2l*2F1(1/2+i l,1/2-i l;3/2;1), l = {lambda}",
            if sign < 0 { "-" } else { "+" }
        ),
        params: CaseParams {
            lambda: Some(lam),
            ..CaseParams::default()
        },
        lhs_plan: vec![first, second],
        rhs_closed_plan: vec![
            ClosedTerm {
                form: ClosedForm::GaussUnit {
                    a,
                    b,
                    c: Param::real(rat(1, 2)),
                },
                weight: Param::int(1),
            },
            ClosedTerm {
                form: ClosedForm::GaussUnit {
                    a: ha,
                    b: hb,
                    c: Param::real(rat(3, 2)),
                },
                weight,
            },
        ],
        expected: Target::single(Rational::from_integer(1), Exponential::PiTimes(rational_to_f64(signed))),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: reference.into(),
    }
}

fn gelfond_case() -> IdentityCase {
    let mut case = gauss_pair_case("eq1.1", Rational::from_integer(1), 1, "Gelfond constant via Gauss");
    case.params.lambda = None;
    case.expected = Target::single(Rational::from_integer(1), Exponential::Pi);
    case.description = "2F1(i,-i;1/2;1) + 2*2F1(1/2+i,1/2-i;3/2;1) = e^pi".into();
    case
}

fn bessel_case() -> IdentityCase {
    let z = Param::float(PI * PI / 4.0);
    IdentityCase {
        id: "0f1-bessel".into(),
        description: "0F1(;1/2;pi^2/4) + pi*0F1(;3/2;pi^2/4) = cosh(pi) + sinh(pi) = e^pi".into(),
        params: CaseParams::default(),
        lhs_plan: vec![
            SeriesTerm::new(vec![], vec![Param::real(rat(1, 2))], z.clone(), Param::int(1)),
            SeriesTerm::new(vec![], vec![Param::real(rat(3, 2))], z, Param::float(PI)),
        ],
        rhs_closed_plan: vec![],
        expected: Target::single(Rational::from_integer(1), Exponential::Pi),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: "0F1 / modified Bessel expression".into(),
    }
}

fn sphere_case() -> IdentityCase {
    IdentityCase {
        id: "sphere-volume".into(),
        description: "sum of unit-ball volumes V_2n = pi^n/n! over n >= 0 = 0F0(;;pi) = e^pi".into(),
        params: CaseParams::default(),
        lhs_plan: vec![SeriesTerm::new(vec![], vec![], Param::float(PI), Param::int(1))],
        rhs_closed_plan: vec![],
        expected: Target::single(Rational::from_integer(1), Exponential::Pi),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: "even-dimensional unit-sphere volumes".into(),
    }
}

fn sqrt_case(id: &str, sign: i64) -> IdentityCase {
    let half = Param::real(rat(1, 2));
    let w = Param::float(SQRT_2 * sign as f64);
    IdentityCase {
        id: id.into(),
        description: format!(
            "2F1(i,-i;1/2;1/2) {} sqrt2*2F1(1/2+i,1/2-i;3/2;1/2)",
            if sign < 0 { "-" } else { "+" }
        ),
        params: CaseParams::default(),
        lhs_plan: vec![
            SeriesTerm::new(vec![i_unit(), neg_i()], vec![half.clone()], half.clone(), Param::int(1)),
            SeriesTerm::new(
                vec![half_plus(rat(1, 1)), half_plus(rat(-1, 1))],
                vec![Param::real(rat(3, 2))],
                half,
                w.clone(),
            ),
        ],
        rhs_closed_plan: vec![
            ClosedTerm {
                form: ClosedForm::SecondGaussHalf { a: i_unit(), b: neg_i() },
                weight: Param::int(1),
            },
            ClosedTerm {
                form: ClosedForm::BaileyHalf {
                    a: half_plus(rat(1, 1)),
                    c: Param::real(rat(3, 2)),
                },
                weight: w,
            },
        ],
        expected: Target::single(
            Rational::from_integer(1),
            if sign < 0 { Exponential::NegHalfPi } else { Exponential::HalfPi },
        ),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::Evaluated,
        reference: "square root of the Gelfond constant".into(),
    }
}

fn documented(id: &str, description: &str) -> IdentityCase {
    IdentityCase {
        id: id.into(),
        description: description.into(),
        params: CaseParams::default(),
        lhs_plan: vec![],
        rhs_closed_plan: vec![],
        expected: Target::single(Rational::from_integer(1), Exponential::Pi),
        claimed: None,
        erratum: Erratum::None,
        kind: CaseKind::DocumentedOnly,
        reference: "alternative expressions (not evaluated)".into(),
    }
}

/// `(d1, d2)` grid used for the unit-argument registry entries.
pub const THEOREM1_GRID: [((i64, i64), (i64, i64)); 5] = [
    ((1, 2), (3, 2)),
    ((2, 1), (3, 2)),
    ((1, 1), (-5, 2)),
    ((3, 1), (7, 4)),
    ((-1, 3), (5, 2)),
];

/// `(d1, d2)` grid used for the half-argument registry entries.
pub const THEOREM2_GRID: [((i64, i64), (i64, i64)); 5] = [
    ((1, 2), (3, 2)),
    ((1, 1), (1, 1)),
    ((1, 3), (5, 2)),
    ((2, 1), (-7, 3)),
    ((4, 3), (3, 1)),
];

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentityCase> {
    let mut cases = vec![gelfond_case(), bessel_case(), sphere_case()];
    for (k, &((p1, q1), (p2, q2))) in THEOREM1_GRID.iter().enumerate() {
        cases.push(
            theorem1_case(format!("thm1-{}", k + 1), rat(p1, q1), rat(p2, q2), rat(5, 2))
                .expect("grid is admissible"),
        );
    }
    for kind in [
        CorollaryKind::Cor1,
        CorollaryKind::Cor2,
        CorollaryKind::Cor3,
        CorollaryKind::Cor4,
    ] {
        for n in 1..=3 {
            cases.extend(corollary_case(kind, n).expect("n >= 1"));
        }
    }
    cases.push(sqrt_case("eq4.1a", 1));
    cases.push(sqrt_case("eq4.1b", -1));
    for (k, &((p1, q1), (p2, q2))) in THEOREM2_GRID.iter().enumerate() {
        cases.push(
            theorem2_case(format!("thm2-{}", k + 1), rat(p1, q1), rat(p2, q2))
                .expect("grid is admissible"),
        );
    }
    for (label, lambda) in [("0", rat(0, 1)), ("1/2", rat(1, 2)), ("1", rat(1, 1)), ("2", rat(2, 1))] {
        cases.push(gauss_pair_case(
            &format!("eq4.6-lambda{label}"),
            lambda,
            1,
            "lambda extension",
        ));
    }
    // the + sign is eq4.6 at lambda = 1/2
    let mut minus = gauss_pair_case("eq4.7", rat(1, 2), -1, "e^(-pi/2) via Gauss");
    minus.params.lambda = Some(-0.5);
    cases.push(minus);
    cases.push(documented(
        "mobius-product",
        "e^pi = (prod_k k^(-mu(k)/k))^sigma, sigma = sqrt(6 Li2(1)); conditionally convergent, not evaluated",
    ));
    cases.push(documented(
        "leibniz-sum",
        "e^pi = (sum_k (-1)^k/k!)^(-4s), s = sum_k (-1)^k/(2k+1); slowly convergent, not evaluated",
    ));
    cases
}

/// Is `d` admissible for the extended theorems (away from `0, -1, -2, ...`)?
pub fn admissible_d(d: Rational) -> bool {
    check_d(d).is_ok()
}
