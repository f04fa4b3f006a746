use gelfond::identities::{
    admissible_d, theorem1_coefficients, theorem2_coefficients, CaseKind, Exponential,
    CLOSED_TOLERANCE, HALF_ARGUMENT_TOLERANCE, REALNESS_TOLERANCE, UNIT_ARGUMENT_TOLERANCE,
};
use gelfond::{
    corollary_case, registry, theorem1, theorem2, verify, CorollaryKind, Rational, SumPolicy,
    Verdict,
};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[test]
fn corollary_coefficient_algebra() {
    for n in 1..=50i64 {
        // first family: d1 = 2/(5n-1), d2 = 15/(2(8n-3))
        assert_eq!(rat(5 * n - 1, 10) + rat(8 * n - 3, 16) + rat(23, 80), int(n));
        assert_eq!(rat(5 * n - 1, 10) - rat(8 * n - 3, 16) - rat(7, 80), int(0));
        assert_eq!(
            theorem1_coefficients(rat(2, 5 * n - 1), rat(15, 2 * (8 * n - 3))),
            (int(n), int(0))
        );
        // half-argument family
        assert_eq!(
            theorem2_coefficients(rat(1, 7 * n - 5), rat(15, 24 * n - 14)),
            (int(n), int(0))
        );

        let u = n as u32;
        let cases = corollary_case(CorollaryKind::Cor2, u).unwrap();
        assert_eq!(cases[0].expected.coefficient(Exponential::Pi), int(0));
        assert_eq!(cases[0].expected.coefficient(Exponential::NegPi), int(n));

        let cases = corollary_case(CorollaryKind::Cor3, u).unwrap();
        let printed = rat(40 * n - 3, 10);
        assert_eq!(cases[0].expected.coefficient(Exponential::Pi), printed);
        assert_eq!(cases[0].expected.coefficient(Exponential::NegPi), printed);
        assert_eq!(cases[1].expected.coefficient(Exponential::Pi), int(n));
        assert_eq!(cases[1].expected.coefficient(Exponential::NegPi), int(n));

        let case = &corollary_case(CorollaryKind::Cor4, u).unwrap()[0];
        assert_eq!(case.expected.coefficient(Exponential::HalfPi), int(n));
        assert_eq!(case.expected.coefficient(Exponential::NegHalfPi), int(0));
    }
}

fn d_value() -> impl Strategy<Value = Rational> {
    (300i64..=5000).prop_map(|k| rat(k, 1000))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn theorem1_closed_form_matches_expected(d1 in d_value(), d2 in d_value()) {
        let case = theorem1(d1, d2).unwrap();
        let closed: f64 = case
            .rhs_closed_plan
            .iter()
            .map(|t| (t.form.evaluate().unwrap() * t.weight.value()).re)
            .sum();
        let expected = case.expected.value();
        prop_assert!((closed - expected).abs() <= CLOSED_TOLERANCE * expected.abs());
    }

    #[test]
    fn theorem2_series_matches_expected(d1 in d_value(), d2 in d_value()) {
        let report = verify(&theorem2(d1, d2).unwrap(), &SumPolicy::default());
        prop_assert_eq!(report.verdict, Verdict::Pass, "{:?}", report);
        prop_assert!(report.series_rel_residual.unwrap() <= HALF_ARGUMENT_TOLERANCE);
    }

    #[test]
    fn admissibility(k in -50i64..50) {
        let d = rat(k, 2);
        let expected = !(k <= 0 && k % 2 == 0);
        prop_assert_eq!(admissible_d(d), expected);
        prop_assert_eq!(theorem1(d, rat(3, 2)).is_ok(), expected);
    }
}

#[test]
fn registry_is_real_and_green() {
    let policy = SumPolicy::default();
    for case in registry() {
        let report = verify(&case, &policy);
        assert!(!report.verdict.is_failure(), "{report:?}");
        assert!(report.imag_residual <= REALNESS_TOLERANCE, "{}", report.id);
        match case.kind {
            CaseKind::DocumentedOnly => assert_eq!(report.verdict, Verdict::Skipped),
            CaseKind::ExpectedDivergent => assert_eq!(report.verdict, Verdict::SkippedDivergent),
            CaseKind::Evaluated => assert_eq!(report.verdict, Verdict::Pass),
        }
    }
}

#[test]
fn unit_argument_grid_series() {
    let policy = SumPolicy::default();
    for case in registry().iter().filter(|c| c.id == "eq1.1" || c.id.starts_with("thm1-")) {
        let report = verify(case, &policy);
        let rel = report.series_rel_residual.unwrap();
        assert!(rel <= UNIT_ARGUMENT_TOLERANCE, "{}: {rel:e}", case.id);
    }
}
