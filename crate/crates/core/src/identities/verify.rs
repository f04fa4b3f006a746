use super::{CaseKind, IdentityCase};
use crate::series::{sum_pfq, sum_pfq_unit, SumPolicy, SumStatus};
use crate::{ComplexValue, Result};

/// Closed form vs expected constant.
pub const CLOSED_TOLERANCE: f64 = 1e-12;
/// Direct series (argument off the unit circle) vs expected constant.
pub const HALF_ARGUMENT_TOLERANCE: f64 = 1e-11;
/// Accelerated series at unit argument vs expected constant.
pub const UNIT_ARGUMENT_TOLERANCE: f64 = 1e-6;
/// Summation tolerance requested from the accelerator at unit argument.
pub const UNIT_ARGUMENT_SUM_TOLERANCE: f64 = 1e-8;
/// Allowed imaginary residue, relative to `max(1, |value|)`.
pub const REALNESS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Expected-divergent case whose series was reported divergent.
    SkippedDivergent,
    /// Documentation-only entry.
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "Pass",
            Verdict::Fail => "Fail",
            Verdict::SkippedDivergent => "SkippedDivergent",
            Verdict::Skipped => "Skipped",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub n: Option<u32>,
    pub lambda: Option<f64>,
    pub closed_value: Option<f64>,
    pub series_value: Option<f64>,
    pub expected_value: f64,
    /// Residual of the closed form when there is one, else of the series.
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub tolerance: f64,
    pub series_rel_residual: Option<f64>,
    pub series_tolerance: f64,
    pub series_status: Option<SumStatus>,
    /// Largest imaginary residue seen, relative to `max(1, |value|)`.
    pub imag_residual: f64,
    /// Printed right-hand side and its relative residual against the best
    /// available evaluation.
    pub claimed_value: Option<f64>,
    pub claimed_rel_residual: Option<f64>,
    pub erratum: Option<String>,
    pub verdict: Verdict,
    /// First evaluation error, if any.
    pub detail: Option<String>,
}

impl VerificationReport {
    /// Whether the printed right-hand side agrees with the evaluation.
    pub fn claim_reproduced(&self) -> Option<bool> {
        self.claimed_rel_residual.map(|r| r <= self.tolerance.max(self.series_tolerance))
    }
}

fn relative(value: f64, expected: f64) -> f64 {
    (value - expected).abs() / expected.abs().max(f64::MIN_POSITIVE)
}

fn imag_ratio(v: ComplexValue) -> f64 {
    v.im.abs() / v.norm().max(1.0)
}

fn closed_value(case: &IdentityCase) -> Option<Result<ComplexValue>> {
    if case.rhs_closed_plan.is_empty() {
        return None;
    }
    let mut total = ComplexValue::new(0.0, 0.0);
    for term in &case.rhs_closed_plan {
        match term.form.evaluate() {
            Ok(v) => total += v * term.weight.value(),
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(total))
}

struct SeriesOutcome {
    value: ComplexValue,
    status: SumStatus,
    unit: bool,
}

fn series_value(case: &IdentityCase, policy: &SumPolicy) -> Option<Result<SeriesOutcome>> {
    if case.lhs_plan.is_empty() {
        return None;
    }
    let mut total = ComplexValue::new(0.0, 0.0);
    let mut status = SumStatus::Truncated;
    let mut unit = false;
    for term in &case.lhs_plan {
        let spec = term.spec();
        let res = if term.is_unit_argument() && spec.p() == spec.q() + 1 {
            unit = true;
            let unit_policy = SumPolicy {
                tolerance: policy.tolerance.max(UNIT_ARGUMENT_SUM_TOLERANCE),
                ..*policy
            };
            sum_pfq_unit(&spec, &unit_policy)
        } else {
            sum_pfq(&spec, policy)
        };
        match res {
            Ok(r) => {
                status = status.worst(r.status);
                total += r.value * term.weight.value();
            }
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(SeriesOutcome {
        value: total,
        status,
        unit,
    }))
}

/// Evaluate a case by its closed form and its series and compare both with
/// the exponential oracle. Evaluation errors become `Fail` verdicts.
pub fn verify(case: &IdentityCase, policy: &SumPolicy) -> VerificationReport {
    let expected = case.expected.value();
    let mut report = VerificationReport {
        id: case.id.clone(),
        n: case.params.n,
        lambda: case.params.lambda,
        closed_value: None,
        series_value: None,
        expected_value: expected,
        abs_residual: None,
        rel_residual: None,
        tolerance: CLOSED_TOLERANCE,
        series_rel_residual: None,
        series_tolerance: HALF_ARGUMENT_TOLERANCE,
        series_status: None,
        imag_residual: 0.0,
        claimed_value: case.claimed.as_ref().map(|t| t.value()),
        claimed_rel_residual: None,
        erratum: case.erratum.note().map(str::to_owned),
        verdict: Verdict::Fail,
        detail: None,
    };

    if case.kind == CaseKind::DocumentedOnly {
        report.verdict = Verdict::Skipped;
        return report;
    }
    if let Err(e) = policy.validate() {
        report.detail = Some(e.to_string());
        return report;
    }

    let mut ok = true;
    match closed_value(case) {
        Some(Ok(v)) => {
            report.closed_value = Some(v.re);
            report.imag_residual = report.imag_residual.max(imag_ratio(v));
            report.abs_residual = Some((v.re - expected).abs());
            report.rel_residual = Some(relative(v.re, expected));
        }
        Some(Err(e)) => {
            ok = false;
            report.detail = Some(format!("closed form: {e}"));
        }
        None => {}
    }

    match series_value(case, policy) {
        Some(Ok(out)) => {
            report.series_status = Some(out.status);
            if out.unit {
                report.series_tolerance = UNIT_ARGUMENT_TOLERANCE;
            }
            if out.status != SumStatus::Divergent {
                report.series_value = Some(out.value.re);
                report.imag_residual = report.imag_residual.max(imag_ratio(out.value));
                let rel = relative(out.value.re, expected);
                report.series_rel_residual = Some(rel);
                if report.rel_residual.is_none() {
                    report.abs_residual = Some((out.value.re - expected).abs());
                    report.rel_residual = Some(rel);
                    report.tolerance = report.series_tolerance;
                }
            }
        }
        Some(Err(e)) => {
            ok = false;
            report.detail.get_or_insert(format!("series: {e}"));
        }
        None => {}
    }

    if let Some(claimed) = report.claimed_value {
        let best = report.closed_value.or(report.series_value);
        report.claimed_rel_residual = best.map(|v| relative(v, claimed));
    }

    if case.kind == CaseKind::ExpectedDivergent {
        report.verdict = if report.series_status == Some(SumStatus::Divergent) {
            Verdict::SkippedDivergent
        } else {
            Verdict::Fail
        };
        return report;
    }

    let closed_ok = report
        .closed_value
        .is_none_or(|_| report.rel_residual.is_some_and(|r| r <= CLOSED_TOLERANCE));
    let series_ok = match report.series_status {
        None => true,
        Some(SumStatus::Converged | SumStatus::Truncated) => report
            .series_rel_residual
            .is_some_and(|r| r <= report.series_tolerance),
        Some(_) => false,
    };
    let real_ok = report.imag_residual <= REALNESS_TOLERANCE;
    report.verdict = if ok && closed_ok && series_ok && real_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report
}
