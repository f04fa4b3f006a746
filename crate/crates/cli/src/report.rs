//! Report serialization. JSON and CSV are stable; text is for people.

use gelfond::{SumStatus, Verdict, VerificationReport};
use std::io::{self, Write};

/// The fields every JSON object and CSV row carries, in order.
pub const REPORT_FIELDS: [&str; 10] = [
    "id",
    "n",
    "lambda",
    "closed_value",
    "series_value",
    "expected_value",
    "abs_residual",
    "rel_residual",
    "series_status",
    "verdict",
];

/// 17 significant digits; non-finite values have no JSON spelling.
pub fn format_float(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

fn json_number(x: Option<f64>) -> String {
    x.and_then(format_float).unwrap_or_else(|| "null".into())
}

fn json_string(s: &str) -> String {
    serde_json::Value::String(s.to_owned()).to_string()
}

/// Column values shared by the JSON and CSV writers. `None` is null/empty.
fn cells(r: &VerificationReport) -> [Option<String>; 10] {
    let num = |x: Option<f64>| x.and_then(format_float);
    [
        Some(r.id.clone()),
        r.n.map(|n| n.to_string()),
        num(r.lambda),
        num(r.closed_value),
        num(r.series_value),
        num(Some(r.expected_value)),
        num(r.abs_residual),
        num(r.rel_residual),
        r.series_status.map(|s| s.as_str().to_owned()),
        Some(r.verdict.as_str().to_owned()),
    ]
}

pub fn report_json(r: &VerificationReport) -> String {
    let fields = [
        json_string(&r.id),
        r.n.map_or_else(|| "null".into(), |n| n.to_string()),
        json_number(r.lambda),
        json_number(r.closed_value),
        json_number(r.series_value),
        json_number(Some(r.expected_value)),
        json_number(r.abs_residual),
        json_number(r.rel_residual),
        r.series_status
            .map_or_else(|| "null".into(), |s| json_string(s.as_str())),
        json_string(r.verdict.as_str()),
    ];
    let body: Vec<String> = REPORT_FIELDS
        .iter()
        .zip(fields)
        .map(|(k, v)| format!("\"{k}\":{v}"))
        .collect();
    format!("{{{}}}", body.join(","))
}

pub fn write_json(out: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(out, "[")?;
    for (k, r) in reports.iter().enumerate() {
        let sep = if k + 1 < reports.len() { "," } else { "" };
        writeln!(out, "  {}{sep}", report_json(r))?;
    }
    writeln!(out, "]")
}

pub fn write_csv(out: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_FIELDS)?;
    for r in reports {
        w.write_record(cells(r).iter().map(|c| c.as_deref().unwrap_or("")))?;
    }
    w.flush()
}

fn text_float(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), |v| format!("{v:.15e}"))
}

pub fn write_text(out: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        let mut label = r.id.clone();
        if let Some(n) = r.n {
            label.push_str(&format!(" n={n}"));
        }
        if let Some(l) = r.lambda {
            label.push_str(&format!(" lambda={l}"));
        }
        writeln!(out, "{:<16} {label}", r.verdict.as_str())?;
        if r.verdict == Verdict::Skipped {
            continue;
        }
        writeln!(out, "    expected   {}", text_float(Some(r.expected_value)))?;
        if let Some(v) = r.closed_value {
            writeln!(
                out,
                "    closed     {}  rel {}",
                text_float(Some(v)),
                text_float(r.rel_residual)
            )?;
        }
        if let Some(status) = r.series_status {
            let value = match status {
                SumStatus::Divergent => "divergent".to_owned(),
                _ => text_float(r.series_value),
            };
            writeln!(
                out,
                "    series     {value}  rel {}  [{status}, tol {:.0e}]",
                text_float(r.series_rel_residual),
                r.series_tolerance
            )?;
        }
        if let Some(note) = &r.erratum {
            writeln!(out, "    note       {note}")?;
        }
        if r.claim_reproduced() == Some(false) {
            writeln!(
                out,
                "    printed    {} not reproduced (rel {})",
                text_float(r.claimed_value),
                text_float(r.claimed_rel_residual)
            )?;
        }
        if let Some(detail) = &r.detail {
            writeln!(out, "    error      {detail}")?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.passed += 1,
                Verdict::Fail => s.failed += 1,
                Verdict::Skipped | Verdict::SkippedDivergent => s.skipped += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "passed/failed/skipped: {}/{}/{}",
            self.passed, self.failed, self.skipped
        )
    }
}
