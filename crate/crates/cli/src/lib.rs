//! Command-line front end: evaluate a series, run the identity registry,
//! print the exponential constants and the Heegner table.
//!
//! Exit codes: `0` everything passed, `1` a check or evaluation failed,
//! `2` bad usage.

mod parse;
mod report;

pub use parse::{parse_complex, parse_complex_list, ParseError};
pub use report::{format_float, report_json, Summary, REPORT_FIELDS};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gelfond::identities::CLOSED_TOLERANCE;
use gelfond::{
    gelfond, gelfond_lambda, heegner_row, registry, sqrt_gelfond_pair, sum_pfq, verify,
    IdentityCase, SeriesSpec, SumPolicy, SumStatus, VerificationReport, HEEGNER_NUMBERS,
};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "gelfond", version, about = "Hypergeometric identities for e^pi")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Args)]
struct Common {
    /// Summation tolerance (>= 1e-15).
    #[arg(long)]
    tol: Option<f64>,
    /// Term budget per series (>= 10).
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Sum pFq(upper; lower; z).
    Eval {
        /// Comma-separated upper parameters.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        upper: String,
        /// Comma-separated lower parameters.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        lower: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify registry identities.
    Verify {
        /// Glob on case ids, e.g. `thm1-*`.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// e^pi, e^(pi/2), e^(-pi/2) and e^(pi*lambda) by closed forms and by exp.
    Constants {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// e^(pi*sqrt(n)) against c^3 + 744 in double-double.
    Heegner {
        #[arg(long, value_parser = ["19", "43", "67", "163"])]
        n: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Default)]
pub struct CaseFilter {
    pub id: Option<glob::Pattern>,
    pub n: Option<u32>,
    pub lambda: Option<f64>,
}

impl CaseFilter {
    pub fn matches(&self, case: &IdentityCase) -> bool {
        self.id.as_ref().is_none_or(|p| p.matches(&case.id))
            && self.n.is_none_or(|n| case.params.n == Some(n))
            && self
                .lambda
                .is_none_or(|l| case.params.lambda.is_some_and(|x| (x - l).abs() <= 1e-12))
    }
}

#[derive(Debug, Clone)]
pub enum Command {
    Eval(SeriesSpec),
    Verify(CaseFilter),
    Constants { lambda: Option<f64> },
    Heegner { n: Option<u32> },
}

/// Everything a run needs; built only from argv.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub policy: SumPolicy,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// A usage problem, reported with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Invalid(String),
}

fn real_arg(flag: &str, text: &str) -> Result<f64, UsageError> {
    let z = parse_complex(text)?;
    if z.im != 0.0 {
        return Err(UsageError::Invalid(format!("--{flag} must be real, got {text}")));
    }
    Ok(z.re)
}

impl RunConfig {
    pub fn from_args<I, S>(argv: I) -> Result<RunConfig, UsageError>
    where
        I: IntoIterator<Item = S>,
        S: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv)?;
        let (command, common) = match cli.command {
            CliCommand::Eval {
                upper,
                lower,
                z,
                common,
            } => {
                let spec = SeriesSpec::new(
                    parse_complex_list(&upper)?,
                    parse_complex_list(&lower)?,
                    parse_complex(&z)?,
                );
                (Command::Eval(spec), common)
            }
            CliCommand::Verify {
                id,
                n,
                lambda,
                common,
            } => {
                let id = id
                    .map(|g| glob::Pattern::new(&g))
                    .transpose()
                    .map_err(|e| UsageError::Invalid(format!("--id: {e}")))?;
                let lambda = lambda.map(|l| real_arg("lambda", &l)).transpose()?;
                (Command::Verify(CaseFilter { id, n, lambda }), common)
            }
            CliCommand::Constants { lambda, common } => {
                let lambda = lambda.map(|l| real_arg("lambda", &l)).transpose()?;
                (Command::Constants { lambda }, common)
            }
            CliCommand::Heegner { n, common } => {
                let n = n.map(|s| s.parse().expect("restricted by clap"));
                (Command::Heegner { n }, common)
            }
        };
        let mut policy = SumPolicy::default();
        if let Some(tol) = common.tol {
            policy.tolerance = tol;
        }
        if let Some(m) = common.max_terms {
            policy.max_terms = m;
        }
        policy
            .validate()
            .map_err(|e| UsageError::Invalid(e.to_string()))?;
        Ok(RunConfig {
            command,
            policy,
            format: common.format,
            out: common.out,
        })
    }
}

/// Parse `argv` (program name first) and run it. Never panics on bad input.
pub fn run_args<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    match RunConfig::from_args(argv) {
        Ok(config) => run(&config, stdout, stderr),
        Err(UsageError::Clap(e)) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut buf = Vec::new();
    let code = match &config.command {
        Command::Eval(spec) => run_eval(spec, config, &mut buf, stderr),
        Command::Verify(filter) => run_verify(filter, config, &mut buf, stderr),
        Command::Constants { lambda } => run_constants(*lambda, config, &mut buf, stderr),
        Command::Heegner { n } => run_heegner(*n, config, &mut buf, stderr),
    };
    let code = match code {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &config.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            w.write_all(&buf)?;
            w.flush()
        }),
        None => stdout.write_all(&buf).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

type Step = Result<i32, UsageError>;

fn io_err(e: io::Error) -> UsageError {
    UsageError::Invalid(e.to_string())
}

fn run_eval(spec: &SeriesSpec, config: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> Step {
    let result = match sum_pfq(spec, &config.policy) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Ok(EXIT_FAILURE);
        }
    };
    let f = |x: f64| format_float(x).unwrap_or_else(|| "null".into());
    let status = result.status.as_str();
    match config.format {
        Format::Text => {
            let v = result.value;
            writeln!(out, "value         {:.16e} {:+.16e}i", v.re, v.im).map_err(io_err)?;
            writeln!(out, "terms_used    {}", result.terms_used).map_err(io_err)?;
            writeln!(out, "tail_estimate {:.3e}", result.tail_estimate).map_err(io_err)?;
            writeln!(out, "status        {status}").map_err(io_err)?;
        }
        Format::Json => {
            writeln!(
                out,
                "{{\"value_re\":{},\"value_im\":{},\"terms_used\":{},\"tail_estimate\":{},\"status\":\"{status}\"}}",
                f(result.value.re),
                f(result.value.im),
                result.terms_used,
                f(result.tail_estimate)
            )
            .map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["value_re", "value_im", "terms_used", "tail_estimate", "status"])
                .map_err(|e| UsageError::Invalid(e.to_string()))?;
            w.write_record([
                f(result.value.re),
                f(result.value.im),
                result.terms_used.to_string(),
                f(result.tail_estimate),
                status.to_owned(),
            ])
            .map_err(|e| UsageError::Invalid(e.to_string()))?;
            w.flush().map_err(io_err)?;
        }
    }
    Ok(match result.status {
        SumStatus::Converged | SumStatus::Truncated => EXIT_OK,
        _ => EXIT_FAILURE,
    })
}

/// Verify the selected cases concurrently; results keep registry order.
pub fn verify_cases(filter: &CaseFilter, policy: &SumPolicy) -> Vec<VerificationReport> {
    let cases: Vec<IdentityCase> = registry().into_iter().filter(|c| filter.matches(c)).collect();
    cases.par_iter().map(|c| verify(c, policy)).collect()
}

fn run_verify(filter: &CaseFilter, config: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> Step {
    let reports = verify_cases(filter, &config.policy);
    if reports.is_empty() {
        return Err(UsageError::Invalid("no registry case matches the filter".into()));
    }
    let summary = Summary::of(&reports);
    match config.format {
        Format::Text => {
            report::write_text(out, &reports).map_err(io_err)?;
            writeln!(out, "{summary}").map_err(io_err)?;
        }
        Format::Json => report::write_json(out, &reports).map_err(io_err)?,
        Format::Csv => report::write_csv(out, &reports).map_err(io_err)?,
    }
    if config.format != Format::Text {
        let _ = writeln!(stderr, "{summary}");
    }
    Ok(if summary.failed > 0 { EXIT_FAILURE } else { EXIT_OK })
}

struct ConstantRow {
    name: String,
    closed: Result<f64, String>,
    oracle: f64,
}

fn run_constants(lambda: Option<f64>, config: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> Step {
    let (plus, minus) = sqrt_gelfond_pair();
    let mut rows = vec![
        ConstantRow {
            name: "e^pi".into(),
            closed: Ok(gelfond()),
            oracle: PI.exp(),
        },
        ConstantRow {
            name: "e^(pi/2)".into(),
            closed: Ok(plus),
            oracle: (PI / 2.0).exp(),
        },
        ConstantRow {
            name: "e^(-pi/2)".into(),
            closed: Ok(minus),
            oracle: (-PI / 2.0).exp(),
        },
    ];
    if let Some(l) = lambda {
        rows.push(ConstantRow {
            name: format!("e^(pi*{l})"),
            closed: gelfond_lambda(l).map_err(|e| e.to_string()),
            oracle: (PI * l).exp(),
        });
    }
    let mut failed = false;
    let mut table = Vec::new();
    for row in &rows {
        let (closed, abs, rel) = match row.closed {
            Ok(v) => {
                let abs = (v - row.oracle).abs();
                let rel = abs / row.oracle.abs();
                failed |= rel.is_nan() || rel > CLOSED_TOLERANCE;
                (Some(v), Some(abs), Some(rel))
            }
            Err(ref e) => {
                failed = true;
                let _ = writeln!(stderr, "error: {}: {e}", row.name);
                (None, None, None)
            }
        };
        table.push((row.name.clone(), closed, row.oracle, abs, rel));
    }
    let f = |x: Option<f64>| x.and_then(format_float);
    match config.format {
        Format::Text => {
            for (name, closed, oracle, _, rel) in &table {
                writeln!(
                    out,
                    "{name:<14} closed {}  exp {}  rel {}",
                    f(*closed).unwrap_or_else(|| "-".into()),
                    f(Some(*oracle)).unwrap_or_default(),
                    rel.map_or_else(|| "-".into(), |r| format!("{r:.2e}"))
                )
                .map_err(io_err)?;
            }
        }
        Format::Json => {
            let null = || "null".to_owned();
            let items: Vec<String> = table
                .iter()
                .map(|(name, closed, oracle, abs, rel)| {
                    format!(
                        "{{\"name\":{},\"closed_value\":{},\"oracle_value\":{},\"abs_residual\":{},\"rel_residual\":{}}}",
                        serde_json::Value::String(name.clone()),
                        f(*closed).unwrap_or_else(null),
                        f(Some(*oracle)).unwrap_or_else(null),
                        f(*abs).unwrap_or_else(null),
                        f(*rel).unwrap_or_else(null)
                    )
                })
                .collect();
            writeln!(out, "[\n  {}\n]", items.join(",\n  ")).map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| UsageError::Invalid(e.to_string());
            w.write_record(["name", "closed_value", "oracle_value", "abs_residual", "rel_residual"])
                .map_err(csv_err)?;
            for (name, closed, oracle, abs, rel) in &table {
                w.write_record([
                    name.clone(),
                    f(*closed).unwrap_or_default(),
                    f(Some(*oracle)).unwrap_or_default(),
                    f(*abs).unwrap_or_default(),
                    f(*rel).unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(if failed { EXIT_FAILURE } else { EXIT_OK })
}

fn run_heegner(n: Option<u32>, config: &RunConfig, out: &mut Vec<u8>, _stderr: &mut dyn Write) -> Step {
    let ns: Vec<u32> = match n {
        Some(n) => vec![n],
        None => HEEGNER_NUMBERS.iter().map(|&(n, _)| n).collect(),
    };
    let rows = ns
        .into_iter()
        .map(heegner_row)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| UsageError::Invalid(e.to_string()))?;
    match config.format {
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "n={:<4} value {}  reference {}  deviation {}  bound {:.2e}",
                    r.n,
                    r.value.to_scientific(31),
                    r.reference,
                    r.deviation.to_scientific(12),
                    r.error_bound
                )
                .map_err(io_err)?;
            }
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{{\"n\":{},\"value\":\"{}\",\"reference\":\"{}\",\"deviation\":{},\"error_bound\":{}}}",
                        r.n,
                        r.value.to_scientific(31),
                        r.reference,
                        format_float(r.deviation.to_f64()).unwrap_or_else(|| "null".into()),
                        format_float(r.error_bound).unwrap_or_else(|| "null".into())
                    )
                })
                .collect();
            writeln!(out, "[\n  {}\n]", items.join(",\n  ")).map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| UsageError::Invalid(e.to_string());
            w.write_record(["n", "value", "reference", "deviation", "error_bound"])
                .map_err(csv_err)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.value.to_scientific(31),
                    r.reference.to_string(),
                    format_float(r.deviation.to_f64()).unwrap_or_default(),
                    format_float(r.error_bound).unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}
