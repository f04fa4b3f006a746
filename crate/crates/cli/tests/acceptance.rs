//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use gelfond::dd::{dd_exp, two_sum, DDReal};
use gelfond::gamma::gamma;
use gelfond::identities::{theorem2_coefficients, Param};
use gelfond::{
    contiguous_reduce_3f2, corollary_case, gelfond_lambda, heegner_table, registry,
    second_gauss_ext_half, bailey_ext_half, sum_pfq, theorem1, theorem2, verify, ComplexValue,
    CorollaryKind, IdentityCase, Rational, SeriesSpec, SumPolicy, SumStatus, Verdict,
    VerificationReport,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn r(x: f64) -> ComplexValue {
    c(x, 0.0)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn policy() -> SumPolicy {
    SumPolicy::default()
}

fn case(id: &str) -> IdentityCase {
    registry().into_iter().find(|c| c.id == id).expect(id)
}

fn closed_total(case: &IdentityCase) -> f64 {
    case.rhs_closed_plan
        .iter()
        .map(|t| (t.form.evaluate().unwrap() * t.weight.value()).re)
        .sum()
}

/// `d = k/1000` with `d` in `[0.3, 5]`.
fn random_d(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(300..=5000), 1000)
}

fn pass(report: &VerificationReport, closed_tol: f64) -> Result<(), String> {
    ensure(report.verdict == Verdict::Pass, || format!("{}: {:?}", report.id, report.verdict))?;
    let rel = report.rel_residual.ok_or_else(|| format!("{}: no closed residual", report.id))?;
    ensure(rel <= closed_tol, || format!("{}: closed rel {rel:e}", report.id))
}

fn c1_gelfond_reproduction() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let code = gelfond_cli::run_args(
        ["gelfond", "constants", "--format", "json"],
        &mut out,
        &mut std::io::sink(),
    );
    within(start.elapsed(), Duration::from_secs(1))?;
    ensure(code == 0, || format!("exit code {code}"))?;
    let rows: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let row = &rows[0];
    ensure(row["name"] == "e^pi", || format!("first row {row}"))?;
    let v = row["closed_value"].as_f64().ok_or("missing closed value")?;
    // 23.140692632779269005729086367948547380266106242600...
    let digits = 23.140_692_632_779_27;
    ensure((v - digits).abs() < 5e-14, || format!("{v} differs in 15 digits"))?;
    ensure(format!("{v:.12}").starts_with("23.1406926327"), || format!("{v}"))?;
    let r = rel(v, PI.exp());
    ensure(r <= 1e-13, || format!("rel {r:e}"))?;
    Ok(format!("e^pi = {v:.15} (rel {r:.1e})"))
}

fn c2_gelfond_identity() -> Outcome {
    let report = verify(&case("eq1.1"), &policy());
    pass(&report, 1e-12)?;
    let s = report.series_rel_residual.ok_or("no series")?;
    ensure(s <= 1e-6, || format!("series rel {s:e}"))?;
    Ok(format!(
        "closed rel {:.1e}, series rel {s:.1e}",
        report.rel_residual.unwrap()
    ))
}

fn c3_theorem1_grid() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(3);
    let mut worst = 0f64;
    for _ in 0..100 {
        let (d1, d2) = (random_d(&mut rng), random_d(&mut rng));
        let case = theorem1(d1, d2).map_err(|e| e.to_string())?;
        let e = rel(closed_total(&case), case.expected.value());
        ensure(e <= 1e-12, || format!("({d1}, {d2}): rel {e:e}"))?;
        worst = worst.max(e);
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("100 draws, worst rel {worst:.1e}"))
}

fn third_params(case: &IdentityCase) -> [Param; 4] {
    [
        case.lhs_plan[0].upper[2].clone(),
        case.lhs_plan[0].lower[1].clone(),
        case.lhs_plan[1].upper[2].clone(),
        case.lhs_plan[1].lower[1].clone(),
    ]
}

fn params(v: [(i64, i64); 4]) -> [Param; 4] {
    v.map(|(n, d)| Param::real(rat(n, d)))
}

fn c4_corollary1() -> Outcome {
    let approx = [23.1407, 46.2814, 69.4221];
    for n in 1..=3u32 {
        let case = &corollary_case(CorollaryKind::Cor1, n).map_err(|e| e.to_string())?[0];
        let report = verify(case, &policy());
        pass(&report, 1e-12)?;
        let v = report.closed_value.unwrap();
        ensure((v - approx[n as usize - 1]).abs() < 1e-4, || format!("n={n}: {v}"))?;
        ensure(rel(v, f64::from(n) * PI.exp()) <= 1e-12, || format!("n={n}: {v}"))?;
    }
    let two = &corollary_case(CorollaryKind::Cor1, 2).unwrap()[0];
    ensure(third_params(two) == params([(11, 9), (2, 9), (41, 26), (15, 26)]), || {
        "n=2 parameters".into()
    })?;
    let three = &corollary_case(CorollaryKind::Cor1, 3).unwrap()[0];
    ensure(third_params(three) == params([(8, 7), (1, 7), (19, 14), (5, 14)]), || {
        "n=3 parameters".into()
    })?;
    Ok("n e^pi for n = 1..3, parameter tuples exact".into())
}

fn c5_corollary2() -> Outcome {
    for n in 1..=3u32 {
        let cases = corollary_case(CorollaryKind::Cor2, n).map_err(|e| e.to_string())?;
        let fixed = verify(&cases[0], &policy());
        pass(&fixed, 1e-12)?;
        let v = fixed.closed_value.unwrap();
        ensure(rel(v, f64::from(n) * (-PI).exp()) <= 1e-12, || format!("n={n}: {v}"))?;
        let printed = verify(&cases[1], &policy());
        ensure(printed.series_status == Some(SumStatus::Divergent), || {
            format!("n={n} printed: {:?}", printed.series_status)
        })?;
        ensure(printed.verdict == Verdict::SkippedDivergent, || format!("{:?}", printed.verdict))?;
    }
    Ok("n e^-pi with lower 5/2; printed 3/2 companions Divergent".into())
}

fn c6_corollary3() -> Outcome {
    let cosh2 = PI.exp() + (-PI).exp();
    for n in 1..=3u32 {
        let nf = f64::from(n);
        let cases = corollary_case(CorollaryKind::Cor3, n).map_err(|e| e.to_string())?;
        let printed = verify(&cases[0], &policy());
        pass(&printed, 1e-12)?;
        let v = printed.closed_value.unwrap();
        ensure(rel(v, (4.0 * nf - 0.3) * cosh2) <= 1e-12, || format!("printed n={n}: {v}"))?;
        ensure(printed.claim_reproduced() == Some(false), || {
            format!("printed n={n}: claim unexpectedly reproduced")
        })?;
        let fixed = verify(&cases[1], &policy());
        pass(&fixed, 1e-12)?;
        let v = fixed.closed_value.unwrap();
        ensure(rel(v, nf * cosh2) <= 1e-12, || format!("corrected n={n}: {v}"))?;
    }
    let mut out = Vec::new();
    gelfond_cli::run_args(
        ["gelfond", "verify", "--id", "cor3-*-printed"],
        &mut out,
        &mut std::io::sink(),
    );
    let text = String::from_utf8(out).unwrap();
    ensure(text.matches("not reproduced").count() == 3, || text.clone())?;
    Ok("printed -> (4n-3/10)(e^pi+e^-pi), corrected -> n(e^pi+e^-pi); report marks claim".into())
}

fn c7_theorem2() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst = 0f64;
    for _ in 0..100 {
        let (d1, d2) = (random_d(&mut rng), random_d(&mut rng));
        let report = verify(&theorem2(d1, d2).map_err(|e| e.to_string())?, &policy());
        let s = report.series_rel_residual.ok_or("no series value")?;
        ensure(report.verdict == Verdict::Pass && s <= 1e-11, || {
            format!("({d1}, {d2}): {:?} rel {s:e}", report.verdict)
        })?;
        worst = worst.max(s);
    }
    ensure(theorem2_coefficients(rat(1, 2), rat(3, 2)) == (rat(1, 1), rat(0, 1)), || {
        "coefficients at (1/2, 3/2)".into()
    })?;
    Ok(format!("100 draws, worst series rel {worst:.1e}; (1/2, 3/2) -> (1, 0)"))
}

fn admissible_random_d(rng: &mut StdRng) -> f64 {
    loop {
        let d: f64 = rng.gen_range(-5.0..5.0);
        if d.abs() > 0.05 && (d > 0.0 || (d - d.round()).abs() > 0.05) {
            return d;
        }
    }
}

fn c8_extension_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let (i, half) = (c(0.0, 1.0), r(0.5));
    let mut worst = 0f64;
    for _ in 0..100 {
        let d = r(admissible_random_d(&mut rng));
        let closed = second_gauss_ext_half(i, -i, d).map_err(|e| e.to_string())?;
        let spec = SeriesSpec::new(vec![i, -i, d + 1.0], vec![r(1.5), d], half);
        let series = sum_pfq(&spec, &policy()).map_err(|e| e.to_string())?.value;
        let e = (closed - series).norm() / series.norm();
        ensure(e <= 1e-11, || format!("second Gauss ext d={d}: rel {e:e}"))?;
        worst = worst.max(e);

        let d = r(admissible_random_d(&mut rng));
        let a = c(0.5, 1.0);
        let closed = bailey_ext_half(a, r(1.5), d).map_err(|e| e.to_string())?;
        let spec = SeriesSpec::new(vec![a, a.conj(), d + 1.0], vec![r(2.5), d], half);
        let series = sum_pfq(&spec, &policy()).map_err(|e| e.to_string())?.value;
        let e = (closed - series).norm() / series.norm();
        ensure(e <= 1e-11, || format!("Bailey ext d={d}: rel {e:e}"))?;
        worst = worst.max(e);
    }
    Ok(format!("2 x 100 draws, worst rel {worst:.1e}"))
}

fn c9_corollary4() -> Outcome {
    let approx = [4.81048, 9.62095, 14.43143];
    for n in 1..=3u32 {
        let case = &corollary_case(CorollaryKind::Cor4, n).map_err(|e| e.to_string())?[0];
        let report = verify(case, &policy());
        pass(&report, 1e-11)?;
        let s = report.series_rel_residual.unwrap();
        ensure(s <= 1e-11, || format!("n={n}: series rel {s:e}"))?;
        let v = report.closed_value.unwrap();
        ensure((v - approx[n as usize - 1]).abs() < 1e-5, || format!("n={n}: {v}"))?;
    }
    let two = &corollary_case(CorollaryKind::Cor4, 2).unwrap()[0];
    ensure(third_params(two) == params([(10, 9), (1, 9), (49, 34), (15, 34)]), || {
        "n=2 parameters".into()
    })?;
    Ok("n e^(pi/2) for n = 1..3, n=2 tuple exact".into())
}

fn c10_lambda_extension() -> Outcome {
    let mut worst = 0f64;
    for l in [0.0, 0.5, 1.0, 2.0, 19f64.sqrt(), 43f64.sqrt()] {
        let v = gelfond_lambda(l).map_err(|e| e.to_string())?;
        let e = rel(v, (PI * l).exp());
        ensure(e <= 1e-11, || format!("lambda={l}: rel {e:e}"))?;
        worst = worst.max(e);
    }
    Ok(format!("6 values, worst rel {worst:.1e}"))
}

fn c11_heegner() -> Outcome {
    let start = Instant::now();
    let rows = heegner_table();
    within(start.elapsed(), Duration::from_secs(1))?;
    for row in &rows {
        ensure(row.value.round_to_i128() == row.reference, || format!("n={} rounding", row.n))?;
    }
    let dev: Vec<f64> = rows.iter().map(|r| r.deviation.to_f64()).collect();
    ensure((dev[0] - 0.2223).abs() <= 1e-3, || format!("dev19 {}", dev[0]))?;
    ensure(rel(dev[1], 2.2e-4) <= 0.05, || format!("dev43 {:e}", dev[1]))?;
    ensure(rel(dev[2], 1.3e-6) <= 0.05, || format!("dev67 {:e}", dev[2]))?;
    ensure((3.75e-13..=1.5e-12).contains(&dev[3]), || format!("dev163 {:e}", dev[3]))?;
    Ok(format!(
        "deviations {:.4} {:.3e} {:.3e} {:.3e} (bound {:.1e})",
        dev[0], dev[1], dev[2], dev[3], rows[3].error_bound
    ))
}

fn c12_property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(12);
    let mut count = 0usize;

    // gamma recurrence and reflection
    for _ in 0..200 {
        let z = c(rng.gen_range(-3.9..5.0), rng.gen_range(-5.0..5.0));
        if z.im.abs() < 0.05 && z.re < 0.05 {
            continue;
        }
        let g = gamma(z).map_err(|e| e.to_string())?;
        let e = (gamma(z + 1.0).unwrap() - z * g).norm() / (z * g).norm();
        ensure(e <= 1e-12, || format!("recurrence at {z}: {e:e}"))?;
        let refl = g * gamma(r(1.0) - z).unwrap() * (z * PI).sin() / PI;
        ensure((refl - 1.0).norm() <= 1e-12, || format!("reflection at {z}"))?;
        count += 2;
    }

    // contiguous reduction
    for _ in 0..200 {
        let a = c(rng.gen_range(-2.0..2.0), rng.gen_range(-1.5..1.5));
        let b = c(rng.gen_range(-2.0..2.0), rng.gen_range(-1.5..1.5));
        let (cc, d) = (r(rng.gen_range(0.3..4.0)), r(rng.gen_range(0.3..4.0)));
        let z = c(rng.gen_range(-0.55..0.55), rng.gen_range(-0.55..0.55));
        let direct = sum_pfq(&SeriesSpec::new(vec![a, b, d + 1.0], vec![cc, d], z), &policy())
            .unwrap()
            .value;
        let (s1, w1, s2, w2) = contiguous_reduce_3f2(a, b, cc, d, z).unwrap();
        let split = sum_pfq(&s1, &policy()).unwrap().value * w1 + sum_pfq(&s2, &policy()).unwrap().value * w2;
        let e = (split - direct).norm() / direct.norm().max(1.0);
        ensure(e <= 1e-11, || format!("reduction: {e:e}"))?;
        count += 1;
    }

    // error-free two_sum, checked in scaled integers
    for _ in 0..100_000 {
        let mut f = || rng.gen_range(-(1i64 << 53) + 1..1i64 << 53) as f64 * 2f64.powi(rng.gen_range(-30..=30));
        let (a, b) = (f(), f());
        let (s, e) = two_sum(a, b);
        let k = |x: f64| (x * 2f64.powi(30)) as i128;
        ensure(k(a) + k(b) == k(s) + k(e), || format!("two_sum({a}, {b})"))?;
        count += 1;
    }

    // dd_exp functional identities
    for _ in 0..200 {
        let (x, y) = (rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        let (dx, dy) = (DDReal::from_f64(x), DDReal::from_f64(y));
        let joint = dd_exp(dx + dy).unwrap();
        let split = dd_exp(dx).unwrap() * dd_exp(dy).unwrap();
        let e = ((split - joint).to_f64() / joint.to_f64()).abs();
        ensure(e <= 1e-28, || format!("dd_exp({x} + {y}): {e:e}"))?;
        let one = dd_exp(dx).unwrap() * dd_exp(-dx).unwrap();
        ensure((one - DDReal::ONE).to_f64().abs() <= 1e-28, || format!("dd_exp({x}) dd_exp(-{x})"))?;
        count += 2;
    }

    // registry realness
    for case in registry() {
        let report = verify(&case, &policy());
        ensure(report.imag_residual <= 1e-12, || format!("{}: imag {:e}", case.id, report.imag_residual))?;
        ensure(!report.verdict.is_failure(), || format!("{}: Fail", case.id))?;
        count += 1;
    }
    Ok(format!("{count} checks"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("gelfond reproduction", c1_gelfond_reproduction),
        ("gelfond identity", c2_gelfond_identity),
        ("unit-argument family, random grid", c3_theorem1_grid),
        ("n e^pi family", c4_corollary1),
        ("n e^-pi family", c5_corollary2),
        ("cosh pi family, printed and corrected", c6_corollary3),
        ("half-argument family, random grid", c7_theorem2),
        ("extension oracles at 1/2", c8_extension_oracles),
        ("n e^(pi/2) family", c9_corollary4),
        ("lambda extension", c10_lambda_extension),
        ("heegner table", c11_heegner),
        ("property suites", c12_property_suites),
    ];
    panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = t.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{ms:.0} ms]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{ms:.0} ms]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed in {:.2} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
