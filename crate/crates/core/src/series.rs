//! Term-by-term summation of `pFq(upper; lower; z)`.
//!
//! Terms are generated by the ratio
//! `t_{n+1}/t_n = z · Π(a_j + n) / (Π(b_k + n) · (n + 1))`.
//! Inside the disc the partial sums are accumulated directly; on the unit
//! circle the leading terms are handed to the Levin u-transform.

use crate::levin::levin_accelerate;
use crate::{cast, nonpositive_integer_distance, Complex, Error, Real, Result};

/// Parameters closer than this to a non-positive integer are treated as
/// integers (polynomial truncation for upper, pole for lower).
pub const INTEGER_TOLERANCE: f64 = 1e-9;

/// Terms handed to the accelerator at unit argument.
pub const UNIT_ARGUMENT_TERMS: usize = 64;

const UNIT_CIRCLE_TOLERANCE: f64 = 1e-12;
const RATIO_CLAMP: f64 = 0.99;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec<T = f64> {
    pub upper: Vec<Complex<T>>,
    pub lower: Vec<Complex<T>>,
    pub argument: Complex<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitArgumentMode {
    Reject,
    Accelerate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumPolicy<T = f64> {
    pub tolerance: T,
    pub max_terms: usize,
    pub unit_argument_mode: UnitArgumentMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumStatus {
    Converged,
    /// An upper parameter is a non-positive integer; the sum is a polynomial.
    Truncated,
    /// The tolerance was not reached. At unit argument this means the
    /// accelerated estimate is the best available but is not certified to
    /// the requested tolerance.
    MaxTermsExceeded,
    Divergent,
}

impl SumStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SumStatus::Converged => "Converged",
            SumStatus::Truncated => "Truncated",
            SumStatus::MaxTermsExceeded => "MaxTermsExceeded",
            SumStatus::Divergent => "Divergent",
        }
    }

    /// Ordering used when combining several sums into one status.
    fn severity(self) -> u8 {
        match self {
            SumStatus::Truncated => 0,
            SumStatus::Converged => 1,
            SumStatus::MaxTermsExceeded => 2,
            SumStatus::Divergent => 3,
        }
    }

    pub fn worst(self, other: SumStatus) -> SumStatus {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

impl std::fmt::Display for SumStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult<T = f64> {
    pub value: Complex<T>,
    pub terms_used: usize,
    pub tail_estimate: T,
    pub status: SumStatus,
}

impl<T: Real> Default for SumPolicy<T> {
    fn default() -> Self {
        SumPolicy {
            tolerance: cast(1e-13),
            max_terms: 1_000_000,
            unit_argument_mode: UnitArgumentMode::Accelerate,
        }
    }
}

impl<T: Real> SumPolicy<T> {
    pub fn with_tolerance(tolerance: T) -> Self {
        SumPolicy {
            tolerance,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.tolerance.is_nan() || self.tolerance < cast(1e-15) || !self.tolerance.is_finite() {
            return Err(Error::InvalidPolicy(format!(
                "tolerance {:?} must be finite and >= 1e-15",
                self.tolerance
            )));
        }
        if self.max_terms < 10 {
            return Err(Error::InvalidPolicy(format!(
                "max_terms {} must be >= 10",
                self.max_terms
            )));
        }
        Ok(())
    }
}

impl<T: Real> SeriesSpec<T> {
    pub fn new(upper: Vec<Complex<T>>, lower: Vec<Complex<T>>, argument: Complex<T>) -> Self {
        SeriesSpec {
            upper,
            lower,
            argument,
        }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// Degree of the polynomial when some upper parameter is a non-positive
    /// integer `-m` (smallest such `m`).
    pub fn truncation_degree(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter_map(|&a| nonpositive_integer_distance(a))
            .filter(|&(_, d)| d < cast(INTEGER_TOLERANCE))
            .map(|(k, _)| (-k) as usize)
            .min()
    }

    /// `Re(Σ lower − Σ upper)`; the series converges at `|z| = 1` iff this
    /// is positive (for `p = q + 1`).
    pub fn convergence_parameter(&self) -> T {
        let lo = self.lower.iter().fold(T::zero(), |s, b| s + b.re);
        let up = self.upper.iter().fold(T::zero(), |s, a| s + a.re);
        lo - up
    }

    /// Checks that no lower parameter is a pole before truncation.
    pub fn validate(&self) -> Result<()> {
        let trunc = self.truncation_degree();
        for &b in &self.lower {
            if let Some((k, d)) = nonpositive_integer_distance(b) {
                if d < cast(INTEGER_TOLERANCE) {
                    let pole_at = (-k) as usize;
                    if trunc.is_none_or(|m| m >= pole_at) {
                        return Err(Error::pole(b.re, b.im));
                    }
                }
            }
        }
        for v in self.upper.iter().chain(&self.lower).chain([&self.argument]) {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::Domain("non-finite series parameter".into()));
            }
        }
        Ok(())
    }

    #[inline]
    fn term_ratio(&self, n: usize) -> Complex<T> {
        let nn: T = cast(n as f64);
        let num = shifted_product(&self.upper, nn);
        let den = shifted_product(&self.lower, nn);
        self.argument * num / (den * (nn + T::one()))
    }

    /// Leading `count` terms `t_0 = 1, t_1, ...`.
    pub fn terms(&self, count: usize) -> Vec<Complex<T>> {
        let mut out = Vec::with_capacity(count);
        let mut t = Complex::new(T::one(), T::zero());
        for n in 0..count {
            out.push(t);
            t = t * self.term_ratio(n);
        }
        out
    }

    fn on_unit_circle(&self) -> bool {
        (self.argument.norm() - T::one()).abs() <= cast(UNIT_CIRCLE_TOLERANCE)
    }
}

/// `Π (p + n)`, multiplying exact conjugate pairs as `|p + n|²` so that a
/// conjugation-closed list gives an exactly real product.
fn shifted_product<T: Real>(params: &[Complex<T>], n: T) -> Complex<T> {
    let mut used = [false; 16];
    let mut acc = Complex::new(T::one(), T::zero());
    for (k, &p) in params.iter().enumerate() {
        if k < used.len() && used[k] {
            continue;
        }
        let x = p + n;
        let partner = (p.im != T::zero())
            .then(|| {
                (k + 1..params.len().min(used.len()))
                    .find(|&m| !used[m] && params[m] == p.conj())
            })
            .flatten();
        match partner {
            Some(m) => {
                used[m] = true;
                acc = acc.scale(x.norm_sqr());
            }
            None => acc = acc * x,
        }
    }
    acc
}

fn sum_polynomial<T: Real>(spec: &SeriesSpec<T>, degree: usize) -> SumResult<T> {
    let terms = spec.terms(degree + 1);
    let value = terms
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |s, &t| s + t);
    SumResult {
        value,
        terms_used: degree + 1,
        tail_estimate: T::zero(),
        status: SumStatus::Truncated,
    }
}

fn sum_direct<T: Real>(spec: &SeriesSpec<T>, policy: &SumPolicy<T>) -> SumResult<T> {
    let tol = policy.tolerance;
    let clamp: T = cast(RATIO_CLAMP);
    let mut term = Complex::new(T::one(), T::zero());
    let mut sum = term;
    let mut small_run = 0usize;
    let mut tail = T::infinity();
    for n in 0..policy.max_terms.saturating_sub(1) {
        let ratio = spec.term_ratio(n);
        term = term * ratio;
        sum = sum + term;
        let scale = sum.norm().max(T::one());
        let r = ratio.norm();
        tail = term.norm() / (T::one() - r.min(clamp).max(T::zero()));
        if term.norm() <= tol * scale {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 2 && r < T::one() && tail <= tol * scale {
            return SumResult {
                value: sum,
                terms_used: n + 2,
                tail_estimate: tail,
                status: SumStatus::Converged,
            };
        }
    }
    SumResult {
        value: sum,
        terms_used: policy.max_terms,
        tail_estimate: tail,
        status: SumStatus::MaxTermsExceeded,
    }
}

/// Sum `pFq(upper; lower; z)`.
///
/// Polynomial cases are summed exactly. For `p <= q` any `z` is accepted;
/// for `p = q + 1` the argument must satisfy `|z| <= 1`, with the unit
/// circle routed to [`sum_pfq_unit`] unless the policy rejects it.
pub fn sum_pfq<T: Real>(spec: &SeriesSpec<T>, policy: &SumPolicy<T>) -> Result<SumResult<T>> {
    policy.validate()?;
    spec.validate()?;
    if let Some(m) = spec.truncation_degree() {
        return Ok(sum_polynomial(spec, m));
    }
    let (p, q) = (spec.p(), spec.q());
    if p > q + 1 && spec.argument.norm() > T::zero() {
        return Err(Error::Divergent(format!("p = {p} > q + 1 = {}", q + 1)));
    }
    if p == q + 1 {
        if spec.on_unit_circle() {
            return match policy.unit_argument_mode {
                UnitArgumentMode::Reject => Err(Error::UnitArgumentRejected),
                UnitArgumentMode::Accelerate => sum_pfq_unit(spec, policy),
            };
        }
        if spec.argument.norm() > T::one() {
            return Err(Error::Divergent(format!(
                "|z| = {:?} > 1 with p = q + 1",
                spec.argument.norm()
            )));
        }
    }
    Ok(sum_direct(spec, policy))
}

/// Sum a series on the unit circle (in practice `z = 1`).
///
/// Returns status [`SumStatus::Divergent`] without summing when the
/// convergence parameter `Re(Σ lower − Σ upper)` is not positive. Otherwise
/// the leading terms go through [`levin_accelerate`]. At `z = 1`, if that
/// estimate misses the tolerance, partial sums up to `max_terms` are
/// extrapolated with the known tail exponent and the better of the two
/// estimates is kept. A sum that still misses the tolerance ends in
/// [`SumStatus::MaxTermsExceeded`] with the best estimate attached.
pub fn sum_pfq_unit<T: Real>(
    spec: &SeriesSpec<T>,
    policy: &SumPolicy<T>,
) -> Result<SumResult<T>> {
    policy.validate()?;
    spec.validate()?;
    if let Some(m) = spec.truncation_degree() {
        return Ok(sum_polynomial(spec, m));
    }
    if spec.p() <= spec.q() {
        return Ok(sum_direct(spec, policy));
    }
    if spec.p() > spec.q() + 1 {
        return Err(Error::Divergent(format!(
            "p = {} > q + 1 = {}",
            spec.p(),
            spec.q() + 1
        )));
    }
    if spec.argument.norm() > T::one() + cast(UNIT_CIRCLE_TOLERANCE) {
        return Err(Error::Divergent(format!(
            "|z| = {:?} > 1 with p = q + 1",
            spec.argument.norm()
        )));
    }
    if spec.convergence_parameter() <= T::zero() {
        return Ok(SumResult {
            value: Complex::new(T::zero(), T::zero()),
            terms_used: 0,
            tail_estimate: T::infinity(),
            status: SumStatus::Divergent,
        });
    }
    let count = UNIT_ARGUMENT_TERMS.min(policy.max_terms);
    let terms = spec.terms(count);
    let (mut value, mut err) = levin_accelerate(&terms)?;
    let mut used = count;
    let certified = |v: Complex<T>, e: T| e <= policy.tolerance * v.norm().max(T::one());
    let at_one = (spec.argument - Complex::new(T::one(), T::zero())).norm()
        <= cast(UNIT_CIRCLE_TOLERANCE);
    if !certified(value, err) && at_one {
        if let Some((v, e, n)) = richardson_at_one(spec, policy.tolerance, policy.max_terms) {
            if e < err {
                (value, err, used) = (v, e, n);
            }
        }
    }
    let status = if certified(value, err) {
        SumStatus::Converged
    } else {
        SumStatus::MaxTermsExceeded
    };
    Ok(SumResult {
        value,
        terms_used: used,
        tail_estimate: err,
        status,
    })
}

/// First partial-sum length used by [`richardson_at_one`].
const RICHARDSON_START: usize = 16;
const RICHARDSON_LEVELS: usize = 15;

/// Extrapolate partial sums at `N = 16·2^k` for a `q+1Fq` at `z = 1`.
///
/// The terms behave like `n^{-1-σ}(c₀ + c₁/n + ...)` with
/// `σ = Σ lower − Σ upper`, so `S − S_N` expands in `N^{-σ-j}` and each
/// Richardson column removes one power. Levels are added until the
/// neighbouring diagonal differences drop below `tolerance` (relative) or
/// the budget runs out; the best diagonal entry is returned with that
/// difference and the number of terms read. `None` when the budget allows
/// fewer than three levels.
fn richardson_at_one<T: Real>(
    spec: &SeriesSpec<T>,
    tolerance: T,
    budget: usize,
) -> Option<(Complex<T>, T, usize)> {
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let sigma = spec.lower.iter().fold(zero, |s, &b| s + b)
        - spec.upper.iter().fold(zero, |s, &a| s + a);
    if RICHARDSON_START << 2 > budget {
        return None;
    }
    let ln2: T = T::LN_2();
    let fix = |s: T, x: T, t: T| if s.abs() >= x.abs() { (s - t) + x } else { (x - t) + s };

    let (mut sum, mut comp) = (zero, zero);
    let mut term = one;
    let mut read = 0usize;
    let mut row: Vec<Complex<T>> = Vec::new();
    let mut diagonal: Vec<Complex<T>> = Vec::new();
    let mut best: Option<(Complex<T>, T, usize)> = None;
    let mut length = RICHARDSON_START;
    for level in 0..RICHARDSON_LEVELS {
        if length > budget {
            break;
        }
        // compensated partial sum up to `length` terms
        while read < length {
            let t = sum + term;
            comp = comp + Complex::new(fix(sum.re, term.re, t.re), fix(sum.im, term.im, t.im));
            sum = t;
            term = term * spec.term_ratio(read);
            read += 1;
        }
        let mut cur = vec![sum + comp];
        for j in 1..=level {
            let r = (-(sigma + cast::<T>((j - 1) as f64)) * ln2).exp();
            cur.push((cur[j - 1] - row[j - 1] * r) / (one - r));
        }
        diagonal.push(cur[level]);
        row = cur;
        if level >= 2 {
            let k = level;
            let est = (diagonal[k] - diagonal[k - 1])
                .norm()
                .max((diagonal[k - 1] - diagonal[k - 2]).norm());
            if est.is_finite() && best.is_none_or(|(_, e, _)| est < e) {
                best = Some((diagonal[k], est, length));
            }
            if est <= tolerance * diagonal[k].norm().max(T::one()) {
                break;
            }
        }
        length *= 2;
    }
    best
}

/// Split `3F2(a, b, d+1; c, d; z)` into
/// `2F1(a, b; c; z) + (a b z)/(d c) · 2F1(a+1, b+1; c+1; z)`,
/// using `(d+1)_n / (d)_n = 1 + n/d`.
#[allow(clippy::type_complexity)]
pub fn contiguous_reduce_3f2<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
    z: Complex<T>,
) -> Result<(SeriesSpec<T>, Complex<T>, SeriesSpec<T>, Complex<T>)> {
    for &x in &[c, d] {
        if let Some((_, dist)) = nonpositive_integer_distance(x) {
            if dist < cast(INTEGER_TOLERANCE) {
                return Err(Error::pole(x.re, x.im));
            }
        }
    }
    let one = Complex::new(T::one(), T::zero());
    let first = SeriesSpec::new(vec![a, b], vec![c], z);
    let second = SeriesSpec::new(vec![a + one, b + one], vec![c + one], z);
    let weight2 = a * b * z / (d * c);
    Ok((first, one, second, weight2))
}
