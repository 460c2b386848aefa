//! The mod 3 congruence families for `a_{3 alpha + 2}`.
//!
//! For `alpha = 9j + t` the family
//!
//! ```text
//! a_{3a+2}(3^{2k+3} n + delta_k) = 0 (mod 3),   delta_k = 9^k (18 + t) + alpha (9^k - 1) / 8
//! ```
//!
//! follows by induction on `k` from two facts:
//!
//! - the base case `a_{3a+2}(27n + 18 + t) = 0 (mod 3)`;
//! - the internal congruence `a_{3a+2}(9n + t) = a_{3a+2}(81n + 10t + 9j) (mod 3)`,
//!   which gives `a(m) = a(9m + alpha)` whenever `m = t (mod 9)`, and
//!   `delta_{k+1} = 9 delta_k + alpha`.
//!
//! The internal congruence is certified by building two eta quotients `g1`,
//! `g2` of the same weight, level and character, reducing them mod 3 (where
//! `E_4 = 1` and `eta(z)^{3^i e} = q^{..} f_{3^i}^e`), applying `U_3^2` and
//! `U_3^4`, and comparing past the Sturm bound.

use std::time::Instant;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eta::{check_modularity, cusps_strictly_positive, factorize, CharacterKind, EtaQuotient, Violation};
use crate::hecke::u_p_iter;
use crate::par::{self, Exec};
use crate::partitions::gen_a;
use crate::report::{CheckKind, ClaimStatus, CongruenceClaim, ReportSink, Status, VerificationReport};
use crate::series::{mul_eta_power, TruncSeries, DEFAULT_MAX_PRECISION};

/// The `alpha` values for which the family is established.
pub const THEOREM_ALPHAS: [u64; 25] = [
    1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 20, 22, 23, 27, 28, 30, 31, 36, 38, 39, 46, 47, 54, 55, 63,
];

/// Default cap on `n` for the direct coefficient cross-check inside
/// [`verify_internal`].
pub const DIRECT_CHECK_LIMIT: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub alpha: u64,
    pub j: u64,
    pub t: u64,
    pub r: u64,
    /// Extra `eta(z)` power, `0 <= A <= 24`.
    pub a_exp: u64,
    pub level: u64,
    pub weight: i64,
    pub character: CharacterKind,
    pub shift1: u64,
    pub shift2: u64,
    pub sturm: u64,
}

impl FamilyParams {
    /// Number of colors, `3 alpha + 2`.
    pub fn k_colors(&self) -> u64 {
        3 * self.alpha + 2
    }

    /// Residue of the `9n + t` side of the internal congruence.
    pub fn inner_residue(&self) -> u64 {
        self.t
    }

    /// Residue of the `81n + 10t + 9j` side.
    pub fn outer_residue(&self) -> u64 {
        10 * self.t + 9 * self.j
    }

    fn eta_part(&self, power: u64) -> Result<EtaQuotient> {
        let k = self.k_colors() as i64;
        let r1 = -k + (power * self.a_exp) as i64;
        let r2 = k - 1 + (power * self.r) as i64;
        let e4 = if power == 9 { 9 * (self.a_exp + self.r) } else { 0 };
        EtaQuotient::new(self.level, [(1, r1), (2, r2)], e4)
    }

    /// `eta(2z)^{3a+1} eta(z)^{9A - 3a - 2} eta(2z)^{9r} E_4^{9(A + r)}`.
    pub fn g1_eta(&self) -> Result<EtaQuotient> {
        self.eta_part(9)
    }

    /// `eta(2z)^{3a+1} eta(z)^{81A - 3a - 2} eta(2z)^{81r}`.
    pub fn g2_eta(&self) -> Result<EtaQuotient> {
        self.eta_part(81)
    }

    /// Number of leading `U_3`-outputs by which the post-Hecke series lag the
    /// progressions: output `n` of `g1 | U_3^2` carries `a(9(n - c) + t)`
    /// with `c = (s1 + t) / 9`, and likewise for `g2` with `81`.
    pub fn post_hecke_offsets(&self) -> (u64, u64) {
        (
            (self.shift1 + self.t) / 9,
            (self.shift2 + self.outer_residue()) / 81,
        )
    }
}

/// Index `[SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p)`.
pub fn gamma0_index(level: u64) -> u64 {
    factorize(level)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1) * (p + 1))
        .product()
}

/// `floor(k / 12 * [SL_2(Z) : Gamma_0(N)])`. Forms agreeing mod p on every
/// index up to and including this value agree everywhere.
pub fn sturm_bound(weight: i64, level: u64) -> u64 {
    assert!(weight >= 0, "negative weight");
    weight as u64 * gamma0_index(level) / 12
}

/// Parameters of the family for `alpha`. Total in `alpha`.
pub fn derive_params(alpha: u64) -> FamilyParams {
    derive_params_lifted(alpha, 0)
}

/// As [`derive_params`] but with `A` raised by `24 * lift`. The extra
/// `eta(z)^{9 * 24 * lift}` keeps both 24-conditions and the level, raises the
/// weight, and makes every cusp sum of `g1` larger.
pub fn derive_params_lifted(alpha: u64, lift: u64) -> FamilyParams {
    let (j, t) = alpha.div_rem(&9);
    let r = (alpha + 1) % 2;
    let class = (-3 * t as i64 - 3 * j as i64 - 2 * r as i64).rem_euclid(24) as u64;
    // Both 0 and 24 represent the zero class; A + r is odd for either, take 0.
    let a_exp = class + 24 * lift;
    debug_assert!((a_exp + r) % 2 == 1);
    let half = (3 * r as i64 - alpha as i64 - 1) / 2;
    let g = (3 * a_exp as i64 + half).gcd(&8) as u64;
    let formula_level = 24 / g;
    // The quotients always involve eta(2z), so the level must be even.
    let level = formula_level.lcm(&2);
    let weight = (81 * (a_exp + r) as i64 - 1) / 2;
    let character = match alpha % 4 {
        0 | 3 => CharacterKind::MinusOneKronecker,
        _ => CharacterKind::Trivial,
    };
    let shift1 = (alpha + 3 * a_exp + 6 * r) / 8;
    let shift2 = (alpha + 27 * a_exp + 54 * r) / 8;
    FamilyParams {
        alpha,
        j,
        t,
        r,
        a_exp,
        level,
        weight,
        character,
        shift1,
        shift2,
        sturm: sturm_bound(weight, level),
    }
}

/// `E_4 = 1 + 240 sum sigma_3(n) q^n` reduced mod `modulus`. Mod 3 (and 5)
/// this is the constant 1, which is why `g1` may drop its `E_4` factor.
pub fn e4_series(modulus: u32, precision: usize) -> Result<TruncSeries> {
    let m = modulus as u64;
    let mut sigma = vec![0u64; precision];
    for d in 1..precision {
        let d3 = (d as u64 % m).pow(3) % m;
        for n in (d..precision).step_by(d) {
            sigma[n] = (sigma[n] + d3) % m;
        }
    }
    let values = sigma
        .iter()
        .enumerate()
        .map(|(n, &s)| if n == 0 { 1 } else { (240 * s % m) as i64 });
    TruncSeries::from_ints(modulus, values)
}

fn integral_shift(numerator: u64) -> Result<u64> {
    if !numerator.is_multiple_of(8) {
        return Err(Error::NonIntegralShift { numerator: numerator as i64, denominator: 8 });
    }
    Ok(numerator / 8)
}

/// `q^shift * f_scale^A * f_{2 scale}^r * a_series`, truncated to `precision`.
fn reduced_form(
    a_series: &TruncSeries,
    scale: usize,
    params: &FamilyParams,
    shift: u64,
    precision: usize,
) -> Result<TruncSeries> {
    let shift = shift as usize;
    if precision <= shift {
        return TruncSeries::zero(3, precision);
    }
    let body = a_series.truncate(precision - shift)?;
    let body = mul_eta_power(&body, scale, params.a_exp as i64, Exec::default());
    let body = mul_eta_power(&body, 2 * scale, params.r as i64, Exec::default());
    let mut coeffs = vec![0u8; precision];
    coeffs[shift..].copy_from_slice(body.coeffs());
    TruncSeries::from_residues(3, coeffs)
}

/// `g1` mod 3: `f_9^A f_18^r q^{s1} sum a_{3a+2}(n) q^n`.
pub fn build_g1_reduced(params: &FamilyParams, precision: usize) -> Result<TruncSeries> {
    let s1 = integral_shift(params.alpha + 3 * params.a_exp + 6 * params.r)?;
    let a = gen_a(params.k_colors(), 3, precision)?;
    reduced_form(&a.series, 9, params, s1, precision)
}

/// `g2` mod 3: `f_81^A f_162^r q^{s2} sum a_{3a+2}(n) q^n`.
pub fn build_g2_reduced(params: &FamilyParams, precision: usize) -> Result<TruncSeries> {
    let s2 = integral_shift(params.alpha + 27 * params.a_exp + 54 * params.r)?;
    let a = gen_a(params.k_colors(), 3, precision)?;
    reduced_form(&a.series, 81, params, s2, precision)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InternalOptions {
    /// Cap on `n` for the direct `a(9n + t) = a(81n + 10t + 9j)` cross-check.
    pub direct_n_max: u64,
    /// Compare this many post-Hecke coefficients instead of `sturm + 1`.
    /// Must not be below `sturm + 1`.
    pub outputs: Option<usize>,
    /// Raise `A` by `24 * a_lift` (see [`derive_params_lifted`]). Zero keeps the
    /// standard construction.
    pub a_lift: u64,
}

impl Default for InternalOptions {
    fn default() -> Self {
        Self { direct_n_max: DIRECT_CHECK_LIMIT, outputs: None, a_lift: 0 }
    }
}

/// First `n <= n_max` with `a(9n + t) != sign * a(81n + 10t + 9j)` mod 3.
fn first_internal_mismatch(a: &TruncSeries, params: &FamilyParams, n_max: u64, sign: i8) -> Option<u64> {
    let (t, o) = (params.inner_residue(), params.outer_residue());
    (0..=n_max).find(|&n| {
        let lhs = a.coeff((9 * n + t) as usize);
        let rhs = a.coeff((81 * n + o) as usize);
        let rhs = if sign < 0 { (3 - rhs) % 3 } else { rhs };
        lhs != rhs
    })
}

/// The sign under which two mismatch searches both came back clean.
fn agreeing_sign(plus: Option<u64>, minus: Option<u64>) -> Option<i8> {
    match (plus, minus) {
        (None, _) => Some(1),
        (Some(_), None) => Some(-1),
        _ => None,
    }
}

fn describe_violations(name: &str, v: &[Violation]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|v| match v {
            Violation::OrderAtInfinity { sum } => format!("sum d r_d = {sum} not 0 mod 24"),
            Violation::OrderAtZero { sum } => format!("sum (N/d) r_d = {sum} not 0 mod 24"),
            Violation::Cusp { divisor, numer, denom } => {
                format!("cusp 1/{divisor} sum {numer}/{denom} < 0")
            }
        })
        .collect();
    format!("{name} fails modularity: {}", parts.join("; "))
}

/// Certify `g1 | T_3^2 = g2 | T_3^4 (mod 3)` through the Sturm bound.
///
/// Passes only if both eta quotients satisfy the 24-conditions and cusp
/// nonnegativity, share weight, level and character, the post-Hecke series
/// agree on indices `0..=sturm`, and the direct coefficient cross-check agrees.
/// The series comparison is run even when a modularity condition fails, so the
/// report shows both outcomes.
pub fn verify_internal(alpha: u64, opts: InternalOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let params = derive_params_lifted(alpha, opts.a_lift);
    let mut report = VerificationReport::new(
        CheckKind::Internal,
        format!(
            "g1|T3^2 = g2|T3^4 (mod 3) for alpha={alpha}: a_{k}(9n+{t}) = a_{k}(81n+{o})",
            k = params.k_colors(),
            t = params.inner_residue(),
            o = params.outer_residue()
        ),
    );
    report.alpha = Some(alpha);
    if opts.a_lift > 0 {
        report.note(format!("A lifted to {} (standard value {})", params.a_exp, params.a_exp - 24 * opts.a_lift));
    }

    let g1e = params.g1_eta()?;
    let g2e = params.g2_eta()?;
    let mut modular = true;
    let m1 = check_modularity(&g1e);
    let m2 = check_modularity(&g2e);
    for (name, m) in [("g1", &m1), ("g2", &m2)] {
        if let Err(v) = m {
            modular = false;
            report.note(describe_violations(name, v));
        }
    }
    if let (Ok(f1), Ok(f2)) = (&m1, &m2) {
        if f1 != f2 {
            modular = false;
            report.note(format!("g1 and g2 live in different spaces: {f1:?} vs {f2:?}"));
        } else if f1.character != params.character {
            report.note(format!(
                "computed character {} differs from alpha mod 4 case {}",
                f1.character, params.character
            ));
        }
    }
    for (name, eq) in [("g1", &g1e), ("g2", &g2e)] {
        if !cusps_strictly_positive(eq) {
            report.note(format!("{name}: some cusp sum is not strictly positive"));
        }
    }

    let minimum = params.sturm as usize + 1;
    let outputs = match opts.outputs {
        Some(o) if o < minimum => {
            return Err(Error::InsufficientPrecision { required: minimum, available: o })
        }
        Some(o) => o,
        None => minimum,
    };
    let p1 = 9 * outputs + params.shift1 as usize;
    let p2 = 81 * outputs + params.shift2 as usize;
    let direct_n = opts.direct_n_max.min(DIRECT_CHECK_LIMIT);
    let direct_need = 81 * direct_n as usize + params.outer_residue() as usize + 1;
    let a_precision = p2.max(direct_need);
    if a_precision > DEFAULT_MAX_PRECISION {
        return Err(Error::PrecisionCap { requested: a_precision, cap: DEFAULT_MAX_PRECISION });
    }
    let a = gen_a(params.k_colors(), 3, a_precision)?.series;

    let g1 = reduced_form(&a, 9, &params, params.shift1, p1)?;
    let g2 = reduced_form(&a, 81, &params, params.shift2, p2)?;
    let h1 = u_p_iter(&g1, 3, 2)?;
    let h2 = u_p_iter(&g2, 3, 4)?;
    for h in [&h1, &h2] {
        if h.output_precision < outputs {
            return Err(Error::InsufficientPrecision {
                required: outputs,
                available: h.output_precision,
            });
        }
    }
    let lhs = h1.series.truncate(outputs)?;
    let rhs = h2.series.truncate(outputs)?;
    let mismatch = lhs.first_difference(&rhs)?;
    let mismatch_neg = lhs.first_difference(&rhs.neg())?;
    let direct = first_internal_mismatch(&a, &params, direct_n, 1);
    let direct_neg = first_internal_mismatch(&a, &params, direct_n, -1);
    let sign = agreeing_sign(mismatch.map(|i| i as u64), mismatch_neg.map(|i| i as u64));

    report.precision = a_precision;
    report.bound = Some(outputs as u64 - 1);
    report.note(format!(
        "sturm bound {} (weight {}, level {}, character {}); compared via a(9n-{}) and a(81n-{})",
        params.sturm, params.weight, params.level, params.character, params.shift1, params.shift2
    ));
    if let Some(i) = mismatch {
        report.note(format!("post-Hecke series differ at index {i}"));
    }
    if let Some(n) = direct {
        report.note(format!("direct check fails at n={n}"));
    }
    if sign == Some(-1) {
        report.note("relation holds with sign -1: g1|T3^2 = -g2|T3^4 (mod 3)");
    }
    if agreeing_sign(direct, direct_neg) != sign {
        report.note("direct check and post-Hecke comparison disagree on the sign");
    }
    report.sign = sign;
    report.first_failure = mismatch.map(|i| i as u64);
    report.status = Status::from_bool(modular && mismatch.is_none() && direct.is_none());
    Ok(report.with_duration(started.elapsed()))
}

/// The internal congruence checked straight from `a_{3a+2}` coefficients for
/// `n <= n_max`, no modular forms involved.
pub fn verify_internal_direct(alpha: u64, n_max: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let params = derive_params(alpha);
    let precision = (81 * n_max + params.outer_residue() + 1) as usize;
    if precision > DEFAULT_MAX_PRECISION {
        return Err(Error::PrecisionCap { requested: precision, cap: DEFAULT_MAX_PRECISION });
    }
    let a = gen_a(params.k_colors(), 3, precision)?.series;
    let mismatch = first_internal_mismatch(&a, &params, n_max, 1);
    let mismatch_neg = first_internal_mismatch(&a, &params, n_max, -1);
    let mut report = VerificationReport::new(
        CheckKind::InternalDirect,
        format!(
            "a_{k}(9n+{t}) = a_{k}(81n+{o}) (mod 3) for n <= {n_max}",
            k = params.k_colors(),
            t = params.inner_residue(),
            o = params.outer_residue()
        ),
    );
    report.alpha = Some(alpha);
    report.precision = precision;
    report.bound = Some(n_max);
    report.first_failure = mismatch;
    report.sign = agreeing_sign(mismatch, mismatch_neg);
    if report.sign == Some(-1) {
        report.note("relation holds with sign -1");
    }
    report.status = Status::from_bool(mismatch.is_none());
    Ok(report.with_duration(started.elapsed()))
}

fn check_claim(mut claim: CongruenceClaim, kind: CheckKind) -> Result<VerificationReport> {
    let started = Instant::now();
    let precision = claim.required_precision();
    if precision > DEFAULT_MAX_PRECISION {
        return Err(Error::PrecisionCap { requested: precision, cap: DEFAULT_MAX_PRECISION });
    }
    let series = gen_a(claim.k_colors, claim.prime, precision)?.series;
    let status = claim.evaluate(&series);
    let mut report = VerificationReport::new(kind, claim.to_string());
    report.precision = precision;
    report.bound = Some(claim.n_max);
    match status {
        ClaimStatus::Verified => report.status = Status::Pass,
        ClaimStatus::Failed { first_n } => report.first_failure = Some(first_n),
        ClaimStatus::Pending => unreachable!("evaluated claim is never pending"),
    }
    Ok(report.with_duration(started.elapsed()))
}

/// `a_{27j+3t+2}(27n + 18 + t) = 0 (mod 3)` for `n <= n_max`.
pub fn verify_base(j: u64, t: u64, n_max: u64) -> Result<VerificationReport> {
    if t > 8 {
        return Err(Error::InvalidArgument(format!("t = {t} outside 0..=8")));
    }
    let claim = CongruenceClaim::new(27 * j + 3 * t + 2, 27, 18 + t, 3, n_max);
    let mut report = check_claim(claim, CheckKind::Base)?;
    report.alpha = Some(9 * j + t);
    Ok(report)
}

/// `delta_k = 9^k (18 + t) + alpha (9^k - 1) / 8`.
pub fn delta(alpha: u64, k: u32) -> Result<u128> {
    let t = (alpha % 9) as u128;
    let nine_k = 9u128.checked_pow(k).ok_or(Error::Overflow("9^k"))?;
    let head = nine_k.checked_mul(18 + t).ok_or(Error::Overflow("delta_k"))?;
    let tail = (alpha as u128)
        .checked_mul((nine_k - 1) / 8)
        .ok_or(Error::Overflow("delta_k"))?;
    head.checked_add(tail).ok_or(Error::Overflow("delta_k"))
}

/// `a_{3a+2}(3^{2k+3} n + delta_k) = 0 (mod 3)` for `n <= n_max`, read
/// directly off the generating function.
pub fn verify_family_member(alpha: u64, k: u32, n_max: u64) -> Result<VerificationReport> {
    let step = 3u128.checked_pow(2 * k + 3).ok_or(Error::Overflow("3^(2k+3)"))?;
    let offset = delta(alpha, k)?;
    let step = u64::try_from(step).map_err(|_| Error::Overflow("3^(2k+3)"))?;
    let offset = u64::try_from(offset).map_err(|_| Error::Overflow("delta_k"))?;
    step.checked_mul(n_max)
        .and_then(|v| v.checked_add(offset))
        .ok_or(Error::Overflow("family index"))?;
    let claim = CongruenceClaim::new(3 * alpha + 2, step, offset, 3, n_max);
    let mut report = check_claim(claim, CheckKind::Family)?;
    report.claim = format!(
        "a_{}({}n+{}) = 0 (mod 3) for n <= {}",
        3 * alpha + 2,
        step,
        offset,
        n_max
    );
    report.alpha = Some(alpha);
    report.k = Some(k);
    Ok(report)
}

/// Exploratory sweep: which `alpha` admit the internal congruence up to
/// `n_max`. Reports are pushed to `sink` as they finish and returned sorted by
/// `alpha`.
pub fn scan_alpha<I>(alphas: I, n_max: u64, sink: &dyn ReportSink, exec: Exec) -> Result<Vec<VerificationReport>>
where
    I: IntoIterator<Item = u64>,
{
    let items: Vec<u64> = alphas.into_iter().collect();
    let results = par::map(items, exec, |alpha| {
        let report = verify_internal_direct(alpha, n_max)?;
        sink.accept(report.clone());
        Ok(report)
    });
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.alpha);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_alpha_one() {
        let p = derive_params(1);
        assert_eq!((p.j, p.t, p.r, p.a_exp, p.level, p.weight), (0, 1, 0, 21, 12, 850));
        assert_eq!(p.character, CharacterKind::Trivial);
        assert_eq!((p.shift1, p.shift2, p.sturm), (8, 71, 1700));
    }

    #[test]
    fn params_alpha_four() {
        let p = derive_params(4);
        assert_eq!((p.j, p.t, p.r, p.a_exp, p.level, p.weight), (0, 4, 1, 10, 24, 445));
        assert_eq!(p.character, CharacterKind::MinusOneKronecker);
        assert_eq!((p.shift1, p.shift2, p.sturm), (5, 41, 1780));
    }

    #[test]
    fn params_alpha_zero() {
        let p = derive_params(0);
        assert_eq!((p.j, p.t, p.r, p.a_exp, p.weight), (0, 0, 1, 22, 931));
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_bound(850, 12), 1700);
        assert_eq!(sturm_bound(12, 1), 1);
        assert_eq!(sturm_bound(445, 24), 1780);
        assert_eq!(gamma0_index(24), 48);
        assert_eq!(gamma0_index(1), 1);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(1, 0).unwrap(), 19);
        assert_eq!(delta(1, 1).unwrap(), 172);
        assert_eq!(delta(4, 1).unwrap(), 202);
        for alpha in 0..100 {
            for k in 0..10 {
                assert_eq!(delta(alpha, k + 1).unwrap(), 9 * delta(alpha, k).unwrap() + alpha as u128);
            }
        }
        assert!(delta(1, 60).is_err());
    }

    #[test]
    fn g1_leading_terms_alpha_one() {
        let p = derive_params(1);
        let g1 = build_g1_reduced(&p, 20).unwrap();
        assert_eq!(g1.order(), Some(8));
        assert_eq!(g1.coeff(8), 1);
        assert_eq!(g1.coeff(9), 2);
    }

    #[test]
    fn g2_leading_terms() {
        let p = derive_params(1);
        let g2 = build_g2_reduced(&p, 100).unwrap();
        assert_eq!(g2.order(), Some(71));
        assert_eq!(g2.coeff(72), 2);
        let p4 = derive_params(4);
        assert_eq!(build_g2_reduced(&p4, 100).unwrap().order(), Some(41));
    }

    #[test]
    fn eta_shift_matches_params() {
        for alpha in 0..100 {
            let p = derive_params(alpha);
            assert_eq!(p.g1_eta().unwrap().prefactor_shift(), Some(p.shift1 as i64));
            assert_eq!(p.g2_eta().unwrap().prefactor_shift(), Some(p.shift2 as i64));
            assert_eq!(p.g1_eta().unwrap().weight(), p.weight);
            assert_eq!(p.g2_eta().unwrap().weight(), p.weight);
        }
    }

    #[test]
    fn base_examples() {
        assert!(verify_base(0, 1, 30).unwrap().passed());
        assert!(verify_base(1, 0, 20).unwrap().passed());
        assert!(verify_base(0, 0, 0).unwrap().passed());
        assert!(verify_base(0, 9, 0).is_err());
    }

    #[test]
    fn family_examples() {
        assert!(verify_family_member(1, 0, 50).unwrap().passed());
        assert!(verify_family_member(1, 1, 10).unwrap().passed());
        let r = verify_family_member(7, 0, 30).unwrap();
        assert!(r.passed());
        assert!(r.claim.starts_with("a_23(27n+25)"));
    }

    #[test]
    fn direct_internal_small() {
        assert!(verify_internal_direct(1, 100).unwrap().passed());
        let r = verify_internal_direct(2, 100).unwrap();
        assert!(!r.passed());
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn internal_override_below_sturm_refused() {
        let err = verify_internal(7, InternalOptions { outputs: Some(10), ..Default::default() });
        assert_eq!(err.unwrap_err(), Error::InsufficientPrecision { required: 485, available: 10 });
    }

    #[test]
    fn lifting_a_keeps_level_and_shift_classes() {
        for alpha in 0..100 {
            let p = derive_params(alpha);
            let q = derive_params_lifted(alpha, 1);
            assert_eq!(q.a_exp, p.a_exp + 24);
            assert_eq!(q.level, p.level);
            assert_eq!(q.shift1 % 9, p.shift1 % 9);
            assert_eq!(q.shift2 % 81, p.shift2 % 81);
            assert!(q.g1_eta().unwrap().prefactor_shift().is_some());
        }
    }

    #[test]
    fn scan_empty_range() {
        let out = scan_alpha(std::iter::empty(), 10, &crate::report::NullSink, Exec::default()).unwrap();
        assert!(out.is_empty());
    }
}
