//! Ramanujan-type congruences for `a_11`:
//!
//! ```text
//! a_11(5n + 4)  = 0 (mod 5)
//! a_11(7n + 4)  = 0 (mod 7)
//! a_11(11n + 1) = 0 (mod 11)
//! ```
//!
//! together with the residue-class support facts behind them.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::partitions::{gen_a, gen_p};
use crate::report::{CheckKind, ClaimStatus, CongruenceClaim, Status, VerificationReport};
use crate::series::{eta_product, mul_eta_power, TruncSeries};

/// Default precision for support checks.
pub const SUPPORT_PRECISION: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum A11Case {
    Mod5,
    Mod7,
    Mod11,
}

impl A11Case {
    pub const ALL: [A11Case; 3] = [A11Case::Mod5, A11Case::Mod7, A11Case::Mod11];

    pub fn prime(self) -> u32 {
        match self {
            A11Case::Mod5 => 5,
            A11Case::Mod7 => 7,
            A11Case::Mod11 => 11,
        }
    }

    pub fn residue(self) -> u64 {
        match self {
            A11Case::Mod5 | A11Case::Mod7 => 4,
            A11Case::Mod11 => 1,
        }
    }

    pub fn from_prime(p: u32) -> Result<Self> {
        match p {
            5 => Ok(A11Case::Mod5),
            7 => Ok(A11Case::Mod7),
            11 => Ok(A11Case::Mod11),
            other => Err(Error::InvalidArgument(format!("no a_11 congruence modulo {other}"))),
        }
    }
}

/// Residue classes mod `m` carrying a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DissectionProfile {
    pub label: String,
    pub modulus: u32,
    pub precision: usize,
    pub classes: BTreeSet<u64>,
}

impl DissectionProfile {
    pub fn is_subset_of(&self, allowed: &[u64]) -> bool {
        self.classes.iter().all(|c| allowed.contains(c))
    }
}

pub fn dissection_support(series: &TruncSeries, m: u64) -> DissectionProfile {
    dissection_support_labeled(series, m, "series")
}

pub fn dissection_support_labeled(series: &TruncSeries, m: u64, label: &str) -> DissectionProfile {
    assert!(m >= 2, "dissection modulus must be at least 2");
    let classes = series
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(n, _)| n as u64 % m)
        .collect();
    DissectionProfile {
        label: label.to_string(),
        modulus: m as u32,
        precision: series.precision(),
        classes,
    }
}

/// Generic progression check `a_k(step n + residue) = 0 (mod prime)`.
pub fn verify_progression(k: u64, prime: u32, step: u64, residue: u64, n_max: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut claim = CongruenceClaim::new(k, step, residue, prime, n_max);
    let precision = claim.required_precision();
    let series = gen_a(k, prime, precision)?.series;
    let mut report = VerificationReport::new(CheckKind::Ramanujan, claim.to_string());
    report.precision = precision;
    report.bound = Some(n_max);
    match claim.evaluate(&series) {
        ClaimStatus::Verified => report.status = Status::Pass,
        ClaimStatus::Failed { first_n } => report.first_failure = Some(first_n),
        ClaimStatus::Pending => unreachable!(),
    }
    Ok(report.with_duration(started.elapsed()))
}

pub fn verify_a11(case: A11Case, n_max: u64) -> Result<VerificationReport> {
    verify_progression(11, case.prime(), case.prime() as u64, case.residue(), n_max)
}

/// All three cases, run independently.
pub fn verify_a11_all(n_max: u64, exec: Exec) -> Result<Vec<VerificationReport>> {
    par::map(A11Case::ALL.to_vec(), exec, |c| verify_a11(c, n_max))
        .into_iter()
        .collect()
}

/// `sum_{k >= 0} (-1)^k (2k + 1) q^{k(k+1)/2}`, which equals `f_1^3`.
pub fn triangular_cube_expansion(modulus: u32, precision: usize) -> Result<TruncSeries> {
    let mut values = vec![0i64; precision];
    let mut k = 0usize;
    loop {
        let e = k * (k + 1) / 2;
        if e >= precision {
            break;
        }
        let c = (2 * k + 1) as i64;
        values[e] = if k.is_multiple_of(2) { c } else { -c };
        k += 1;
    }
    TruncSeries::from_ints(modulus, values)
}

/// `f_2^e / f_1^e` modulo `m`; a series in `q^m` when `e = m` or a multiple.
pub fn f2_over_f1_power(e: i64, m: u32, precision: usize) -> Result<TruncSeries> {
    let one = TruncSeries::one(m, precision)?;
    let s = mul_eta_power(&one, 1, -e, Exec::default());
    Ok(mul_eta_power(&s, 2, e, Exec::default()))
}

/// Indices below `precision` that are `1 (mod 11)` and even, paired with the
/// partition number each picks out of `sum p(n) q^{2n}`.
pub fn crt_even_one_mod_11(precision: usize) -> Vec<(usize, usize)> {
    (0..precision)
        .filter(|i| i % 11 == 1 && i % 2 == 0)
        .map(|i| (i, i / 2))
        .collect()
}

/// `f_1^3 mod 7` support and agreement with the triangular-number expansion.
pub fn verify_cube_support(precision: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let f1 = eta_product(1, 1, 7, precision)?;
    let cube = f1.mul(&f1.mul(&f1)?)?;
    let tri = triangular_cube_expansion(7, precision)?;
    let diff = cube.first_difference(&tri)?;
    let profile = dissection_support_labeled(&cube, 7, "f1^3 mod 7");
    let mut report = VerificationReport::new(
        CheckKind::Support,
        "f1^3 (mod 7) is supported on exponents 0, 1, 3 (mod 7) and equals sum (-1)^k (2k+1) q^{k(k+1)/2}",
    );
    report.precision = precision;
    report.bound = Some(precision as u64 - 1);
    report.first_failure = diff.map(|d| d as u64);
    report.note(format!("support classes {:?}", profile.classes));
    report.status = Status::from_bool(diff.is_none() && profile.is_subset_of(&[0, 1, 3]));
    Ok(report.with_duration(started.elapsed()))
}

/// `p(11n + 6) = 0 (mod 11)` read through the even indices `= 1 (mod 11)` of
/// `sum p(n) q^{2n}`.
pub fn verify_crt_step(precision: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let p = gen_p(11, precision)?.series;
    let doubled = crate::series::scale_exponents(&p, 2);
    let picks = crt_even_one_mod_11(precision);
    let mut bad = picks.iter().find(|&&(i, half)| i % 22 != 12 || half % 11 != 6).map(|&(i, _)| i as u64);
    if bad.is_none() {
        bad = picks.iter().find(|&&(i, _)| doubled.coeff(i) != 0).map(|&(i, _)| i as u64);
    }
    let mut report = VerificationReport::new(
        CheckKind::Support,
        "even exponents = 1 (mod 11) are exactly 12 (mod 22) and carry p(11n+6) = 0 (mod 11)",
    );
    report.precision = precision;
    report.bound = Some(precision as u64 - 1);
    report.first_failure = bad;
    report.status = Status::from_bool(bad.is_none());
    Ok(report.with_duration(started.elapsed()))
}
