//! Verification outcomes and congruence claims.

use std::fmt;
use std::sync::Mutex;
use std::time::Duration;

use serde::Serialize;

use crate::series::TruncSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Internal,
    InternalDirect,
    Base,
    Family,
    Ramanujan,
    Support,
    EtaCheck,
    Sturm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one check. `first_failure` is the first failing `n` for
/// progression claims and the first mismatching coefficient index for series
/// comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: CheckKind,
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Largest number of coefficients computed for any series in the check.
    pub precision: usize,
    /// Last index compared (Sturm bound or `n_max`).
    pub bound: Option<u64>,
    pub status: Status,
    pub first_failure: Option<u64>,
    /// For two-sided comparisons: the `s` in `{1, -1}` with `lhs = s * rhs`
    /// on every compared index, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    pub duration_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(kind: CheckKind, claim: impl Into<String>) -> Self {
        Self {
            kind,
            claim: claim.into(),
            alpha: None,
            k: None,
            precision: 0,
            bound: None,
            status: Status::Fail,
            first_failure: None,
            sign: None,
            duration_ms: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_duration(mut self, d: Duration) -> Self {
        self.duration_ms = d.as_millis() as u64;
        self
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Sort key used for deterministic output.
    pub fn sort_key(&self) -> (Option<u64>, Option<u32>, CheckKind, String) {
        (self.alpha, self.k, self.kind, self.claim.clone())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.status, self.claim)?;
        if let Some(b) = self.bound {
            write!(f, " (bound {b}, precision {})", self.precision)?;
        }
        if let Some(n) = self.first_failure {
            write!(f, " first failure at {n}")?;
        }
        Ok(())
    }
}

/// Receives reports from concurrent workers.
pub trait ReportSink: Sync {
    fn accept(&self, report: VerificationReport);
}

impl ReportSink for Mutex<Vec<VerificationReport>> {
    fn accept(&self, report: VerificationReport) {
        self.lock().expect("report sink poisoned").push(report);
    }
}

/// Sink that drops everything.
pub struct NullSink;

impl ReportSink for NullSink {
    fn accept(&self, _: VerificationReport) {}
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "lowercase")]
pub enum ClaimStatus {
    Pending,
    Verified,
    Failed { first_n: u64 },
}

/// `a_K(M n + c) = 0 (mod m)` for `n_min <= n <= n_max`.
///
/// `c` is kept in `0..M`; a progression whose offset is at least `M` is
/// stored as its residue with a positive `n_min`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub k_colors: u64,
    pub step: u64,
    pub residue: u64,
    pub n_min: u64,
    pub prime: u32,
    pub n_max: u64,
    pub status: ClaimStatus,
}

impl CongruenceClaim {
    /// Claim for `a_K(step * n + offset)` over `0 <= n <= n_max` in the
    /// caller's indexing.
    pub fn new(k_colors: u64, step: u64, offset: u64, prime: u32, n_max: u64) -> Self {
        assert!(step > 0, "progression step must be positive");
        let shift = offset / step;
        Self {
            k_colors,
            step,
            residue: offset % step,
            n_min: shift,
            prime,
            n_max: n_max + shift,
            status: ClaimStatus::Pending,
        }
    }

    /// Coefficients needed to check every index in the claim.
    pub fn required_precision(&self) -> usize {
        (self.step * self.n_max + self.residue + 1) as usize
    }

    pub fn indices(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        (self.n_min..=self.n_max).map(|n| (n, (self.step * n + self.residue) as usize))
    }

    /// Check against the series of `a_K` modulo `prime`. The first failing
    /// `n` is reported in the claim's own indexing (starting at `n_min`).
    pub fn evaluate(&mut self, series: &TruncSeries) -> ClaimStatus {
        assert_eq!(series.modulus(), self.prime, "series modulus differs from claim");
        assert!(series.precision() >= self.required_precision(), "series too short for claim");
        let failure = self.indices().find(|&(_, idx)| series.coeff(idx) != 0);
        self.status = match failure {
            Some((n, _)) => ClaimStatus::Failed { first_n: n },
            None => ClaimStatus::Verified,
        };
        self.status
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a_{}({}n+{}) = 0 (mod {}) for {} <= n <= {}",
            self.k_colors, self.step, self.residue, self.prime, self.n_min, self.n_max
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_offset_normalized() {
        let c = CongruenceClaim::new(5, 27, 19, 3, 10);
        assert_eq!((c.residue, c.n_min, c.n_max), (19, 0, 10));
        let c = CongruenceClaim::new(5, 27, 60, 3, 10);
        assert_eq!((c.residue, c.n_min, c.n_max), (6, 2, 12));
        assert_eq!(c.required_precision(), 27 * 12 + 7);
    }

    #[test]
    fn claim_evaluation() {
        let s = TruncSeries::from_ints(3, [0, 1, 0, 1, 0, 2, 0]).unwrap();
        let mut c = CongruenceClaim::new(1, 2, 0, 3, 3);
        assert_eq!(c.evaluate(&s), ClaimStatus::Verified);
        let mut c = CongruenceClaim::new(1, 2, 1, 3, 2);
        assert_eq!(c.evaluate(&s), ClaimStatus::Failed { first_n: 0 });
    }
}
