//! Command dispatch. Each verify command yields a [`Run`]: its config echo and
//! the reports, sorted by alpha then k.

use anyhow::{bail, ensure, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use akcong::eta::{check_modularity, cusp_order_sums, cusps_strictly_positive};
use akcong::par::{self, Exec};
use akcong::partitions::{brute_force_a, gen_a, ORACLE_LIMIT};
use akcong::prover::{
    derive_params_lifted, sturm_bound, verify_base, verify_family_member, verify_internal,
    verify_internal_direct, InternalOptions,
};
use akcong::ramanujan::{verify_a11, verify_crt_step, verify_cube_support, A11Case};
use akcong::report::{CheckKind, Status};
use akcong::series::DEFAULT_MAX_PRECISION;
use akcong::{EtaQuotient, VerificationReport};

use crate::cli::*;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Run {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub results: Vec<VerificationReport>,
}

impl Run {
    fn new(command: &str, config: Value, mut results: Vec<VerificationReport>) -> Self {
        // Stable: checks without alpha keep the order they were issued in.
        results.sort_by_key(|r| (r.alpha, r.k));
        Run { schema_version: SCHEMA_VERSION, command: command.to_string(), config, results }
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }
}

pub fn exec_for(workers: usize) -> Exec {
    if workers == 1 {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn each<T, F>(items: Vec<T>, workers: usize, f: F) -> Result<Vec<VerificationReport>>
where
    T: Send,
    F: Fn(T) -> akcong::Result<VerificationReport> + Sync + Send,
{
    par::map(items, exec_for(workers), f)
        .into_iter()
        .collect::<akcong::Result<Vec<_>>>()
        .map_err(Into::into)
}

pub fn verify(cmd: &VerifyCommand) -> Result<Run> {
    match cmd {
        VerifyCommand::Base(a) => base(a),
        VerifyCommand::Internal(a) => internal(a),
        VerifyCommand::Family(a) => family(a),
        VerifyCommand::Ramanujan(a) => ramanujan(a),
        VerifyCommand::EtaCheck(a) => eta_check(a),
        VerifyCommand::Sturm(a) => sturm(a),
        VerifyCommand::Scan(a) => scan(a),
    }
}

pub fn common(cmd: &VerifyCommand) -> &Common {
    match cmd {
        VerifyCommand::Base(a) => &a.common,
        VerifyCommand::Internal(a) => &a.common,
        VerifyCommand::Family(a) => &a.common,
        VerifyCommand::Ramanujan(a) => &a.common,
        VerifyCommand::EtaCheck(a) => &a.common,
        VerifyCommand::Sturm(a) => &a.common,
        VerifyCommand::Scan(a) => &a.common,
    }
}

fn base(a: &BaseArgs) -> Result<Run> {
    let results = each(a.alpha.values.clone(), a.common.workers, |alpha| {
        verify_base(alpha / 9, alpha % 9, a.n_max)
    })?;
    let config = json!({ "alpha": a.alpha.label, "n_max": a.n_max, "workers": a.common.workers });
    Ok(Run::new("verify base", config, results))
}

fn internal(a: &InternalArgs) -> Result<Run> {
    let config = json!({
        "alpha": a.alpha.label,
        "precision": a.precision,
        "a_lift": a.a_lift,
        "direct": a.direct,
        "n_max": a.n_max,
        "workers": a.common.workers,
    });
    if a.direct {
        ensure!(a.precision.is_none(), "--precision does not apply to --direct");
        ensure!(a.a_lift == 0, "--a-lift does not apply to --direct");
        let results = each(a.alpha.values.clone(), a.common.workers, |alpha| {
            verify_internal_direct(alpha, a.n_max)
        })?;
        return Ok(Run::new("verify internal", config, results));
    }
    if let Some(p) = a.precision {
        for &alpha in &a.alpha.values {
            let params = derive_params_lifted(alpha, a.a_lift);
            let minimum = params.sturm as usize + 1;
            if p < minimum {
                bail!(
                    "refusing precision {p} for alpha={alpha}: the Sturm bound is {} so at least {minimum} coefficients are required",
                    params.sturm
                );
            }
        }
    }
    let opts = InternalOptions {
        direct_n_max: a.n_max,
        outputs: a.precision,
        a_lift: a.a_lift,
    };
    let results = each(a.alpha.values.clone(), a.common.workers, |alpha| verify_internal(alpha, opts))?;
    Ok(Run::new("verify internal", config, results))
}

fn family(a: &FamilyArgs) -> Result<Run> {
    ensure!(!a.k.is_empty(), "--k needs at least one value");
    let mut ks = a.k.clone();
    ks.sort_unstable();
    ks.dedup();
    let jobs: Vec<(u64, u32)> = a
        .alpha
        .values
        .iter()
        .flat_map(|&alpha| ks.iter().map(move |&k| (alpha, k)))
        .collect();
    let results = each(jobs, a.common.workers, |(alpha, k)| verify_family_member(alpha, k, a.n_max))?;
    let config = json!({ "alpha": a.alpha.label, "k": ks, "n_max": a.n_max, "workers": a.common.workers });
    Ok(Run::new("verify family", config, results))
}

fn ramanujan(a: &RamanujanArgs) -> Result<Run> {
    let mut cases = a
        .modulus
        .iter()
        .map(|&p| A11Case::from_prime(p))
        .collect::<akcong::Result<Vec<_>>>()?;
    cases.sort();
    cases.dedup();
    let mut results = each(cases, a.common.workers, |c| verify_a11(c, a.n_max))?;
    if !a.skip_support {
        ensure!(a.support_precision >= 2, "--support-precision must be at least 2");
        results.push(verify_cube_support(a.support_precision)?);
        results.push(verify_crt_step(a.support_precision)?);
    }
    let config = json!({
        "n_max": a.n_max,
        "modulus": a.modulus,
        "skip_support": a.skip_support,
        "support_precision": a.support_precision,
        "workers": a.common.workers,
    });
    Ok(Run::new("verify ramanujan", config, results))
}

fn parse_exponents(s: &str) -> Result<Vec<(u64, i64)>> {
    s.split(',')
        .map(|pair| {
            let (d, r) = pair
                .split_once(':')
                .with_context(|| format!("'{pair}' is not of the form d:r"))?;
            let d = d.trim().parse().with_context(|| format!("bad divisor in '{pair}'"))?;
            let r = r.trim().parse().with_context(|| format!("bad exponent in '{pair}'"))?;
            Ok((d, r))
        })
        .collect()
}

fn eta_report(name: &str, eq: &EtaQuotient) -> VerificationReport {
    let mut report = VerificationReport::new(CheckKind::EtaCheck, format!("{name}{eq} is holomorphic modular"));
    match check_modularity(eq) {
        Ok(spec) => {
            report.status = Status::Pass;
            report.note(format!("weight {}, level {}, character {}", spec.weight, spec.level, spec.character));
        }
        Err(violations) => {
            for v in violations {
                report.note(format!("violated: {v:?}"));
            }
        }
    }
    let sums: Vec<String> = cusp_order_sums(eq).iter().map(|(c, s)| format!("1/{c}: {s}")).collect();
    report.note(format!("cusp sums {}", sums.join(", ")));
    if !cusps_strictly_positive(eq) {
        report.note("not every cusp sum is strictly positive");
    }
    report
}

fn eta_check(a: &EtaCheckArgs) -> Result<Run> {
    let mut results = Vec::new();
    let config = match (&a.alpha, a.level, &a.r) {
        (Some(sel), _, _) => {
            for &alpha in &sel.values {
                let params = derive_params_lifted(alpha, a.a_lift);
                for (name, eq) in [("g1 = ", params.g1_eta()?), ("g2 = ", params.g2_eta()?)] {
                    let mut r = eta_report(name, &eq);
                    r.alpha = Some(alpha);
                    results.push(r);
                }
            }
            json!({ "alpha": sel.label, "a_lift": a.a_lift })
        }
        (None, Some(level), Some(r)) => {
            let eq = EtaQuotient::new(level, parse_exponents(r)?, a.e4)?;
            results.push(eta_report("", &eq));
            json!({ "level": level, "r": r, "e4": a.e4 })
        }
        _ => bail!("eta-check needs either --alpha or both --level and --r"),
    };
    Ok(Run::new("verify eta-check", config, results))
}

fn sturm(a: &SturmArgs) -> Result<Run> {
    let mut results = Vec::new();
    let config = match (&a.alpha, a.weight, a.level) {
        (Some(sel), _, _) => {
            for &alpha in &sel.values {
                let p = derive_params_lifted(alpha, 0);
                let mut r = VerificationReport::new(
                    CheckKind::Sturm,
                    format!("Sturm bound for alpha={alpha}: weight {}, level {}", p.weight, p.level),
                );
                r.alpha = Some(alpha);
                r.bound = Some(p.sturm);
                r.status = Status::Pass;
                r.note(format!(
                    "A={} r={} character {} shifts {} and {}",
                    p.a_exp, p.r, p.character, p.shift1, p.shift2
                ));
                results.push(r);
            }
            json!({ "alpha": sel.label })
        }
        (None, Some(weight), Some(level)) => {
            ensure!(weight >= 0, "weight must be nonnegative");
            ensure!(level >= 1, "level must be positive");
            let mut r = VerificationReport::new(
                CheckKind::Sturm,
                format!("Sturm bound for weight {weight}, level {level}"),
            );
            r.bound = Some(sturm_bound(weight, level));
            r.status = Status::Pass;
            results.push(r);
            json!({ "weight": weight, "level": level })
        }
        _ => bail!("sturm needs either --alpha or both --weight and --level"),
    };
    Ok(Run::new("verify sturm", config, results))
}

fn scan(a: &ScanArgs) -> Result<Run> {
    let results = akcong::prover::scan_alpha(
        a.alpha.values.iter().copied(),
        a.n_max,
        &akcong::report::NullSink,
        exec_for(a.common.workers),
    )?;
    let config = json!({ "alpha": a.alpha.label, "n_max": a.n_max, "workers": a.common.workers });
    Ok(Run::new("verify scan", config, results))
}

/// One row of `coeffs`.
pub struct CoeffRow {
    pub n: u64,
    pub residue: u8,
    pub exact: Option<String>,
}

pub fn coeffs(a: &CoeffsArgs) -> Result<Vec<CoeffRow>> {
    ensure!(a.modulus >= 2, "modulus must be at least 2");
    let precision = usize::try_from(a.n.end)
        .ok()
        .and_then(|e| e.checked_add(1))
        .filter(|&p| p <= DEFAULT_MAX_PRECISION)
        .with_context(|| format!("n up to {} exceeds the precision cap {DEFAULT_MAX_PRECISION}", a.n.end))?;
    let series = gen_a(a.k, a.modulus, precision)?;
    (a.n.start..=a.n.end)
        .map(|n| {
            let exact = if a.exact && n <= ORACLE_LIMIT {
                Some(brute_force_a(a.k, n)?.to_string())
            } else {
                None
            };
            Ok(CoeffRow { n, residue: series.coeff(n as usize), exact })
        })
        .collect()
}
