//! Hecke operators modulo p.
//!
//! For a form of weight `k >= 2` the term `chi(p) p^{k-1} a(m/p)` of `T_p`
//! vanishes mod p, leaving the coefficient extraction `U_p`. Only that
//! specialization is provided, so the input modulus must equal `p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeResult {
    pub series: TruncSeries,
    pub iterations: u32,
    pub input_precision: usize,
    pub output_precision: usize,
}

/// Precision bookkeeping of a [`HeckeResult`], detached from the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrecisionLedger {
    pub prime: u32,
    pub iterations: u32,
    pub input_precision: usize,
    pub output_precision: usize,
}

impl HeckeResult {
    pub fn ledger(&self, prime: u32) -> PrecisionLedger {
        PrecisionLedger {
            prime,
            iterations: self.iterations,
            input_precision: self.input_precision,
            output_precision: self.output_precision,
        }
    }
}

fn check_prime_modulus(a: &TruncSeries, p: u32) -> Result<()> {
    if a.modulus() != p {
        return Err(Error::WrongModulus { expected: p, found: a.modulus() });
    }
    if !crate::series::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `sum a(n) q^n  ->  sum a(pn) q^n`, precision `floor(P / p)`.
pub fn u_p(a: &TruncSeries, p: u32) -> Result<TruncSeries> {
    check_prime_modulus(a, p)?;
    let step = p as usize;
    if a.precision() < step {
        return Err(Error::InsufficientPrecision { required: step, available: a.precision() });
    }
    let out_len = a.precision() / step;
    let coeffs: Vec<u8> = a.coeffs().iter().step_by(step).take(out_len).copied().collect();
    TruncSeries::from_residues(p, coeffs)
}

/// `e`-fold `U_p`, done as a single stride-`p^e` extraction.
pub fn u_p_iter(a: &TruncSeries, p: u32, e: u32) -> Result<HeckeResult> {
    check_prime_modulus(a, p)?;
    if e == 0 {
        return Err(Error::ZeroIterations);
    }
    let stride = (p as usize)
        .checked_pow(e)
        .ok_or(Error::Overflow("p^e"))?;
    let input_precision = a.precision();
    if input_precision < stride {
        return Err(Error::InsufficientPrecision { required: stride, available: input_precision });
    }
    let output_precision = input_precision / stride;
    let coeffs: Vec<u8> = a.coeffs().iter().step_by(stride).take(output_precision).copied().collect();
    Ok(HeckeResult {
        series: TruncSeries::from_residues(p, coeffs)?,
        iterations: e,
        input_precision,
        output_precision,
    })
}

/// Input precision needed for `u_p_iter(_, p, e)` to return `outputs` coefficients.
pub fn required_input_precision(p: u32, e: u32, outputs: usize) -> usize {
    (p as usize).pow(e) * outputs
}
