//! Truncated formal power series over `Z/mZ` for small `m`.
//!
//! A [`TruncSeries`] stores the coefficients of `q^0 .. q^{P-1}` as residues
//! in `0..m`. Binary operations on series of different precision truncate to
//! the smaller one.
//!
//! Eta products `f_d^e` never go through dense multiplication. `f_d` is sparse
//! (pentagonal number theorem), so multiplying or dividing by it costs
//! `O(P * sqrt(P / d))`. For a prime modulus `p` the exponent is split into
//! base-`p` digits using `F(q)^p = F(q^p) (mod p)`, which turns `f_1^{81}` into
//! a single sparse factor `f_{81}`.

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Default ceiling on the number of coefficients any single series may hold.
pub const DEFAULT_MAX_PRECISION: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    modulus: u8,
    coeffs: Vec<u8>,
}

fn check_modulus(m: u32) -> Result<u8> {
    if (2..=255).contains(&m) {
        Ok(m as u8)
    } else {
        Err(Error::InvalidModulus(m))
    }
}

fn check_precision(precision: usize, cap: usize) -> Result<()> {
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    if precision > cap {
        return Err(Error::PrecisionCap { requested: precision, cap });
    }
    Ok(())
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl TruncSeries {
    pub fn zero(modulus: u32, precision: usize) -> Result<Self> {
        let m = check_modulus(modulus)?;
        check_precision(precision, usize::MAX)?;
        Ok(Self { modulus: m, coeffs: vec![0; precision] })
    }

    pub fn one(modulus: u32, precision: usize) -> Result<Self> {
        Self::monomial(modulus, precision, 0, 1)
    }

    /// `c * q^n`, or zero when `n` is beyond the precision.
    pub fn monomial(modulus: u32, precision: usize, n: usize, c: i64) -> Result<Self> {
        let mut s = Self::zero(modulus, precision)?;
        if n < precision {
            s.coeffs[n] = c.rem_euclid(modulus as i64) as u8;
        }
        Ok(s)
    }

    /// Build from arbitrary integers, reducing each into `0..m`.
    pub fn from_ints<I>(modulus: u32, values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let m = check_modulus(modulus)?;
        let coeffs: Vec<u8> = values
            .into_iter()
            .map(|v| v.into().rem_euclid(m as i64) as u8)
            .collect();
        check_precision(coeffs.len(), usize::MAX)?;
        Ok(Self { modulus: m, coeffs })
    }

    /// Build from residues that are already reduced.
    pub fn from_residues(modulus: u32, coeffs: Vec<u8>) -> Result<Self> {
        let m = check_modulus(modulus)?;
        check_precision(coeffs.len(), usize::MAX)?;
        if let Some(&c) = coeffs.iter().find(|&&c| c >= m) {
            return Err(Error::NotResidue { value: c, modulus: m });
        }
        Ok(Self { modulus: m, coeffs })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus as u32
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.coeffs
    }

    /// Coefficient of `q^n`. Panics if `n` is not below the precision.
    pub fn coeff(&self, n: usize) -> u8 {
        self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<u8> {
        self.coeffs.get(n).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Index of the first nonzero coefficient (the order mod m), if any.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// First index below the common precision where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>> {
        self.same_modulus(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        check_precision(precision, usize::MAX)?;
        let p = precision.min(self.precision());
        Ok(Self { modulus: self.modulus, coeffs: self.coeffs[..p].to_vec() })
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus as u32,
                right: other.modulus as u32,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32, u32) -> u32) -> Result<Self> {
        self.same_modulus(other)?;
        let m = self.modulus as u32;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f(a as u32, b as u32, m) as u8)
            .collect();
        Ok(Self { modulus: self.modulus, coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, m| (a + b) % m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, m| (a + m - b) % m)
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus;
        let coeffs = self.coeffs.iter().map(|&c| if c == 0 { 0 } else { m - c }).collect();
        Self { modulus: m, coeffs }
    }

    pub fn scale(&self, c: i64) -> Self {
        let m = self.modulus as u32;
        let c = c.rem_euclid(m as i64) as u32;
        let coeffs = self.coeffs.iter().map(|&a| ((a as u32 * c) % m) as u8).collect();
        Self { modulus: self.modulus, coeffs }
    }

    /// Multiply by `q^s`, keeping the precision.
    pub fn shift_up(&self, s: usize) -> Self {
        let p = self.precision();
        let mut coeffs = vec![0u8; p];
        if s < p {
            coeffs[s..].copy_from_slice(&self.coeffs[..p - s]);
        }
        Self { modulus: self.modulus, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        mul_with(self, other, Exec::default())
    }

    /// Dense binary powering. Quadratic per step; used as a cross-check for
    /// the sparse eta kernels and for small precisions.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut acc = Self::one(self.modulus(), self.precision())?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse by the standard recurrence; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus as i64;
        let c0 = self.coeffs[0] as i64;
        let inv0 = (1..m)
            .find(|x| (x * c0) % m == 1)
            .ok_or(Error::NotUnit)?;
        let p = self.precision();
        let mut out = vec![0u8; p];
        out[0] = inv0 as u8;
        for n in 1..p {
            let s: i64 = (1..=n)
                .map(|i| self.coeffs[i] as i64 * out[n - i] as i64)
                .sum();
            out[n] = ((-s).rem_euclid(m) * inv0 % m) as u8;
        }
        Ok(Self { modulus: self.modulus, coeffs: out })
    }
}

/// Dense truncated product, `O(P^2)`.
pub fn mul(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    mul_with(a, b, Exec::default())
}

pub fn mul_with(a: &TruncSeries, b: &TruncSeries, exec: Exec) -> Result<TruncSeries> {
    a.same_modulus(b)?;
    let m = a.modulus as u32;
    let p = a.precision().min(b.precision());
    let (x, y) = (&a.coeffs[..p], &b.coeffs[..p]);
    // Each term is < m^2; flush the u32 accumulators before they can overflow.
    let flush_every = (u32::MAX / ((m - 1) * (m - 1)).max(1)) as usize;
    let mut out = vec![0u8; p];
    par::fill_chunks(&mut out, exec, |start, chunk| {
        let end = start + chunk.len();
        let mut acc = vec![0u32; chunk.len()];
        let mut pending = 0usize;
        for (i, &xi) in x[..end].iter().enumerate() {
            if xi == 0 {
                continue;
            }
            // out[n] += x[i] * y[n - i] for n in max(start, i)..end
            let lo = start.max(i);
            let xi = xi as u32;
            let ys = &y[lo - i..end - i];
            for (slot, &yv) in acc[lo - start..].iter_mut().zip(ys) {
                *slot += xi * yv as u32;
            }
            pending += 1;
            if pending == flush_every {
                acc.iter_mut().for_each(|v| *v %= m);
                pending = 0;
            }
        }
        for (o, v) in chunk.iter_mut().zip(acc) {
            *o = (v % m) as u8;
        }
    });
    Ok(TruncSeries { modulus: a.modulus, coeffs: out })
}

/// `F(q) -> F(q^d)`, precision unchanged.
pub fn scale_exponents(a: &TruncSeries, d: usize) -> TruncSeries {
    assert!(d >= 1, "scale factor must be positive");
    let p = a.precision();
    let mut coeffs = vec![0u8; p];
    for (n, &c) in a.coeffs.iter().enumerate() {
        let Some(idx) = n.checked_mul(d).filter(|&i| i < p) else { break };
        coeffs[idx] = c;
    }
    TruncSeries { modulus: a.modulus, coeffs }
}

/// `F(q)^3 = F(q^3)` over GF(3).
pub fn frobenius_pow3(a: &TruncSeries) -> Result<TruncSeries> {
    if a.modulus != 3 {
        return Err(Error::WrongModulus { expected: 3, found: a.modulus as u32 });
    }
    Ok(scale_exponents(a, 3))
}

/// Nonzero terms of `f_scale = prod (1 - q^{scale n})` below `precision`,
/// as `(exponent, sign)` in increasing exponent order.
///
/// Generalized pentagonal numbers `k(3k-1)/2` for `k = 0, 1, -1, 2, -2, ...`
/// carry sign `(-1)^k`.
pub fn pentagonal_terms(scale: usize, precision: usize) -> Vec<(usize, i8)> {
    let mut terms = vec![(0usize, 1i8)];
    if scale == 0 {
        return terms;
    }
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        let e1 = g1.saturating_mul(scale);
        if e1 >= precision {
            break;
        }
        terms.push((e1, sign));
        let e2 = g2.saturating_mul(scale);
        if e2 < precision {
            terms.push((e2, sign));
        }
    }
    terms
}

/// Offsets of a sparse `+-1` series, split by sign, excluding the constant term.
struct SparseFactor {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl SparseFactor {
    fn eta(scale: usize, precision: usize) -> Self {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (e, s) in pentagonal_terms(scale, precision).into_iter().skip(1) {
            if s > 0 {
                plus.push(e);
            } else {
                minus.push(e);
            }
        }
        Self { plus, minus }
    }

    fn is_trivial(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }
}

#[inline]
fn gather(src: &[u8], n: usize, offsets: &[usize]) -> u32 {
    let mut s = 0u32;
    for &g in offsets {
        if g > n {
            break;
        }
        s += src[n - g] as u32;
    }
    s
}

/// `a * f_scale`, computed from the pentagonal expansion.
pub fn mul_by_eta(a: &TruncSeries, scale: usize, exec: Exec) -> TruncSeries {
    let p = a.precision();
    let f = SparseFactor::eta(scale, p);
    if f.is_trivial() {
        return a.clone();
    }
    let m = a.modulus as u32;
    let src = &a.coeffs;
    let mut out = vec![0u8; p];
    par::fill_chunks(&mut out, exec, |start, chunk| {
        for (i, o) in chunk.iter_mut().enumerate() {
            let n = start + i;
            let pos = src[n] as u32 + gather(src, n, &f.plus);
            let neg = gather(src, n, &f.minus) % m;
            *o = ((pos + m - neg) % m) as u8;
        }
    });
    TruncSeries { modulus: a.modulus, coeffs: out }
}

/// `a / f_scale` by the pentagonal recurrence. Inherently sequential in `n`.
pub fn div_by_eta(a: &TruncSeries, scale: usize) -> TruncSeries {
    let p = a.precision();
    let f = SparseFactor::eta(scale, p);
    if f.is_trivial() {
        return a.clone();
    }
    let m = a.modulus as u32;
    // b = a / f  <=>  b[n] = a[n] - sum_{plus} b[n-g] + sum_{minus} b[n-g]
    let mut b = vec![0u8; p];
    for n in 0..p {
        let pos = a.coeffs[n] as u32 + gather(&b, n, &f.minus);
        let neg = gather(&b, n, &f.plus) % m;
        b[n] = ((pos + m - neg) % m) as u8;
    }
    TruncSeries { modulus: a.modulus, coeffs: b }
}

/// `a * f_scale^exponent`.
///
/// For a prime modulus `p` the exponent is split into base-`p` digits and
/// digit `i` contributes `f_{scale * p^i}^{digit}`. Otherwise the factor is
/// applied `|exponent|` times.
pub fn mul_eta_power(a: &TruncSeries, scale: usize, exponent: i64, exec: Exec) -> TruncSeries {
    let p = a.precision();
    let m = a.modulus as u64;
    let apply = |s: TruncSeries, sc: usize, times: u64| -> TruncSeries {
        (0..times).fold(s, |acc, _| {
            if exponent > 0 {
                mul_by_eta(&acc, sc, exec)
            } else {
                div_by_eta(&acc, sc)
            }
        })
    };
    let mut mag = exponent.unsigned_abs();
    if !is_prime(m as u32) {
        return apply(a.clone(), scale, mag);
    }
    let mut out = a.clone();
    let mut sc = scale;
    while mag > 0 {
        // f_sc is 1 to this precision once sc >= p.
        if sc >= p {
            break;
        }
        out = apply(out, sc, mag % m);
        mag /= m;
        sc = match sc.checked_mul(m as usize) {
            Some(v) => v,
            None => break,
        };
    }
    out
}

/// `f_scale^exponent` to `precision` coefficients, without the `q^{scale*exponent/24}`
/// prefactor of the corresponding eta power.
pub fn eta_product(scale: usize, exponent: i64, modulus: u32, precision: usize) -> Result<TruncSeries> {
    eta_product_capped(scale, exponent, modulus, precision, DEFAULT_MAX_PRECISION)
}

pub fn eta_product_capped(
    scale: usize,
    exponent: i64,
    modulus: u32,
    precision: usize,
    cap: usize,
) -> Result<TruncSeries> {
    check_precision(precision, cap)?;
    if scale == 0 {
        return Err(Error::InvalidEtaQuotient("eta scale must be positive".into()));
    }
    let m = check_modulus(modulus)?;
    if exponent == 1 {
        let mut coeffs = vec![0u8; precision];
        for (e, s) in pentagonal_terms(scale, precision) {
            coeffs[e] = if s > 0 { 1 } else { m - 1 };
        }
        return Ok(TruncSeries { modulus: m, coeffs });
    }
    let one = TruncSeries::one(modulus, precision)?;
    Ok(mul_eta_power(&one, scale, exponent, Exec::default()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(m: u32, v: &[i64]) -> TruncSeries {
        TruncSeries::from_ints(m, v.iter().copied()).unwrap()
    }

    /// Direct product expansion of f_d, independent of the pentagonal theorem.
    fn f_direct(d: usize, m: u32, p: usize) -> TruncSeries {
        let mut acc = TruncSeries::one(m, p).unwrap();
        let mut n = 1;
        while n * d < p {
            let factor = TruncSeries::from_ints(
                m,
                (0..p).map(|i| if i == 0 { 1 } else if i == n * d { -1 } else { 0 }),
            )
            .unwrap();
            acc = acc.mul(&factor).unwrap();
            n += 1;
        }
        acc
    }

    #[test]
    fn binomial_square() {
        let a = s(3, &[1, 1, 0]);
        assert_eq!(a.mul(&a).unwrap().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn geometric_inverse_pair() {
        let a = s(5, &[1, -1, 0, 0, 0, 0, 0, 0]);
        let b = s(5, &[1; 8]);
        assert_eq!(a.mul(&b).unwrap().coeffs(), &[1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn triple_product_is_f3_mod_3() {
        let f1 = f_direct(1, 3, 10);
        let cube = f1.mul(&f1.mul(&f1).unwrap()).unwrap();
        assert_eq!(cube, f_direct(3, 3, 10));
    }

    #[test]
    fn modulus_mismatch_is_error() {
        let a = s(3, &[1, 1]);
        let b = s(5, &[1, 1]);
        assert_eq!(a.mul(&b), Err(Error::ModulusMismatch { left: 3, right: 5 }));
    }

    #[test]
    fn mixed_precision_truncates() {
        let a = s(7, &[1, 1, 1, 1, 1]);
        let b = s(7, &[1, 1]);
        assert_eq!(a.mul(&b).unwrap().precision(), 2);
        assert_eq!(a.add(&b).unwrap().precision(), 2);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_product(1, 1, 3, 8).unwrap().coeffs(), &[1, 2, 2, 0, 0, 1, 0, 1]);
        assert_eq!(eta_product(1, -1, 5, 5).unwrap().coeffs(), &[1, 1, 2, 3, 0]);
        // 1 - q^2 truncated to three terms
        assert_eq!(eta_product(2, 1, 3, 3).unwrap().coeffs(), &[1, 0, 2]);
    }

    #[test]
    fn eta_product_matches_direct_expansion() {
        for m in [3, 5, 7, 11, 4] {
            for d in [1, 2, 3, 9] {
                assert_eq!(eta_product(d, 1, m, 120).unwrap(), f_direct(d, m, 120), "m={m} d={d}");
            }
        }
    }

    #[test]
    fn eta_powers_match_dense_powering() {
        for m in [3, 5, 7, 11, 6] {
            let f1 = f_direct(1, m, 150);
            let inv = f1.inverse().unwrap();
            for e in [2i64, 3, 10, 11, 27, 81, -2, -5, -11, -14] {
                let dense = if e > 0 { f1.pow(e as u64) } else { inv.pow((-e) as u64) }.unwrap();
                assert_eq!(eta_product(1, e, m, 150).unwrap(), dense, "m={m} e={e}");
            }
        }
    }

    #[test]
    fn zero_exponent_and_cap() {
        assert!(eta_product(4, 0, 3, 10).unwrap().coeffs().iter().skip(1).all(|&c| c == 0));
        assert_eq!(
            eta_product_capped(1, -1, 3, 1000, 999),
            Err(Error::PrecisionCap { requested: 1000, cap: 999 })
        );
        assert_eq!(eta_product(1, 1, 3, 0), Err(Error::ZeroPrecision));
    }

    #[test]
    fn frobenius_examples() {
        let a = s(3, &[1, -1, 0, 0, 0, 0]);
        assert_eq!(frobenius_pow3(&a).unwrap().coeffs(), &[1, 0, 0, 2, 0, 0]);
        let f1 = eta_product(1, 1, 3, 30).unwrap();
        assert_eq!(frobenius_pow3(&f1).unwrap(), f_direct(3, 3, 30));
        let one = TruncSeries::one(3, 7).unwrap();
        assert_eq!(frobenius_pow3(&one).unwrap(), one);
        assert_eq!(
            frobenius_pow3(&s(5, &[1])),
            Err(Error::WrongModulus { expected: 3, found: 5 })
        );
    }

    #[test]
    fn scale_examples() {
        assert_eq!(scale_exponents(&s(3, &[1, 1, 1, 0, 0, 0]), 2).coeffs(), &[1, 0, 1, 0, 1, 0]);
        let a = s(7, &[3, 1, 4, 1, 5]);
        assert_eq!(scale_exponents(&a, 1), a);
        let f1 = eta_product(1, 1, 3, 20).unwrap();
        assert_eq!(scale_exponents(&f1, 9), eta_product(9, 1, 3, 20).unwrap());
    }

    #[test]
    fn shift_and_order() {
        let a = s(3, &[1, 2, 0, 1]);
        assert_eq!(a.shift_up(2).coeffs(), &[0, 0, 1, 2]);
        assert_eq!(a.shift_up(2).order(), Some(2));
        assert_eq!(a.shift_up(9).order(), None);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = eta_product(1, -7, 5, 20_000).unwrap();
        let b = eta_product(2, 3, 5, 20_000).unwrap();
        assert_eq!(mul_with(&a, &b, Exec::Sequential).unwrap(), mul_with(&a, &b, Exec::Parallel).unwrap());
        assert_eq!(mul_by_eta(&a, 1, Exec::Sequential), mul_by_eta(&a, 1, Exec::Parallel));
    }
}
