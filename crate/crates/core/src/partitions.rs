//! Generating functions for `p(n)`, `p_k(n)` and `a_k(n)`, and an exact
//! combinatorial oracle for `a_k(n)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::series::{mul_eta_power, TruncSeries};

/// Default guard rail for [`brute_force_a`].
pub const ORACLE_LIMIT: u64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionFamily {
    /// `p(n)`, generating function `1/f_1`.
    Plain,
    /// `p_k(n)`, every part in one of `k` colors: `1/f_1^k`.
    Colored,
    /// `a_k(n)`, odd parts in one of `k` colors, even parts uncolored:
    /// `f_2^{k-1}/f_1^k`.
    OddColored,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSeries {
    pub family: PartitionFamily,
    pub k: u64,
    pub series: TruncSeries,
}

impl PartitionSeries {
    pub fn coeff(&self, n: usize) -> u8 {
        self.series.coeff(n)
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }
}

fn eta_quotient_series(
    factors: &[(usize, i64)],
    modulus: u32,
    precision: usize,
) -> Result<TruncSeries> {
    let one = TruncSeries::one(modulus, precision)?;
    // Divide first: the 1/f stage works on the sparse starting series 1.
    let mut ordered = factors.to_vec();
    ordered.sort_by_key(|&(_, e)| e > 0);
    Ok(ordered
        .iter()
        .fold(one, |acc, &(scale, e)| mul_eta_power(&acc, scale, e, Exec::default())))
}

pub fn gen_p(modulus: u32, precision: usize) -> Result<PartitionSeries> {
    let series = eta_quotient_series(&[(1, -1)], modulus, precision)?;
    Ok(PartitionSeries { family: PartitionFamily::Plain, k: 1, series })
}

pub fn gen_pk(k: u64, modulus: u32, precision: usize) -> Result<PartitionSeries> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let series = eta_quotient_series(&[(1, -(k as i64))], modulus, precision)?;
    Ok(PartitionSeries { family: PartitionFamily::Colored, k, series })
}

/// `sum a_k(n) q^n = f_2^{k-1} / f_1^k` modulo `modulus`.
pub fn gen_a(k: u64, modulus: u32, precision: usize) -> Result<PartitionSeries> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let k_i = i64::try_from(k).map_err(|_| Error::Overflow("color count"))?;
    let series = eta_quotient_series(&[(1, -k_i), (2, k_i - 1)], modulus, precision)?;
    Ok(PartitionSeries { family: PartitionFamily::OddColored, k, series })
}

/// Exact `a_k(n)` by enumeration, for `n <= ORACLE_LIMIT`.
pub fn brute_force_a(k: u64, n: u64) -> Result<BigUint> {
    brute_force_a_with_limit(k, n, ORACLE_LIMIT)
}

/// Parts are chosen in decreasing size. A part of odd size used `c` times in
/// `k` colors contributes the number of color multisets, `C(c + k - 1, k - 1)`;
/// an even part contributes 1.
pub fn brute_force_a_with_limit(k: u64, n: u64, limit: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    if n > limit {
        return Err(Error::OracleRange { n, limit });
    }
    let n = n as usize;
    let multisets: Vec<BigUint> = (0..=n as u64).map(|c| binomial(c + k - 1, c)).collect();
    // ways[r] = number of ways to fill r using the part sizes placed so far.
    let mut ways: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in (1..=n).rev() {
        let mut next = vec![BigUint::zero(); n + 1];
        for (rest, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let mut c = 0usize;
            while rest + c * part <= n {
                let weight = if part % 2 == 1 { &multisets[c] } else { &multisets[0] };
                next[rest + c * part] += w * weight;
                c += 1;
            }
        }
        ways = next;
    }
    Ok(ways.swap_remove(n))
}

fn binomial(n: u64, r: u64) -> BigUint {
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residues(s: &PartitionSeries) -> Vec<u8> {
        s.series.coeffs().to_vec()
    }

    #[test]
    fn a1_is_p() {
        assert_eq!(residues(&gen_a(1, 11, 6).unwrap()), vec![1, 1, 2, 3, 5, 7]);
        assert_eq!(residues(&gen_a(1, 3, 6).unwrap()), vec![1, 1, 2, 0, 2, 1]);
        for m in [3, 5, 7, 11] {
            assert_eq!(gen_a(1, m, 1000).unwrap().series, gen_p(m, 1000).unwrap().series);
        }
    }

    #[test]
    fn a2_small_values() {
        assert_eq!(residues(&gen_a(2, 11, 4).unwrap()), vec![1, 2, 4, 8]);
    }

    #[test]
    fn a11_one_is_zero_mod_11() {
        assert_eq!(gen_a(11, 11, 2).unwrap().coeff(1), 0);
    }

    #[test]
    fn zero_colors_rejected() {
        assert_eq!(gen_a(0, 3, 5).unwrap_err(), Error::ZeroColors);
        assert_eq!(brute_force_a(0, 5).unwrap_err(), Error::ZeroColors);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_a(3, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(brute_force_a(2, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(brute_force_a(1, 4).unwrap(), BigUint::from(5u32));
        assert_eq!(brute_force_a(1, 60).unwrap(), BigUint::from(966467u32));
        assert_eq!(brute_force_a(1, 61), Err(Error::OracleRange { n: 61, limit: 60 }));
    }

    #[test]
    fn leading_coefficients() {
        for k in 1..=30u64 {
            for m in [3u32, 5, 7, 11] {
                let s = gen_a(k, m, 2).unwrap();
                assert_eq!(s.coeff(0), 1);
                assert_eq!(s.coeff(1) as u64, k % m as u64);
            }
        }
    }

    #[test]
    fn colored_partitions() {
        // p_2(0..5) = 1, 2, 5, 10, 20, 36
        assert_eq!(residues(&gen_pk(2, 37, 6).unwrap()), vec![1, 2, 5, 10, 20, 36]);
    }
}
