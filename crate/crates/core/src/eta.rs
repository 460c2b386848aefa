//! Eta quotients `prod_{d | N} eta(d z)^{r_d}`, optionally times a power of
//! the level-one Eisenstein series `E_4`, and the sufficient conditions for
//! them to be holomorphic modular forms on `Gamma_0(N)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
    e4_power: u64,
}

impl EtaQuotient {
    /// Zero exponents are dropped. Every scale must divide `level`, and
    /// `sum r_d / 2` must be an integer.
    pub fn new<I>(level: u64, exponents: I, e4_power: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        if level == 0 {
            return Err(Error::InvalidEtaQuotient("level must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for (d, r) in exponents {
            if d == 0 || !level.is_multiple_of(d) {
                return Err(Error::InvalidEtaQuotient(format!("{d} does not divide level {level}")));
            }
            *map.entry(d).or_insert(0i64) += r;
        }
        map.retain(|_, r| *r != 0);
        let total: i64 = map.values().sum();
        if total % 2 != 0 {
            return Err(Error::InvalidEtaQuotient(format!(
                "half-integral weight {total}/2"
            )));
        }
        Ok(Self { level, exponents: map, e4_power })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn e4_power(&self) -> u64 {
        self.e4_power
    }

    /// Weight of the eta part alone, `sum r_d / 2`.
    pub fn eta_weight(&self) -> i64 {
        self.exponents.values().sum::<i64>() / 2
    }

    pub fn weight(&self) -> i64 {
        self.eta_weight() + 4 * self.e4_power as i64
    }

    /// `sum d * r_d`; the q-expansion starts at `q^{this / 24}`.
    pub fn order_at_infinity_numerator(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum()
    }

    /// `sum (N / d) * r_d`.
    pub fn order_at_zero_numerator(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| (self.level / d) as i64 * r).sum()
    }

    /// Integer exponent of the leading `q` power, when `24 | sum d r_d`.
    pub fn prefactor_shift(&self) -> Option<i64> {
        let s = self.order_at_infinity_numerator();
        (s % 24 == 0).then_some(s / 24)
    }

    /// Squarefree kernel of `(-1)^k prod d^{r_d}` in `Q* / Q*^2`, where `k` is
    /// the eta weight. Determines the quadratic character.
    pub fn character_discriminant(&self) -> i64 {
        let mut kernel: BTreeMap<u64, u32> = BTreeMap::new();
        for (&d, &r) in &self.exponents {
            if r.rem_euclid(2) == 1 {
                for (p, e) in factorize(d) {
                    *kernel.entry(p).or_insert(0) += e;
                }
            }
        }
        let magnitude: i64 = kernel
            .iter()
            .filter(|(_, &e)| e % 2 == 1)
            .map(|(&p, _)| p as i64)
            .product();
        if self.eta_weight().rem_euclid(2) == 1 {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(d, r)| format!("eta({d}z)^{r}"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "1".to_string() } else { parts.join(" ") })?;
        if self.e4_power > 0 {
            write!(f, " E4^{}", self.e4_power)?;
        }
        write!(f, " [N={}]", self.level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "discriminant", rename_all = "kebab-case")]
pub enum CharacterKind {
    Trivial,
    /// `d -> (-1 / d)`.
    MinusOneKronecker,
    /// `d -> (D / d)` for a squarefree `D` other than `1, -1`.
    GeneralKronecker(i64),
}

impl CharacterKind {
    pub fn from_discriminant(d: i64) -> Self {
        match d {
            1 => CharacterKind::Trivial,
            -1 => CharacterKind::MinusOneKronecker,
            d => CharacterKind::GeneralKronecker(d),
        }
    }

    pub fn discriminant(self) -> i64 {
        match self {
            CharacterKind::Trivial => 1,
            CharacterKind::MinusOneKronecker => -1,
            CharacterKind::GeneralKronecker(d) => d,
        }
    }
}

impl fmt::Display for CharacterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterKind::Trivial => write!(f, "trivial"),
            CharacterKind::MinusOneKronecker => write!(f, "(-1/.)"),
            CharacterKind::GeneralKronecker(d) => write!(f, "({d}/.)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FormSpec {
    pub weight: i64,
    pub level: u64,
    pub character: CharacterKind,
}

impl FormSpec {
    /// Value of the character at `d`; zero when `d` shares a factor with the level.
    pub fn character_value(&self, d: i64) -> i8 {
        if d.gcd(&(self.level as i64)) != 1 {
            return 0;
        }
        kronecker(self.character.discriminant(), d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Violation {
    /// `sum d r_d` not divisible by 24.
    OrderAtInfinity { sum: i64 },
    /// `sum (N/d) r_d` not divisible by 24.
    OrderAtZero { sum: i64 },
    /// Negative cusp sum at the cusp `1/divisor`.
    Cusp { divisor: u64, numer: i64, denom: i64 },
}

/// Exact `sum_d gcd(c, d)^2 r_d / d` for each divisor `c` of the level.
pub fn cusp_order_sums(eq: &EtaQuotient) -> BTreeMap<u64, Ratio<i64>> {
    divisors(eq.level)
        .into_iter()
        .map(|c| {
            let sum = eq
                .exponents
                .iter()
                .map(|(&d, &r)| {
                    let g = c.gcd(&d) as i64;
                    Ratio::new(g * g * r, d as i64)
                })
                .fold(Ratio::from_integer(0), |a, b| a + b);
            (c, sum)
        })
        .collect()
}

/// Decide the sufficient conditions for `eq` to lie in `M_k(Gamma_0(N), chi)`.
/// On failure every violated condition is listed.
pub fn check_modularity(eq: &EtaQuotient) -> std::result::Result<FormSpec, Vec<Violation>> {
    let mut violations = Vec::new();
    let inf = eq.order_at_infinity_numerator();
    if inf % 24 != 0 {
        violations.push(Violation::OrderAtInfinity { sum: inf });
    }
    let zero = eq.order_at_zero_numerator();
    if zero % 24 != 0 {
        violations.push(Violation::OrderAtZero { sum: zero });
    }
    for (divisor, sum) in cusp_order_sums(eq) {
        if sum < Ratio::from_integer(0) {
            violations.push(Violation::Cusp {
                divisor,
                numer: *sum.numer(),
                denom: *sum.denom(),
            });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    Ok(FormSpec {
        weight: eq.weight(),
        level: eq.level,
        character: CharacterKind::from_discriminant(eq.character_discriminant()),
    })
}

/// Whether every cusp sum is strictly positive, not just nonnegative.
pub fn cusps_strictly_positive(eq: &EtaQuotient) -> bool {
    cusp_order_sums(eq).values().all(|s| *s > Ratio::from_integer(0))
}

/// Kronecker symbol `(a / n)` for all integers `a`, `n`.
pub fn kronecker(a: i64, n: i64) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    n >>= twos;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    result * jacobi(a.rem_euclid(n), n)
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i64, mut n: i64) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
