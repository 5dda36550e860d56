//! Fixed-precision p-adic integers and the fermionic p-adic integral
//! realized as truncated alternating Riemann sums over `{0, ..., p^N - 1}`.
//!
//! Only odd primes are supported: the alternating unit sum over an odd
//! number of points is exactly 1, and `1 + q^l ≡ 2 (mod p)` stays a unit.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{int_valuation, rat_valuation, Rat, RatFunc};
use crate::qeuler::{q_euler_closed_form, QEulerKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("{value} is not a {p}-adic integer")]
    NotPadicInteger { value: Rat, p: u64 },
    #[error("mismatched p-adic rings: ({0}, {1}) vs ({2}, {3})")]
    RingMismatch(u64, u32, u64, u32),
    #[error("q0 = {q0} does not satisfy |1 - q0|_p < 1 for p = {p}")]
    QNotNearOne { q0: Rat, p: u64 },
    #[error("level {level} exceeds configured maximum {max}")]
    LevelOutOfRange { level: u32, max: u32 },
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
}

/// p-adic valuation of an exact quantity; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn of_rat(x: &Rat, p: u64) -> Self {
        rat_valuation(x, p).map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn of_int(x: &BigInt, p: u64) -> Self {
        if x.is_zero() {
            Valuation::Infinite
        } else {
            Valuation::Finite(int_valuation(x, p) as i64)
        }
    }

    pub fn at_least(&self, floor: i64) -> bool {
        match self {
            Valuation::Finite(v) => *v >= floor,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("infinity"),
        }
    }
}

/// Finite values as JSON numbers, infinity as the string `"infinity"`.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("infinity"),
        }
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_ring(p: u64, precision: u32) -> Result<(), PadicError> {
    if !is_odd_prime(p) {
        return Err(PadicError::NotOddPrime(p));
    }
    if precision == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    Ok(())
}

/// Residue class modulo `p^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: u64,
    precision: u32,
    residue: BigInt,
}

impl PadicInt {
    pub fn new(value: BigInt, p: u64, precision: u32) -> Result<Self, PadicError> {
        check_ring(p, precision)?;
        let modulus = BigInt::from(p).pow(precision);
        Ok(PadicInt {
            p,
            precision,
            residue: value.mod_floor(&modulus),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.precision)
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// Valuation known at this precision: `min(v_p(residue), N)`, so a zero
    /// residue reports `N` (meaning "at least N").
    pub fn valuation(&self) -> u32 {
        if self.residue.is_zero() {
            self.precision
        } else {
            (int_valuation(&self.residue, self.p) as u32).min(self.precision)
        }
    }

    fn same_ring(&self, other: &PadicInt) -> Result<(), PadicError> {
        if self.p != other.p || self.precision != other.precision {
            return Err(PadicError::RingMismatch(
                self.p,
                self.precision,
                other.p,
                other.precision,
            ));
        }
        Ok(())
    }

    fn with_residue(&self, value: BigInt) -> PadicInt {
        PadicInt {
            p: self.p,
            precision: self.precision,
            residue: value.mod_floor(&self.modulus()),
        }
    }

    pub fn add(&self, other: &PadicInt) -> Result<PadicInt, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_residue(&self.residue + &other.residue))
    }

    pub fn sub(&self, other: &PadicInt) -> Result<PadicInt, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_residue(&self.residue - &other.residue))
    }

    pub fn mul(&self, other: &PadicInt) -> Result<PadicInt, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_residue(&self.residue * &other.residue))
    }

    pub fn neg(&self) -> PadicInt {
        self.with_residue(-&self.residue)
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.precision)
    }
}

/// `numerator * denominator^{-1} mod p^N`.
pub fn padic_reduce(x: &Rat, p: u64, precision: u32) -> Result<PadicInt, PadicError> {
    check_ring(p, precision)?;
    let modulus = BigInt::from(p).pow(precision);
    let inv = mod_inverse(x.denom(), &modulus).ok_or_else(|| PadicError::NotPadicInteger { value: x.clone(), p })?;
    Ok(PadicInt {
        p,
        precision,
        residue: (x.numer() * inv).mod_floor(&modulus),
    })
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let egcd = a.mod_floor(modulus).extended_gcd(modulus);
    egcd.gcd.is_one().then(|| egcd.x.mod_floor(modulus))
}

/// Level-`N` truncation of the fermionic integral:
/// `sum_{x=0}^{p^N - 1} f(x) (-1)^x mod p^N`.
pub fn fermionic_riemann_sum<F>(f: F, p: u64, precision: u32) -> Result<PadicInt, PadicError>
where
    F: Fn(u64) -> Rat,
{
    check_ring(p, precision)?;
    let points = p.pow(precision);
    let mut acc = PadicInt::new(BigInt::zero(), p, precision)?;
    for x in 0..points {
        let term = padic_reduce(&f(x), p, precision)?;
        acc = if x % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

fn eval_int_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact defect of the shift identity for an integer polynomial `f`:
///
/// `D = S_N(f(· + n)) + (-1)^{n-1} S_N(f) - 2 sum_{l<n} (-1)^{n-1-l} f(l)`,
///
/// where `S_N` is the unreduced level-`N` alternating sum. Returns `v_p(D)`.
pub fn shift_defect(coeffs: &[BigInt], n: u64, p: u64, precision: u32) -> Result<Valuation, PadicError> {
    check_ring(p, precision)?;
    if n == 0 {
        return Err(PadicError::Exact(crate::exact::ExactError::InvalidInput(
            "shift n must be at least 1".into(),
        )));
    }
    let points = p.pow(precision);
    let alternating = |shift: u64| {
        (0..points).fold(BigInt::zero(), |acc, x| {
            let v = eval_int_poly(coeffs, &BigInt::from(x + shift));
            if x % 2 == 0 {
                acc + v
            } else {
                acc - v
            }
        })
    };
    let shifted = alternating(n);
    let plain = alternating(0);
    let mut defect = if (n - 1).is_multiple_of(2) {
        shifted + plain
    } else {
        shifted - plain
    };
    for l in 0..n {
        let v = eval_int_poly(coeffs, &BigInt::from(l)) * 2;
        if (n - 1 - l).is_multiple_of(2) {
            defect -= v;
        } else {
            defect += v;
        }
    }
    Ok(Valuation::of_int(&defect, p))
}

/// `c(s) = #{(y_1..y_r) in [0, m)^r : sum y_i = s}` for `s = 0..=r(m-1)`,
/// the coefficients of `(1 + z + ... + z^{m-1})^r`.
pub fn tuple_count_by_sum(r: u32, m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "range size must be positive");
    let mut counts = vec![BigInt::one()];
    let m = m as usize;
    for _ in 0..r {
        // Convolution with the all-ones window of width m, via prefix sums.
        let len = counts.len() + m - 1;
        let mut prefix = Vec::with_capacity(counts.len() + 1);
        prefix.push(BigInt::zero());
        for c in &counts {
            let next = prefix.last().unwrap() + c;
            prefix.push(next);
        }
        let mut next = Vec::with_capacity(len);
        for s in 0..len {
            let hi = (s + 1).min(counts.len());
            let lo = s.saturating_sub(m - 1).min(hi);
            next.push(&prefix[hi] - &prefix[lo]);
        }
        counts = next;
    }
    counts
}

/// Prime, maximal level and the p-adic base `q0` with `|1 - q0|_p < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralConfig {
    p: u64,
    max_level: u32,
    q0: Rat,
}

impl IntegralConfig {
    /// `q0` defaults to `1 + p`.
    pub fn new(p: u64, max_level: u32, q0: Option<Rat>) -> Result<Self, PadicError> {
        check_ring(p, max_level)?;
        let q0 = q0.unwrap_or_else(|| Rat::from_integer(BigInt::from(p + 1)));
        let near_one = padic_reduce(&(&q0 - Rat::one()), p, 1)
            .map(|r| r.is_zero())
            .unwrap_or(false);
        if !near_one {
            return Err(PadicError::QNotNearOne { q0, p });
        }
        Ok(IntegralConfig { p, max_level, q0 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    pub fn q0(&self) -> &Rat {
        &self.q0
    }

    fn check_level(&self, level: u32) -> Result<(), PadicError> {
        if level == 0 || level > self.max_level {
            return Err(PadicError::LevelOutOfRange {
                level,
                max: self.max_level,
            });
        }
        Ok(())
    }
}

/// Level-`N` truncation of the `r`-fold integral of `[a + y_1 + ... + y_r]_{q0}^n`.
///
/// The integrand and the sign `(-1)^{y_1+...+y_r}` depend only on
/// `s = y_1 + ... + y_r`, so the `r`-fold sum collapses to a single sum over
/// `s` weighted by [`tuple_count_by_sum`].
pub fn multivariate_moment(n: u32, r: u32, a: u64, cfg: &IntegralConfig, level: u32) -> Result<PadicInt, PadicError> {
    cfg.check_level(level)?;
    let p = cfg.p;
    let modulus = BigInt::from(p).pow(level);
    let q = padic_reduce(&cfg.q0, p, level)?.residue;
    let counts = tuple_count_by_sum(r, p.pow(level));

    // [a]_q and q^a mod p^N
    let mut q_pow = BigInt::one();
    let mut q_number = BigInt::zero();
    for _ in 0..a {
        q_number = (q_number + &q_pow).mod_floor(&modulus);
        q_pow = (q_pow * &q).mod_floor(&modulus);
    }
    let mut acc = BigInt::zero();
    for (s, c) in counts.iter().enumerate() {
        let term = c * q_number.modpow(&BigInt::from(n), &modulus);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        q_number = (q_number + &q_pow).mod_floor(&modulus);
        q_pow = (q_pow * &q).mod_floor(&modulus);
    }
    PadicInt::new(acc, p, level)
}

/// Exact `E_{n,q0}^{(r)}(a)` from the symbolic closed form.
pub fn moment_target(n: u32, r: u32, a: u32, cfg: &IntegralConfig) -> Result<Rat, PadicError> {
    let f: RatFunc = q_euler_closed_form(QEulerKey::at_integer(n, r, a));
    Ok(f.eval(&cfg.q0)?)
}

/// One level of the moment/closed-form comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentLevel {
    pub level: u32,
    pub moment: PadicInt,
    pub target: Rat,
    pub target_residue: PadicInt,
    /// `min(v_p(moment - target), level)`.
    pub valuation: u32,
}

pub fn moment_defect(n: u32, r: u32, a: u32, cfg: &IntegralConfig, level: u32) -> Result<MomentLevel, PadicError> {
    let moment = multivariate_moment(n, r, a as u64, cfg, level)?;
    let target = moment_target(n, r, a, cfg)?;
    let target_residue = padic_reduce(&target, cfg.p, level)?;
    let valuation = moment.sub(&target_residue)?.valuation();
    Ok(MomentLevel {
        level,
        moment,
        target,
        target_residue,
        valuation,
    })
}

/// Exact `[m]_{q0} = 1 + q0 + ... + q0^{m-1}`.
pub fn q_number_at(m: u64, q0: &Rat) -> Rat {
    if q0.is_one() {
        return Rat::from_integer(BigInt::from(m));
    }
    (Rat::one() - num_traits::pow::pow(q0.clone(), m as usize)) / (Rat::one() - q0)
}
