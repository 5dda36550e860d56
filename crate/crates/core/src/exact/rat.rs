//! Rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the canonical
//! reduced form (positive denominator, `0/1` for zero).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a` or `a/b` with optional surrounding whitespace.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::ZeroDenominator);
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exponent of `p` in a nonzero integer.
pub fn int_valuation(x: &BigInt, p: u64) -> u64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = x.abs();
    loop {
        let (quo, rem) = m.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        m = quo;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational; `None` for zero.
pub fn rat_valuation(x: &Rat, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64)
}
