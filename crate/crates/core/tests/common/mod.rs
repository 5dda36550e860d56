//! Independent brute-force oracles shared by the integration suites.
//!
//! Nothing here goes through the collapsed sums, the cyclotomic kernel or
//! the series reciprocal used by the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use qsym::exact::{binomial, Poly, Rat, RatFunc};

/// Instances above this many nested-loop points are skipped.
pub const BRUTE_FORCE_LIMIT: u64 = 100_000;

/// Calls `visit(sum)` for every tuple in `[0, m)^r`, by odometer.
pub fn for_each_tuple_sum(r: u32, m: u64, mut visit: impl FnMut(u64)) {
    let mut digits = vec![0u64; r as usize];
    loop {
        visit(digits.iter().sum());
        let mut k = 0;
        loop {
            if k == digits.len() {
                return;
            }
            digits[k] += 1;
            if digits[k] < m {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

pub fn within_limit(r: u32, m: u64) -> bool {
    m.checked_pow(r).is_some_and(|v| v <= BRUTE_FORCE_LIMIT)
}

fn q_int_poly(m: u64) -> Poly {
    Poly::from_coeffs(vec![Rat::one(); m as usize])
}

/// Nested-loop `T_{n,i,q}^{(r)}(w)` over rational polynomials.
pub fn t_sum_brute(n: u32, i: u32, r: u32, w: u32) -> Option<Poly> {
    if !within_limit(r, w as u64) {
        return None;
    }
    let mut acc = Poly::zero();
    for_each_tuple_sum(r, w as u64, |s| {
        let sign = if s % 2 == 0 { Rat::one() } else { -Rat::one() };
        let term = Poly::monomial(sign, (n - i) as usize * s as usize) * q_int_poly(s).pow(i);
        acc = &acc + &term;
    });
    Some(acc)
}

/// Exact `[m]_{q0}` by direct summation.
pub fn q_number_exact(m: u64, q0: &Rat) -> Rat {
    let mut acc = Rat::zero();
    let mut power = Rat::one();
    for _ in 0..m {
        acc += &power;
        power *= q0;
    }
    acc
}

/// `x mod p^N` for a rational with denominator prime to `p`, via Euler's
/// theorem rather than the extended gcd used in the library.
pub fn residue_mod(x: &Rat, p: u64, level: u32) -> BigInt {
    let modulus = BigInt::from(p).pow(level);
    let phi = BigInt::from(p).pow(level - 1) * BigInt::from(p - 1);
    let den = x.denom().mod_floor(&modulus);
    let inv = den.modpow(&(phi - BigInt::one()), &modulus);
    (x.numer() * inv).mod_floor(&modulus)
}

/// Nested-loop level-`N` moment `sum_{y in [0,p^N)^r} (-1)^{|y|} [a+|y|]_{q0}^n`
/// reduced mod `p^N`.
pub fn moment_brute(n: u32, r: u32, a: u64, q0: &Rat, p: u64, level: u32) -> Option<BigInt> {
    let m = p.pow(level);
    if !within_limit(r, m) {
        return None;
    }
    let mut acc = Rat::zero();
    for_each_tuple_sum(r, m, |s| {
        let term = num_traits::pow::pow(q_number_exact(a + s, q0), n as usize);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    });
    Some(residue_mod(&acc, p, level))
}

/// Classical Euler numbers of order 1 from `(e^t + 1) G(t) = 2`:
/// `2 E_n + sum_{k<n} C(n,k) E_k = 2 [n = 0]`.
pub fn euler_numbers_recurrence(n_max: u32) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for n in 0..=n_max as u64 {
        let mut rhs = if n == 0 {
            Rat::from_integer(2.into())
        } else {
            Rat::zero()
        };
        for (k, e) in out.iter().enumerate() {
            rhs -= Rat::from_integer(binomial(n, k as u64)) * e;
        }
        out.push(rhs / Rat::from_integer(2.into()));
    }
    out
}

/// Order-`r` numbers as the `r`-fold binomial convolution of order 1.
pub fn euler_numbers_order(n_max: u32, r: u32) -> Vec<Rat> {
    let base = euler_numbers_recurrence(n_max);
    let mut acc: Vec<Rat> = (0..=n_max)
        .map(|n| if n == 0 { Rat::one() } else { Rat::zero() })
        .collect();
    for _ in 0..r {
        acc = (0..=n_max as u64)
            .map(|n| {
                (0..=n).fold(Rat::zero(), |s, k| {
                    s + Rat::from_integer(binomial(n, k)) * &acc[k as usize] * &base[(n - k) as usize]
                })
            })
            .collect();
    }
    acc
}

/// `E_{n,q}^{(r)}` through generic rational-function arithmetic with
/// polynomial gcds (no cyclotomic bookkeeping).
pub fn q_euler_number_generic(n: u32, r: u32) -> RatFunc {
    let mut sum = RatFunc::zero();
    for l in 0..=n {
        let one_plus = &Poly::one() + &Poly::monomial(Rat::one(), l as usize);
        let two = Poly::constant(Rat::from_integer(2.into()));
        let base = RatFunc::new(two, one_plus).unwrap().pow(r);
        let mut c = Rat::from_integer(binomial(n as u64, l as u64));
        if l % 2 == 1 {
            c = -c;
        }
        sum = &sum + &base.scale(&c);
    }
    let one_minus_q = Poly::from_ints([1, -1]).pow(n);
    &sum * &RatFunc::new(Poly::one(), one_minus_q).unwrap()
}

/// Small integer polynomials used as shift-identity test functions.
pub fn int_coeffs(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&v| BigInt::from(v)).collect()
}
