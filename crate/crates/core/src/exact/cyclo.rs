//! Fractions whose denominator is a product of cyclotomic polynomials.
//!
//! Every denominator met in q-Euler and alternating-sum computations is built
//! from `1 - q^m` and `1 + q^m`, which factor into cyclotomic polynomials
//! `Φ_d`. Tracking the denominator as a multiset of indices `d` turns
//! reduction into trial division by the (irreducible) `Φ_d`, so the
//! canonical form is reached without any polynomial gcd.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::zpoly::ZPoly;

pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
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

/// The `n`-th cyclotomic polynomial, cached.
pub fn cyclotomic(n: u32) -> Arc<ZPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ZPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // q^n - 1 = prod_{d | n} Φ_d
    let mut acc = ZPoly::monomial(BigInt::one(), n as usize);
    acc += &ZPoly::constant(BigInt::from(-1));
    for d in divisors(n) {
        if d < n {
            acc = acc.div_exact_monic(&cyclotomic(d)).expect("cyclotomic divisibility");
        }
    }
    let value = Arc::new(acc);
    cache.lock().unwrap().entry(n).or_insert(value).clone()
}

/// Indices `m` with `Φ_d(q^k) = prod Φ_m(q)`: exactly those `m | dk` with
/// `m / gcd(m, k) = d`.
pub fn cyclotomic_subst_factors(d: u32, k: u32) -> Vec<u32> {
    divisors(d * k).into_iter().filter(|&m| m / m.gcd(&k) == d).collect()
}

type Factors = BTreeMap<u32, u32>;

/// `num / prod_d Φ_d^{e_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFrac {
    num: ZPoly,
    den: Factors,
}

impl CycloFrac {
    pub fn zero() -> Self {
        Self::from_zpoly(ZPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_zpoly(ZPoly::one())
    }

    pub fn from_zpoly(num: ZPoly) -> Self {
        CycloFrac {
            num,
            den: Factors::new(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_zpoly(ZPoly::constant(BigInt::from(c)))
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.den.iter().map(|(&d, &e)| (d, e))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `[m]_q = prod_{d | m, d > 1} Φ_d`.
    pub fn q_int(m: u32) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let mut out = Self::one();
        for d in divisors(m).into_iter().filter(|&d| d > 1) {
            out = out.mul_cyclotomic(d, 1);
        }
        out
    }

    /// `1 / (1 - q^m)` for `m >= 1`.
    pub fn inv_one_minus_q_pow(m: u32) -> Self {
        assert!(m >= 1);
        let den = divisors(m).into_iter().map(|d| (d, 1)).collect();
        CycloFrac {
            num: ZPoly::constant(BigInt::from(-1)),
            den,
        }
    }

    /// `1 / (1 + q^m)` for `m >= 1`.
    pub fn inv_one_plus_q_pow(m: u32) -> Self {
        assert!(m >= 1);
        let den = divisors(2 * m)
            .into_iter()
            .filter(|d| !m.is_multiple_of(*d))
            .map(|d| (d, 1))
            .collect();
        CycloFrac { num: ZPoly::one(), den }
    }

    /// `(1 - q^a) / (1 - q^w)`, i.e. `[a/w]` in base `q^w`.
    pub fn q_frac(a: u32, w: u32) -> Self {
        let num = &ZPoly::one() - &ZPoly::monomial(BigInt::one(), a as usize);
        let mut out = Self::inv_one_minus_q_pow(w);
        out.num = &out.num * &num;
        out.reduce();
        out
    }

    /// Multiplies by `Φ_d^e`, cancelling against the denominator first.
    pub fn mul_cyclotomic(mut self, d: u32, e: u32) -> Self {
        let have = self.den.get(&d).copied().unwrap_or(0);
        let cancel = have.min(e);
        if cancel == have {
            self.den.remove(&d);
        } else {
            self.den.insert(d, have - cancel);
        }
        let phi = cyclotomic(d);
        for _ in cancel..e {
            self.num = &self.num * &phi;
        }
        self
    }

    /// Divides by `Φ_d^e`.
    pub fn div_cyclotomic(mut self, d: u32, e: u32) -> Self {
        if e > 0 {
            *self.den.entry(d).or_insert(0) += e;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CycloFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        CycloFrac {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_zpoly(&self, p: &ZPoly) -> Self {
        CycloFrac {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &CycloFrac) -> Self {
        let mut den = self.den.clone();
        for (&d, &e) in &other.den {
            *den.entry(d).or_insert(0) += e;
        }
        CycloFrac {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let den = self
            .den
            .iter()
            .map(|(&d, &k)| (d, k * e))
            .filter(|&(_, k)| k > 0)
            .collect();
        CycloFrac {
            num: self.num.pow(e),
            den,
        }
    }

    /// Sum over the least common multiple of the two factor multisets.
    pub fn add(&self, other: &CycloFrac) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&d, &e) in &other.den {
            let slot = den.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &CycloFrac| {
            let mut num = f.num.clone();
            for (&d, &e) in &den {
                let have = f.den.get(&d).copied().unwrap_or(0);
                if e > have {
                    let phi = cyclotomic(d);
                    for _ in have..e {
                        num = &num * &phi;
                    }
                }
            }
            num
        };
        let mut num = lift(self);
        num += &lift(other);
        let mut out = CycloFrac { num, den };
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    pub fn neg(&self) -> Self {
        CycloFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Replaces `q` by `q^k`.
    pub fn subst_power(&self, k: u32) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let mut den = Factors::new();
        for (&d, &e) in &self.den {
            for m in cyclotomic_subst_factors(d, k) {
                *den.entry(m).or_insert(0) += e;
            }
        }
        CycloFrac {
            num: self.num.subst_power(k as usize),
            den,
        }
    }

    /// Cancels every cyclotomic factor of the denominator that divides the
    /// numerator. Afterwards the fraction is in lowest terms.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut den = std::mem::take(&mut self.den);
        for (&d, e) in den.iter_mut() {
            let phi = cyclotomic(d);
            while *e > 0 {
                match self.num.div_exact_monic(&phi) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        self.den = den;
    }

    pub fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    /// Expanded denominator polynomial (monic).
    pub fn den_zpoly(&self) -> ZPoly {
        let mut acc = ZPoly::one();
        for (&d, &e) in &self.den {
            let phi = cyclotomic(d);
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        acc
    }

    /// Canonical rational function. The denominator is a product of monic
    /// irreducibles none of which divides the reduced numerator.
    pub fn to_ratfunc(&self) -> RatFunc {
        let reduced = self.clone().reduced();
        if reduced.num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::from_canonical_parts(reduced.num.to_poly(), reduced.den_zpoly().to_poly())
    }

    /// Rational-coefficient view without reduction.
    pub fn to_parts(&self) -> (Poly, Poly) {
        (self.num.to_poly(), self.den_zpoly().to_poly())
    }
}
