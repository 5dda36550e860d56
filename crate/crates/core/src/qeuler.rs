//! q-numbers, classical Euler numbers and polynomials of order `r`, and
//! their q-deformations `E_{n,q}^{(r)}(x)`.
//!
//! The q-deformed values are exposed as canonical [`RatFunc`]s. Internally
//! they are assembled as [`CycloFrac`]s, whose denominators are products of
//! `1 + q^l` and `1 - q^w` factors.
//!
//! Arguments are restricted to rational points `x = a / w` evaluated in the
//! base `Q = q^w`; then `Q^x = q^a` and `[x]_Q = (1 - q^a) / (1 - q^w)` stay
//! inside the field of rational functions of `q`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, series, CycloFrac, ExactError, Poly, Rat, RatFunc};

/// Evaluation point for `E_{n,Q}^{(r)}(a / w)` with `Q = q^w`.
///
/// `w = 1` is the plain polynomial `E_{n,q}^{(r)}(a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QEulerKey {
    n: u32,
    r: u32,
    a: u32,
    w: u32,
}

impl QEulerKey {
    pub fn new(n: u32, r: u32, a: u32, w: u32) -> Result<Self, ExactError> {
        if w == 0 {
            return Err(ExactError::InvalidInput(
                "argument denominator w must be at least 1".into(),
            ));
        }
        Ok(QEulerKey { n, r, a, w })
    }

    /// Integer argument in the base `q` itself.
    pub fn at_integer(n: u32, r: u32, x: u32) -> Self {
        QEulerKey { n, r, a: x, w: 1 }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn w(&self) -> u32 {
        self.w
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`; `[0]_q = 0`.
pub fn q_int(m: u32) -> Poly {
    Poly::from_coeffs(vec![Rat::one(); m as usize])
}

/// `[a/w]_{q^w} = (1 - q^a) / (1 - q^w)` in canonical form.
pub fn q_frac(a: u32, w: u32) -> Result<RatFunc, ExactError> {
    if w == 0 {
        return Err(ExactError::InvalidInput("q_frac needs w >= 1".into()));
    }
    Ok(CycloFrac::q_frac(a, w).to_ratfunc())
}

/// `E_0^{(r)}, ..., E_{n_max}^{(r)}`: coefficients of `(2/(e^t+1))^r`
/// times `n!`.
pub fn classical_euler_numbers(n_max: u32, r: u32) -> Vec<Rat> {
    let len = n_max as usize + 1;
    let mut denom = series::exp_coeffs(len);
    denom[0] += Rat::one();
    let base: Vec<Rat> = series::reciprocal(&denom, len)
        .expect("e^0 + 1 = 2 is invertible")
        .into_iter()
        .map(|c| c * Rat::from_integer(2.into()))
        .collect();
    let powered = series::pow_trunc(&base, r, len);
    let mut factorial = Rat::one();
    powered
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                factorial *= Rat::from_integer(k.into());
            }
            c * &factorial
        })
        .collect()
}

/// `E_n^{(r)}(x) = sum_l C(n,l) E_l^{(r)} x^{n-l}` as a polynomial in `x`.
pub fn classical_euler_poly(n: u32, r: u32) -> Poly {
    let numbers = classical_euler_numbers(n, r);
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    for (l, e) in numbers.into_iter().enumerate() {
        coeffs[n as usize - l] = e * Rat::from_integer(binomial(n as u64, l as u64));
    }
    Poly::from_coeffs(coeffs)
}

/// `E_{n,q}^{(r)}` in canonical form.
pub fn q_euler_number(n: u32, r: u32) -> RatFunc {
    q_euler_number_frac(n, r).to_ratfunc()
}

/// Reduced cyclotomic form of `E_{n,q}^{(r)}`, memoized by `(n, r)`.
///
/// `(1-q)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l (2/(1+q^l))^r`; the `l = 0`
/// term is 1.
pub fn q_euler_number_frac(n: u32, r: u32) -> Arc<CycloFrac> {
    type Memo = Mutex<HashMap<(u32, u32), Arc<CycloFrac>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().unwrap().get(&(n, r)) {
        return hit.clone();
    }
    let two_r = BigInt::from(2).pow(r);
    let mut sum = CycloFrac::one();
    for l in 1..=n {
        let mut c = binomial(n as u64, l as u64) * &two_r;
        if l % 2 == 1 {
            c = -c;
        }
        sum = sum.add(&CycloFrac::inv_one_plus_q_pow(l).pow(r).scale(&c));
    }
    let mut value = sum.div_cyclotomic(1, n);
    if n % 2 == 1 {
        value = value.neg();
    }
    let value = Arc::new(value.reduced());
    memo.lock().unwrap().entry((n, r)).or_insert(value).clone()
}

/// `E_{n,Q}^{(r)}(a/w)` with `Q = q^w`, from the binomial recurrence
/// `sum_l C(n,l) Q^{l a/w} E_{l,Q}^{(r)} [a/w]_Q^{n-l}`.
pub fn q_euler_poly(key: QEulerKey) -> RatFunc {
    q_euler_poly_frac(key).to_ratfunc()
}

pub fn q_euler_poly_frac(key: QEulerKey) -> CycloFrac {
    let QEulerKey { n, r, a, w } = key;
    let frac = CycloFrac::q_frac(a, w);
    // frac_pows[k] = [a/w]_Q^k, with 0^0 = 1
    let mut frac_pows = Vec::with_capacity(n as usize + 1);
    frac_pows.push(CycloFrac::one());
    for k in 1..=n as usize {
        let next = frac_pows[k - 1].mul(&frac);
        frac_pows.push(next);
    }
    let mut acc = CycloFrac::zero();
    for l in 0..=n {
        let e_l = q_euler_number_frac(l, r).subst_power(w);
        let term = e_l
            .mul(&frac_pows[(n - l) as usize])
            .shift((l * a) as usize)
            .scale(&binomial(n as u64, l as u64));
        acc = acc.add(&term);
    }
    acc.reduced()
}

/// Closed form `(1-Q)^{-n} sum_l C(n,l) (-1)^l Q^{l a/w} (2/(1+Q^l))^r`,
/// evaluated without the recurrence or the memoized numbers.
pub fn q_euler_closed_form(key: QEulerKey) -> RatFunc {
    q_euler_closed_form_frac(key).to_ratfunc()
}

pub fn q_euler_closed_form_frac(key: QEulerKey) -> CycloFrac {
    let QEulerKey { n, r, a, w } = key;
    let two_r = BigInt::from(2).pow(r);
    let mut sum = CycloFrac::one();
    for l in 1..=n {
        let mut c = binomial(n as u64, l as u64) * &two_r;
        if l % 2 == 1 {
            c = -c;
        }
        let term = CycloFrac::inv_one_plus_q_pow(w * l)
            .pow(r)
            .scale(&c)
            .shift((l * a) as usize);
        sum = sum.add(&term);
    }
    sum.mul(&CycloFrac::inv_one_minus_q_pow(w).pow(n)).reduced()
}
