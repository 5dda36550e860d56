//! Truncated power series with exact rational coefficients.

use num_traits::{One, Zero};

use super::rat::Rat;
use super::ExactError;

/// Cauchy product truncated to `len` coefficients.
pub fn mul_trunc(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `1/a` up to (excluding) `len`; needs `a[0] != 0`.
pub fn reciprocal(a: &[Rat], len: usize) -> Result<Vec<Rat>, ExactError> {
    let a0 = a.first().filter(|c| !c.is_zero()).ok_or(ExactError::DivisionByZero)?;
    let inv0 = a0.recip();
    let mut out: Vec<Rat> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            out.push(inv0.clone());
            continue;
        }
        let mut acc = Rat::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            acc += &a[j] * &out[k - j];
        }
        out.push(-acc * &inv0);
    }
    Ok(out)
}

pub fn pow_trunc(a: &[Rat], e: u32, len: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); len];
    if len > 0 {
        acc[0] = Rat::one();
    }
    for _ in 0..e {
        acc = mul_trunc(&acc, a, len);
    }
    acc
}

/// Taylor coefficients of `e^t`: `1/k!`.
pub fn exp_coeffs(len: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(len);
    let mut c = Rat::one();
    for k in 0..len {
        if k > 0 {
            c /= Rat::from_integer(k.into());
        }
        out.push(c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_frac};

    #[test]
    fn reciprocal_of_geometric() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let r = reciprocal(&[rat(1), rat(-1)], 5).unwrap();
        assert!(r.iter().all(|c| *c == rat(1)));
        assert!(reciprocal(&[rat(0), rat(1)], 3).is_err());
    }

    #[test]
    fn exp_squared() {
        let e = exp_coeffs(4);
        assert_eq!(e[3], rat_frac(1, 6));
        let e2 = pow_trunc(&e, 2, 4);
        assert_eq!(e2, vec![rat(1), rat(2), rat(2), rat_frac(4, 3)]);
    }
}
