//! Rational functions in `q` kept in canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;
use super::ExactError;

/// `num / den` with `gcd(num, den) = 1`, `den` monic and zero stored as
/// `0/1`. Two values are equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonicalizes `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero").recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    /// Trusted constructor for parts already known to be canonical.
    pub(crate) fn from_canonical_parts(num: Poly, den: Poly) -> Self {
        debug_assert!(den.leading().is_some_and(One::is_one));
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact value at `q0`.
    pub fn eval(&self, q0: &Rat) -> Result<Rat, ExactError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ExactError::Pole { at: q0.clone() });
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Value at `q = 1`. Removable singularities never survive
    /// canonicalization, so a vanishing denominator here is a true pole.
    pub fn eval_at_one(&self) -> Result<Rat, ExactError> {
        self.eval(&Rat::one())
    }

    /// Replaces `q` by `q^k`. Coprimality and monicity survive the
    /// substitution, so no re-reduction is needed.
    pub fn subst_power(&self, k: usize) -> Result<Self, ExactError> {
        if k == 0 {
            return Err(ExactError::InvalidInput(
                "substitution exponent must be positive".into(),
            ));
        }
        Ok(RatFunc {
            num: self.num.subst_power(k),
            den: self.den.subst_power(k),
        })
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let lc = self.num.leading().expect("nonzero").recip();
        Ok(RatFunc {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b = self.den.div_rem(&g).0;
        let d = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = num.gcd(&g);
        let (num, g) = if g2.is_one() {
            (num, g)
        } else {
            (num.div_rem(&g2).0, g.div_rem(&g2).0)
        };
        RatFunc {
            num,
            den: &(&b * &d) * &g,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_rem(&g1).0;
        let d = rhs.den.div_rem(&g1).0;
        let c = rhs.num.div_rem(&g2).0;
        let b = self.den.div_rem(&g2).0;
        // b and d are monic after dividing by monic gcds, so the product is too.
        RatFunc {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

// Division is multiplication by the inverse.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&RatFunc> for &RatFunc {
    type Output = Result<RatFunc, ExactError>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc, ExactError> {
        Ok(self * &rhs.inv()?)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

/// `(num)/(den)`, or just the numerator when the denominator is 1.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = ExactError;

    /// Accepts `(num)/(den)`, `num/(den)` or a bare polynomial, and
    /// canonicalizes the result.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = compact.as_str();
        if let Some(split) = top_level_fraction_bar(t) {
            let num = strip_parens(&t[..split]);
            let den = strip_parens(&t[split + 1..]);
            return RatFunc::new(num.parse()?, den.parse()?);
        }
        Ok(RatFunc::from_poly(strip_parens(t).parse()?))
    }
}

/// Position of a `/` outside parentheses that is followed by `(`.
fn top_level_fraction_bar(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'/' if depth == 0 && bytes.get(i + 1) == Some(&b'(') => return Some(i),
            _ => {}
        }
    }
    None
}

/// Drops one pair of parentheses when they enclose the whole string.
fn strip_parens(t: &str) -> &str {
    if !t.starts_with('(') {
        return t;
    }
    let mut depth = 0i32;
    for (i, b) in t.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth == 0 {
            return if i == t.len() - 1 { &t[1..i] } else { t };
        }
    }
    t
}
