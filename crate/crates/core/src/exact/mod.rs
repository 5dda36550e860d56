//! Exact arithmetic: rationals, polynomials and rational functions in `q`.

mod cyclo;
mod poly;
mod rat;
mod ratfunc;
pub mod series;
mod zpoly;

pub use cyclo::{cyclotomic, cyclotomic_subst_factors, divisors, CycloFrac};
pub use poly::Poly;
pub use rat::{binomial, int_valuation, parse_rat, rat, rat_frac, rat_valuation, Rat};
pub use ratfunc::RatFunc;
pub use zpoly::ZPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {at}")]
    Pole { at: Rat },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Canonical form of `num / den`. Thin wrapper over [`RatFunc::new`].
pub fn ratfunc_canonicalize(num: Poly, den: Poly) -> Result<RatFunc, ExactError> {
    RatFunc::new(num, den)
}
