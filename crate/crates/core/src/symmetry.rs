//! Alternating power sums `T_{n,i,q}^{(r)}(w)` and verifiers for the
//! symmetry identities in two odd parameters `w1`, `w2`.
//!
//! The two sides of each identity are built by structurally different
//! routes: the q-Euler side sums `E_{n,q^{w}}^{(r)}` over tuple sums
//! directly, while the power-sum side convolves `T` sums against
//! `E_{n-i,q^{w}}^{(r)}`. Equality of canonical forms is then real evidence
//! rather than a restatement.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{binomial, divisors, CycloFrac, ExactError, Rat, RatFunc, ZPoly};
use crate::padic::{padic_reduce, tuple_count_by_sum, IntegralConfig, PadicError, Valuation};
use crate::qeuler::{q_euler_poly_frac, QEulerKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("{check} does not support {mode} mode")]
    UnsupportedMode { check: &'static str, mode: &'static str },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Which identity a report belongs to. The order is the report sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    Series,
    Integral,
    Direct,
    PowerSum,
}

impl Identity {
    pub fn tag(&self) -> &'static str {
        match self {
            Identity::Series => "thm1",
            Identity::Integral => "cor2",
            Identity::Direct => "thm3",
            Identity::PowerSum => "thm4",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How the two sides are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Canonical rational functions in `q`.
    Symbolic,
    /// Exact values at a rational `q0`.
    Rational(Rat),
    /// Level-`level` Riemann sums with p-adic base `cfg.q0()`.
    Padic { cfg: IntegralConfig, level: u32 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Rational(_) => "rational",
            Mode::Padic { .. } => "padic",
        }
    }
}

/// Parameters of one identity instance; `w1`, `w2` odd, `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCase {
    pub n: u32,
    pub r: u32,
    pub w1: u32,
    pub w2: u32,
    pub x: u32,
    pub mode: Mode,
}

impl SymmetryCase {
    pub fn new(n: u32, r: u32, w1: u32, w2: u32, x: u32, mode: Mode) -> Result<Self, SymmetryError> {
        if r == 0 {
            return Err(SymmetryError::InvalidCase("order r must be at least 1".into()));
        }
        for (name, w) in [("w1", w1), ("w2", w2)] {
            if w % 2 == 0 {
                return Err(SymmetryError::InvalidCase(format!("{name} = {w} must be odd")));
            }
        }
        if let Mode::Padic { cfg, level } = &mode {
            if *level == 0 || *level > cfg.max_level() {
                return Err(SymmetryError::InvalidCase(format!(
                    "level {level} outside 1..={}",
                    cfg.max_level()
                )));
            }
        }
        Ok(SymmetryCase { n, r, w1, w2, x, mode })
    }

    pub fn symbolic(n: u32, r: u32, w1: u32, w2: u32, x: u32) -> Result<Self, SymmetryError> {
        Self::new(n, r, w1, w2, x, Mode::Symbolic)
    }

    pub fn swapped(&self) -> Self {
        SymmetryCase {
            w1: self.w2,
            w2: self.w1,
            ..self.clone()
        }
    }

    fn sort_key(&self) -> (u32, u32, u32, u32, u32) {
        (self.n, self.r, self.w1, self.w2, self.x)
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub identity: Identity,
    pub case: SymmetryCase,
    /// Canonical rendering (symbolic), exact value (rational) or residue
    /// modulo `p^level` (p-adic).
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// p-adic mode only.
    pub defect_valuation: Option<Valuation>,
}

impl SymmetryReport {
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        (self.identity, self.case.sort_key()).cmp(&(other.identity, other.case.sort_key()))
    }
}

struct CaseJson<'a>(Identity, &'a SymmetryCase);

impl Serialize for CaseJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let c = self.1;
        let extra = match &c.mode {
            Mode::Symbolic => 0,
            Mode::Rational(_) => 1,
            Mode::Padic { .. } => 3,
        };
        let mut st = s.serialize_struct("case", 7 + extra)?;
        st.serialize_field("identity", self.0.tag())?;
        st.serialize_field("n", &c.n)?;
        st.serialize_field("r", &c.r)?;
        st.serialize_field("w1", &c.w1)?;
        st.serialize_field("w2", &c.w2)?;
        st.serialize_field("x", &c.x)?;
        st.serialize_field("mode", c.mode.name())?;
        match &c.mode {
            Mode::Symbolic => {}
            Mode::Rational(q0) => st.serialize_field("q", &q0.to_string())?,
            Mode::Padic { cfg, level } => {
                st.serialize_field("p", &cfg.p())?;
                st.serialize_field("N", level)?;
                st.serialize_field("q", &cfg.q0().to_string())?;
            }
        }
        st.end()
    }
}

impl Serialize for SymmetryReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SymmetryReport", 5)?;
        st.serialize_field("case", &CaseJson(self.identity, &self.case))?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("equal", &self.equal)?;
        st.serialize_field("defect_valuation", &self.defect_valuation)?;
        st.end()
    }
}

fn signed_counts(r: u32, w: u32) -> Vec<BigInt> {
    tuple_count_by_sum(r, w as u64)
        .into_iter()
        .enumerate()
        .map(|(s, c)| if s % 2 == 0 { c } else { -c })
        .collect()
}

fn check_odd(w: u32) -> Result<(), SymmetryError> {
    if w.is_multiple_of(2) {
        return Err(SymmetryError::InvalidCase(format!("w = {w} must be odd")));
    }
    Ok(())
}

/// `T_{n,i,q}^{(r)}(w) = sum_{j in [0,w)^r} (-1)^{|j|} q^{(n-i)|j|} [|j|]_q^i`
/// as an integer polynomial, collapsed over `s = |j|`. `0^0 = 1`.
pub fn t_sum_poly(n: u32, i: u32, r: u32, w: u32) -> ZPoly {
    assert!(i <= n, "i must lie in [0, n]");
    let mut acc = ZPoly::zero();
    for (s, c) in signed_counts(r, w).iter().enumerate() {
        let power = ZPoly::q_int(s).pow(i);
        acc.add_scaled_shifted(&power, c, (n - i) as usize * s);
    }
    acc
}

pub fn t_sum(n: u32, i: u32, r: u32, w: u32) -> Result<RatFunc, SymmetryError> {
    if i > n {
        return Err(SymmetryError::InvalidCase(format!("i = {i} exceeds n = {n}")));
    }
    check_odd(w)?;
    Ok(RatFunc::from_poly(t_sum_poly(n, i, r, w).to_poly()))
}

fn times_q_int_pow(mut f: CycloFrac, w: u32, e: u32) -> CycloFrac {
    if e == 0 {
        return f;
    }
    for d in divisors(w).into_iter().filter(|&d| d > 1) {
        f = f.mul_cyclotomic(d, e);
    }
    f
}

/// `[w]_q^n sum_{j in [0,w)^r} (-1)^{|j|} E_{n,q^w}^{(r)}(v x + (v/w)|j|)`
/// with `w = w_self`, `v = w_other`.
pub fn direct_side_frac(n: u32, r: u32, w_self: u32, w_other: u32, x: u32) -> CycloFrac {
    let mut acc = CycloFrac::zero();
    for (s, c) in signed_counts(r, w_self).iter().enumerate() {
        let a = w_self * w_other * x + w_other * s as u32;
        let key = QEulerKey::new(n, r, a, w_self).expect("w_self >= 1");
        acc = acc.add(&q_euler_poly_frac(key).scale(c));
    }
    times_q_int_pow(acc, w_self, n).reduced()
}

pub fn direct_side(n: u32, r: u32, w_self: u32, w_other: u32, x: u32) -> Result<RatFunc, SymmetryError> {
    check_odd(w_self)?;
    check_odd(w_other)?;
    Ok(direct_side_frac(n, r, w_self, w_other, x).to_ratfunc())
}

/// `sum_i C(n,i) [w_a]^{n-i} [w_b]^i T_{n,i,q^{w_b}}^{(r)}(w_a) E_{n-i,q^{w_a}}^{(r)}(w_b x)`.
pub fn power_sum_side_frac(n: u32, r: u32, w_a: u32, w_b: u32, x: u32) -> CycloFrac {
    let mut acc = CycloFrac::zero();
    for i in 0..=n {
        let t = t_sum_poly(n, i, r, w_a).subst_power(w_b as usize);
        if t.is_zero() {
            continue;
        }
        let key = QEulerKey::new(n - i, r, w_a * w_b * x, w_a).expect("w_a >= 1");
        let e = q_euler_poly_frac(key);
        let term = e.mul_zpoly(&t).scale(&binomial(n as u64, i as u64));
        let term = times_q_int_pow(times_q_int_pow(term, w_a, n - i), w_b, i);
        acc = acc.add(&term);
    }
    acc.reduced()
}

pub fn power_sum_side(n: u32, r: u32, w_a: u32, w_b: u32, x: u32) -> Result<RatFunc, SymmetryError> {
    check_odd(w_a)?;
    check_odd(w_b)?;
    Ok(power_sum_side_frac(n, r, w_a, w_b, x).to_ratfunc())
}

fn compare_sides(
    identity: Identity,
    case: &SymmetryCase,
    lhs: RatFunc,
    rhs: RatFunc,
) -> Result<SymmetryReport, SymmetryError> {
    match &case.mode {
        Mode::Symbolic => Ok(SymmetryReport {
            identity,
            case: case.clone(),
            equal: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            defect_valuation: None,
        }),
        Mode::Rational(q0) => {
            let l = lhs.eval(q0)?;
            let r = rhs.eval(q0)?;
            Ok(SymmetryReport {
                identity,
                case: case.clone(),
                equal: l == r,
                lhs: l.to_string(),
                rhs: r.to_string(),
                defect_valuation: None,
            })
        }
        Mode::Padic { .. } => Err(SymmetryError::UnsupportedMode {
            check: identity.tag(),
            mode: "padic",
        }),
    }
}

fn reject_padic(identity: Identity, case: &SymmetryCase) -> Result<(), SymmetryError> {
    if let Mode::Padic { .. } = case.mode {
        return Err(SymmetryError::UnsupportedMode {
            check: identity.tag(),
            mode: "padic",
        });
    }
    Ok(())
}

pub fn check_direct(case: &SymmetryCase) -> Result<SymmetryReport, SymmetryError> {
    reject_padic(Identity::Direct, case)?;
    let lhs = direct_side_frac(case.n, case.r, case.w1, case.w2, case.x).to_ratfunc();
    let rhs = direct_side_frac(case.n, case.r, case.w2, case.w1, case.x).to_ratfunc();
    compare_sides(Identity::Direct, case, lhs, rhs)
}

pub fn check_power_sum(case: &SymmetryCase) -> Result<SymmetryReport, SymmetryError> {
    reject_padic(Identity::PowerSum, case)?;
    let lhs = power_sum_side_frac(case.n, case.r, case.w1, case.w2, case.x).to_ratfunc();
    let rhs = power_sum_side_frac(case.n, case.r, case.w2, case.w1, case.x).to_ratfunc();
    compare_sides(Identity::PowerSum, case, lhs, rhs)
}

/// Coefficient-wise check of the generating-function identity: the
/// `t^n/n!` coefficients for `n = 0..=n_max`.
pub fn check_series(n_max: u32, r: u32, w1: u32, w2: u32, x: u32) -> Result<Vec<SymmetryReport>, SymmetryError> {
    (0..=n_max)
        .map(|n| {
            let case = SymmetryCase::symbolic(n, r, w1, w2, x)?;
            let mut report = check_direct(&case)?;
            report.identity = Identity::Series;
            Ok(report)
        })
        .collect()
}

/// One side of the integral identity with every integral replaced by its
/// level-`N` Riemann sum, as an exact rational:
///
/// `[w]^n sum_j (-1)^{|j|} sum_{y < p^N} (-1)^{|y|} [v x + (v/w)|j| + |y|]_{q0^w}^n`,
///
/// using `[w]_q [b/w]_{q^w} = [b]_q` to stay with integer arguments.
pub fn integral_side(n: u32, r: u32, w_self: u32, w_other: u32, x: u32, cfg: &IntegralConfig, level: u32) -> Rat {
    let (q0, p) = (cfg.q0(), cfg.p());
    let outer = signed_counts(r, w_self);
    let inner: Vec<BigInt> = tuple_count_by_sum(r, p.pow(level))
        .into_iter()
        .enumerate()
        .map(|(s, c)| if s % 2 == 0 { c } else { -c })
        .collect();
    let w = w_self as u64;
    let q_step = num_traits::pow::pow(q0.clone(), w_self as usize);
    let q_int_w = crate::padic::q_number_at(w, q0);
    let mut total = Rat::zero();
    for (sj, cj) in outer.iter().enumerate() {
        let b0 = (w_self * w_other * x) as u64 + w_other as u64 * sj as u64;
        // Walk b = b0 + w * s_y, keeping [b]_{q0} and q0^b.
        let mut q_b = num_traits::pow::pow(q0.clone(), b0 as usize);
        let mut bracket = crate::padic::q_number_at(b0, q0);
        let mut inner_sum = Rat::zero();
        for cy in &inner {
            inner_sum += num_traits::pow::pow(bracket.clone(), n as usize) * Rat::from_integer(cy.clone());
            bracket += &q_b * &q_int_w;
            q_b *= &q_step;
        }
        total += inner_sum * Rat::from_integer(cj.clone());
    }
    total
}

/// Both sides of the integral identity at Riemann-sum level `N`, compared by
/// the p-adic valuation of their exact difference. Passes when the
/// valuation is at least `N - 2`.
pub fn check_integral(case: &SymmetryCase) -> Result<SymmetryReport, SymmetryError> {
    let Mode::Padic { cfg, level } = &case.mode else {
        return Err(SymmetryError::UnsupportedMode {
            check: "cor2",
            mode: case.mode.name(),
        });
    };
    let (p, level) = (cfg.p(), *level);
    let lhs = integral_side(case.n, case.r, case.w1, case.w2, case.x, cfg, level);
    let rhs = integral_side(case.n, case.r, case.w2, case.w1, case.x, cfg, level);
    let valuation = Valuation::of_rat(&(&lhs - &rhs), p);
    Ok(SymmetryReport {
        identity: Identity::Integral,
        case: case.clone(),
        lhs: padic_reduce(&lhs, p, level)?.residue().to_string(),
        rhs: padic_reduce(&rhs, p, level)?.residue().to_string(),
        equal: valuation.at_least(level as i64 - 2),
        defect_valuation: Some(valuation),
    })
}

/// Cartesian grid of cases: `n in 0..=n_max`, `r in 1..=r_max`,
/// `w1, w2 in w_set`, `x in x_set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub n_max: u32,
    pub r_max: u32,
    pub w_set: Vec<u32>,
    pub x_set: Vec<u32>,
}

impl Grid {
    pub fn cases(&self, mode: &Mode) -> Result<Vec<SymmetryCase>, SymmetryError> {
        let mut out = Vec::new();
        for n in 0..=self.n_max {
            for r in 1..=self.r_max {
                for &w1 in &self.w_set {
                    for &w2 in &self.w_set {
                        for &x in &self.x_set {
                            out.push(SymmetryCase::new(n, r, w1, w2, x, mode.clone())?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs `identity` over every case and returns the reports in canonical
/// order.
pub fn run_cases(identity: Identity, cases: &[SymmetryCase]) -> Result<Vec<SymmetryReport>, SymmetryError> {
    let mut reports = Vec::with_capacity(cases.len());
    for case in cases {
        match identity {
            Identity::Direct => reports.push(check_direct(case)?),
            Identity::PowerSum => reports.push(check_power_sum(case)?),
            Identity::Integral => reports.push(check_integral(case)?),
            Identity::Series => {
                reject_padic(identity, case)?;
                let mut report = check_direct(case)?;
                report.identity = Identity::Series;
                reports.push(report);
            }
        }
    }
    reports.sort_by(|a, b| a.cmp_key(b));
    Ok(reports)
}
