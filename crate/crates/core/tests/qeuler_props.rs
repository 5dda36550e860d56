//! Structural laws of the q-Euler numbers and polynomials, checked against
//! generic rational-function arithmetic and classical recurrences.

mod common;

use proptest::prelude::*;
use qsym::exact::{binomial, rat, Poly, Rat, RatFunc};
use qsym::qeuler::{
    classical_euler_numbers, classical_euler_poly, q_euler_closed_form, q_euler_number, q_euler_poly, q_int, QEulerKey,
};

fn q_power(k: u32) -> RatFunc {
    RatFunc::from_poly(Poly::monomial(rat(1), k as usize))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // E_n(a + b) = sum_l C(n,l) q^{l b} E_l(a) [b]^{n-l}
    #[test]
    fn addition_law(n in 0u32..=5, r in 1u32..=3, a in 0u32..=8, b in 0u32..=8) {
        let lhs = q_euler_poly(QEulerKey::at_integer(n, r, a + b));
        let qb = RatFunc::from_poly(q_int(b));
        let mut rhs = RatFunc::zero();
        for l in 0..=n {
            let c = Rat::from_integer(binomial(n as u64, l as u64));
            let term = &(&q_power(l * b) * &q_euler_poly(QEulerKey::at_integer(l, r, a))) * &qb.pow(n - l);
            rhs = &rhs + &term.scale(&c);
        }
        prop_assert_eq!(lhs, rhs);
    }

    // At a = s w the base-q^w polynomial is the base-q one at s, with q -> q^w.
    #[test]
    fn scaling_law(n in 0u32..=5, r in 1u32..=3, s in 0u32..=6, w in prop::sample::select(vec![1u32, 3, 5])) {
        let scaled = q_euler_poly(QEulerKey::new(n, r, s * w, w).unwrap());
        let base = q_euler_poly(QEulerKey::at_integer(n, r, s)).subst_power(w as usize).unwrap();
        prop_assert_eq!(scaled, base);
    }

    #[test]
    fn closed_form_matches_recurrence_off_integers(
        n in 0u32..=5, r in 1u32..=3, a in 0u32..=7, w in prop::sample::select(vec![1u32, 3, 5]),
    ) {
        let key = QEulerKey::new(n, r, a, w).unwrap();
        prop_assert_eq!(q_euler_poly(key), q_euler_closed_form(key));
    }

    #[test]
    fn degenerates_to_classical_polynomials(n in 0u32..=6, r in 1u32..=3, x in 0u32..=6) {
        let at_one = q_euler_poly(QEulerKey::at_integer(n, r, x)).eval_at_one().unwrap();
        prop_assert_eq!(at_one, classical_euler_poly(n, r).eval(&rat(x as i64)));
    }
}

#[test]
fn cyclotomic_route_matches_generic_gcd_route() {
    for n in 0..=7 {
        for r in 1..=3 {
            assert_eq!(
                q_euler_number(n, r),
                common::q_euler_number_generic(n, r),
                "n={n} r={r}"
            );
        }
    }
}

#[test]
fn denominators_divide_product_of_one_plus_q_powers() {
    for n in 0..=8 {
        for r in 1..=3 {
            let e = q_euler_number(n, r);
            let bound = (0..=n).fold(Poly::one(), |acc, l| {
                &acc * &(&Poly::one() + &Poly::monomial(rat(1), l as usize)).pow(r)
            });
            let (_, rem) = bound.div_rem(e.den());
            assert!(rem.is_zero(), "n={n} r={r}: {} does not divide the bound", e.den());
            assert_ne!(e.den().eval(&rat(1)), rat(0), "n={n} r={r}: pole at q = 1");
        }
    }
}

#[test]
fn classical_numbers_match_convolution_oracle() {
    for r in 0..=4 {
        assert_eq!(
            classical_euler_numbers(10, r),
            common::euler_numbers_order(10, r),
            "r={r}"
        );
    }
}

#[test]
fn known_small_values() {
    assert_eq!(q_euler_number(0, 1), RatFunc::one());
    assert_eq!(q_euler_number(1, 1).to_string(), "(-1)/(1+q)");
    // Values of the Euler polynomials at 0.
    let e = classical_euler_numbers(5, 1);
    let expected = [
        rat(1),
        Rat::new((-1).into(), 2.into()),
        rat(0),
        Rat::new(1.into(), 4.into()),
        rat(0),
        Rat::new((-1).into(), 2.into()),
    ];
    assert_eq!(e, expected);
}

#[test]
fn rejects_zero_weight() {
    assert!(QEulerKey::new(1, 1, 0, 0).is_err());
    assert!(qsym::qeuler::q_frac(1, 0).is_err());
}
