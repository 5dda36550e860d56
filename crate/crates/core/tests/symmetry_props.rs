//! Symmetry identities between two odd weights, with nested-loop oracles
//! for both sides.

mod common;

use proptest::prelude::*;
use qsym::exact::{rat, rat_frac, Rat, RatFunc};
use qsym::padic::{IntegralConfig, Valuation};
use qsym::qeuler::{q_euler_poly, q_int, QEulerKey};
use qsym::symmetry::{
    check_direct, check_integral, check_power_sum, check_series, direct_side, power_sum_side, run_cases, t_sum, Grid,
    Identity, Mode, SymmetryCase, SymmetryError,
};

fn odd_weight() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 5, 7])
}

/// `[w]^n sum_{j in [0,w)^r} (-1)^{|j|} E_{n,q^w}(v x + v|j|/w)` term by term
/// over every tuple, in generic rational-function arithmetic.
fn side_by_nested_loops(n: u32, r: u32, w: u32, v: u32, x: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    common::for_each_tuple_sum(r, w as u64, |s| {
        let e = q_euler_poly(QEulerKey::new(n, r, w * v * x + v * s as u32, w).unwrap());
        acc = if s % 2 == 0 { &acc + &e } else { &acc - &e };
    });
    &acc * &RatFunc::from_poly(q_int(w).pow(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn both_routes_agree(n in 0u32..=5, r in 1u32..=3, w1 in odd_weight(), w2 in odd_weight(), x in 0u32..=3) {
        prop_assert_eq!(direct_side(n, r, w1, w2, x).unwrap(), power_sum_side(n, r, w1, w2, x).unwrap());
    }

    #[test]
    fn identities_hold_symbolically(n in 0u32..=5, r in 1u32..=3, w1 in odd_weight(), w2 in odd_weight(), x in 0u32..=3) {
        let case = SymmetryCase::symbolic(n, r, w1, w2, x).unwrap();
        prop_assert!(check_direct(&case).unwrap().equal);
        prop_assert!(check_power_sum(&case).unwrap().equal);
    }

    #[test]
    fn swapping_weights_swaps_sides(n in 0u32..=4, r in 1u32..=2, w1 in odd_weight(), w2 in odd_weight(), x in 0u32..=2) {
        let case = SymmetryCase::symbolic(n, r, w1, w2, x).unwrap();
        let a = check_direct(&case).unwrap();
        let b = check_direct(&case.swapped()).unwrap();
        prop_assert_eq!(a.lhs, b.rhs);
        prop_assert_eq!(a.rhs, b.lhs);
    }

    #[test]
    fn rational_mode_matches_symbolic_evaluation(
        n in 0u32..=4, r in 1u32..=2, w1 in odd_weight(), w2 in odd_weight(), num in 1i64..=7, den in 1i64..=5,
    ) {
        let q0 = rat_frac(num, den);
        prop_assume!(q0 != rat(1));
        let case = SymmetryCase::new(n, r, w1, w2, 1, Mode::Rational(q0.clone())).unwrap();
        let report = check_direct(&case).unwrap();
        prop_assert!(report.equal);
        prop_assert_eq!(report.lhs, direct_side(n, r, w1, w2, 1).unwrap().eval(&q0).unwrap().to_string());
    }
}

#[test]
fn sides_match_nested_loop_oracle() {
    // Generic gcds get slow quickly, so the larger weights use fewer points.
    for (w, v, r_max, n_max) in [(1, 3, 3, 3), (3, 1, 3, 3), (3, 5, 2, 2), (5, 3, 1, 2)] {
        for r in 1..=r_max {
            for n in 0..=n_max {
                for x in 0..=1 {
                    let expected = side_by_nested_loops(n, r, w, v, x);
                    assert_eq!(
                        direct_side(n, r, w, v, x).unwrap(),
                        expected,
                        "n={n} r={r} w={w} v={v} x={x}"
                    );
                }
            }
        }
    }
}

#[test]
fn power_sums_match_nested_loops() {
    for w in [1, 3, 5] {
        for r in 1..=3 {
            for n in 0..=4 {
                for i in 0..=n {
                    let brute = common::t_sum_brute(n, i, r, w).unwrap();
                    assert_eq!(
                        t_sum(n, i, r, w).unwrap(),
                        RatFunc::from_poly(brute),
                        "n={n} i={i} r={r} w={w}"
                    );
                }
            }
        }
    }
    assert_eq!(t_sum(1, 1, 1, 3).unwrap().to_string(), "q");
}

#[test]
fn sides_depend_on_the_weights() {
    let a = direct_side(2, 1, 1, 3, 1).unwrap();
    let b = direct_side(2, 1, 1, 5, 1).unwrap();
    assert_ne!(a, b);
}

#[test]
fn smallest_example() {
    let case = SymmetryCase::symbolic(1, 1, 1, 3, 0).unwrap();
    let report = check_direct(&case).unwrap();
    assert_eq!(report.lhs, "(-1)/(1+q)");
    assert_eq!(report.rhs, "(-1)/(1+q)");
}

#[test]
fn series_coefficients_agree() {
    let reports = check_series(5, 2, 3, 5, 1).unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r.equal && r.identity == Identity::Series));
}

#[test]
fn integral_identity_tightens_with_level() {
    let cfg = IntegralConfig::new(3, 4, Some(Rat::from_integer(4.into()))).unwrap();
    let mut last = 0;
    for level in 1..=4 {
        let case = SymmetryCase::new(
            2,
            1,
            1,
            3,
            0,
            Mode::Padic {
                cfg: cfg.clone(),
                level,
            },
        )
        .unwrap();
        let report = check_integral(&case).unwrap();
        assert!(report.equal, "N={level}");
        let v = match report.defect_valuation.unwrap() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => i64::MAX,
        };
        assert!(v >= level as i64 - 2 && v >= last, "N={level}: {v}");
        last = v;
    }
}

#[test]
fn grid_reports_are_sorted_and_complete() {
    let grid = Grid {
        n_max: 2,
        r_max: 2,
        w_set: vec![3, 1],
        x_set: vec![1, 0],
    };
    let cases = grid.cases(&Mode::Symbolic).unwrap();
    assert_eq!(cases.len(), 3 * 2 * 2 * 2 * 2);
    let reports = run_cases(Identity::PowerSum, &cases).unwrap();
    assert!(reports.iter().all(|r| r.equal));
    assert!(reports.windows(2).all(|w| w[0].cmp_key(&w[1]).is_le()));
}

#[test]
fn invalid_cases_are_rejected() {
    assert!(matches!(
        SymmetryCase::symbolic(1, 1, 2, 3, 0),
        Err(SymmetryError::InvalidCase(_))
    ));
    assert!(matches!(
        SymmetryCase::symbolic(1, 0, 1, 3, 0),
        Err(SymmetryError::InvalidCase(_))
    ));
    assert!(direct_side(1, 1, 4, 3, 0).is_err());
    let cfg = IntegralConfig::new(3, 2, None).unwrap();
    assert!(SymmetryCase::new(
        1,
        1,
        1,
        3,
        0,
        Mode::Padic {
            cfg: cfg.clone(),
            level: 3
        }
    )
    .is_err());
    let padic = SymmetryCase::new(1, 1, 1, 3, 0, Mode::Padic { cfg, level: 2 }).unwrap();
    assert!(matches!(
        check_direct(&padic),
        Err(SymmetryError::UnsupportedMode { .. })
    ));
    let symbolic = SymmetryCase::symbolic(1, 1, 1, 3, 0).unwrap();
    assert!(matches!(
        check_integral(&symbolic),
        Err(SymmetryError::UnsupportedMode { .. })
    ));
}
