//! Truncated fermionic p-adic integrals.
//!
//! The integral of `f` is the limit of `sum_{x < p^N} (-1)^x f(x)`. This
//! example shows the shift identity, and how the `r`-fold moment of
//! `[x + y_1 + ... + y_r]_q^n` approaches the closed form p-adically.

use num_bigint::BigInt;
use qsym::exact::rat_frac;
use qsym::padic::{fermionic_riemann_sum, moment_defect, shift_defect, IntegralConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The sums approach the integral of x, which is -1/2.
    let p = 5;
    for level in 1..=3 {
        let sum = fermionic_riemann_sum(|x| rat_frac(x as i64, 1), p, level)?;
        println!("sum of (-1)^x x over x < {p}^{level}: {sum}");
    }

    let f: Vec<BigInt> = [0, 2, 0, 1].into_iter().map(BigInt::from).collect();
    for level in 1..=4 {
        println!(
            "shift defect of x^3+2x, n = 2, N = {level}: v_p = {}",
            shift_defect(&f, 2, p, level)?
        );
    }

    // Default base q0 = 1 + p.
    let cfg = IntegralConfig::new(3, 5, None)?;
    println!("moment n=2, r=2, x=1 with q0 = {}:", cfg.q0());
    for level in 1..=5 {
        let d = moment_defect(2, 2, 1, &cfg, level)?;
        println!(
            "  N = {level}: sum = {}, target = {}, valuation {}",
            d.moment, d.target_residue, d.valuation
        );
    }
    Ok(())
}
