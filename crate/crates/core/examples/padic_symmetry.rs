//! The symmetry identity with both sides written as fermionic integrals,
//! replaced by level-N Riemann sums. The sides differ at finite level, and
//! the valuation of the difference grows with N.

use qsym::exact::rat;
use qsym::padic::IntegralConfig;
use qsym::symmetry::{check_integral, Mode, SymmetryCase};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = IntegralConfig::new(3, 4, Some(rat(4)))?;
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
        )?;
        let report = check_integral(&case)?;
        let v = report.defect_valuation.expect("p-adic reports carry a valuation");
        println!(
            "N = {level}: lhs {} rhs {} mod 3^{level}, v_3(difference) = {v}",
            report.lhs, report.rhs
        );
    }
    Ok(())
}
