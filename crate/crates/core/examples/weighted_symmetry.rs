//! Symmetry between two odd weights `w1`, `w2`, checked as exact rational
//! functions in `q`. The two sides are computed by a direct sum over
//! `[0, w)^r` and, independently, by expansion in alternating power sums.

use qsym::symmetry::{direct_side, power_sum_side, run_cases, Grid, Identity, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, r, w1, w2, x) = (1, 2, 3, 5, 0);
    let left = direct_side(n, r, w1, w2, x)?;
    let right = direct_side(n, r, w2, w1, x)?;
    println!("w1 = {w1}, w2 = {w2}:\n  {left}\n  {right}\n  equal: {}", left == right);
    println!("power-sum route agrees: {}", left == power_sum_side(n, r, w1, w2, x)?);

    let grid = Grid {
        n_max: 4,
        r_max: 2,
        w_set: vec![1, 3, 5],
        x_set: vec![0, 1],
    };
    let cases = grid.cases(&Mode::Symbolic)?;
    for identity in [Identity::Direct, Identity::PowerSum] {
        let reports = run_cases(identity, &cases)?;
        let passed = reports.iter().filter(|r| r.equal).count();
        println!("{identity}: {passed}/{} cases equal", reports.len());
    }
    Ok(())
}
