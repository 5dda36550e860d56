//! Canonical rational functions in `q`: construction, arithmetic,
//! substitution and evaluation.
//!
//! ```text
//! cargo run --example rational_functions
//! ```

use qsym::exact::{rat_frac, Poly, RatFunc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // (1 - q^2) / (1 - q) reduces to 1 + q.
    let f = RatFunc::new(Poly::from_ints([1, 0, -1]), Poly::from_ints([1, -1]))?;
    println!("(1-q^2)/(1-q)      = {f}");

    let g: RatFunc = "(-1)/(1+q)".parse()?;
    println!("g                  = {g}");
    println!("f + g              = {}", &f + &g);
    println!("f * g              = {}", &f * &g);
    println!("g(q^3)             = {}", g.subst_power(3)?);
    println!("g at q = 1/2       = {}", g.eval(&rat_frac(1, 2))?);
    println!("g at q = 1         = {}", g.eval_at_one()?);

    let pole: RatFunc = "1/(1-q)".parse()?;
    match pole.eval_at_one() {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("1/(1-q) at q = 1   : {e}"),
    }
    Ok(())
}
