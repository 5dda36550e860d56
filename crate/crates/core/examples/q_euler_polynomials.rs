//! q-Euler numbers and polynomials of order `r`, computed two independent
//! ways and compared, then specialized back to `q = 1`.

use qsym::exact::rat;
use qsym::qeuler::{classical_euler_poly, q_euler_closed_form, q_euler_number, q_euler_poly, QEulerKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("q-Euler numbers of order 2:");
    for n in 0..=4 {
        println!("  n = {n}: {}", q_euler_number(n, 2));
    }

    // Recurrence against closed form at a few points, including a weighted
    // point a/w with base q^w.
    for (n, r, a, w) in [(3, 1, 2, 1), (4, 2, 0, 1), (3, 2, 5, 3)] {
        let key = QEulerKey::new(n, r, a, w)?;
        let recurrence = q_euler_poly(key);
        let closed = q_euler_closed_form(key);
        println!("n={n} r={r} a={a} w={w}: routes agree = {}", recurrence == closed);
    }

    let key = QEulerKey::at_integer(3, 2, 1);
    let at_one = q_euler_poly(key).eval_at_one()?;
    let classical = classical_euler_poly(3, 2).eval(&rat(1));
    println!("E_3^(2)(1): q -> 1 gives {at_one}, classical value {classical}");
    Ok(())
}
