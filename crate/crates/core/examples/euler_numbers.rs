//! Classical Euler numbers and polynomials of higher order, from the
//! generating function `(2 / (e^t + 1))^r e^{x t}`.

use qsym::qeuler::{classical_euler_numbers, classical_euler_poly};

fn main() {
    for r in 1..=3 {
        let row: Vec<String> = classical_euler_numbers(8, r).iter().map(ToString::to_string).collect();
        println!("order {r}: {}", row.join(", "));
    }
    for n in 0..=4 {
        // Poly renders in q; relabel the variable.
        println!(
            "E_{n}^(2)(x) = {}",
            classical_euler_poly(n, 2).to_string().replace('q', "x")
        );
    }
}
