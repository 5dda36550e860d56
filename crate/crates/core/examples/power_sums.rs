//! q-analogue alternating power sums
//! `T_{n,i}(w) = sum_{j in [0,w)^r} (-1)^{|j|} q^{(n-i)|j|} [|j|]_q^i`.

use qsym::symmetry::t_sum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for w in [1, 3, 5] {
        for i in 0..=2 {
            println!("r=2 w={w} n=2 i={i}: {}", t_sum(2, i, 2, w)?);
        }
    }
    Ok(())
}
