//! Exact computation of higher-order q-Euler polynomials, q-analogue
//! alternating power sums and truncated fermionic p-adic integrals, with
//! verifiers for the two-variable symmetry identities relating them.
//!
//! Module map:
//! - [`exact`]: rationals, polynomials, canonical rational functions in `q`
//! - [`qeuler`]: q-numbers, classical and q-Euler numbers/polynomials of order `r`
//! - [`padic`]: fixed-precision p-adic integers and alternating Riemann sums
//! - [`symmetry`]: alternating power sums and identity checks
//! - [`cli`]: the `qsym` command-line front end

pub mod cli;
pub mod exact;
pub mod padic;
pub mod qeuler;
pub mod symmetry;
