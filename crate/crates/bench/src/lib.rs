//! Benchmark fixtures shared by the criterion suites.

use darboux_core::{LVParams, Poly};

/// Parameter sets the benches sweep over.
pub fn parameter_sets() -> Vec<(&'static str, LVParams)> {
    vec![
        ("km", LVParams::km()),
        ("periodic", LVParams::periodic_km()),
        ("s_eq_t", LVParams::from_ints(5, 1, 1)),
    ]
}

/// A dense polynomial of total degree `n` with small integer coefficients.
pub fn dense_poly(n: u8) -> Poly {
    let mut f = Poly::zero();
    let mut c = 1i64;
    for d in 0..=n {
        for a in 0..=d {
            for b in 0..=(d - a) {
                f += &Poly::monomial(a, b, d - a - b).scale(&darboux_core::rational::int(c));
                c = c % 7 + 1;
            }
        }
    }
    f
}
