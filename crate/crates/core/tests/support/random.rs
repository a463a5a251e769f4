//! Seeded generators of small rational parameters.

use darboux_core::structure::classify_params;
use darboux_core::{LVParams, Rational};
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `n / d` with `n, d` drawn from `[-5, 5]`, `d != 0`.
pub fn small_rational(rng: &mut StdRng) -> Rational {
    let n: i64 = rng.gen_range(-5..=5);
    let d: i64 = loop {
        let d = rng.gen_range(-5..=5);
        if d != 0 {
            break d;
        }
    };
    Rational::new(n.into(), d.into())
}

pub fn nonzero_rational(rng: &mut StdRng) -> Rational {
    loop {
        let q = small_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn positive_rational(rng: &mut StdRng) -> Rational {
    nonzero_rational(rng).abs()
}

pub fn triple(rng: &mut StdRng) -> LVParams {
    LVParams::new(small_rational(rng), small_rational(rng), small_rational(rng))
}

/// `r > 0`, `s < 0`, `t > 0`.
pub fn mixed_sign_triple(rng: &mut StdRng) -> LVParams {
    LVParams::new(positive_rational(rng), -positive_rational(rng), positive_rational(rng))
}

/// `s = t`, with `r / s` outside `{+-a/b : 1 <= a, b <= m}`, which excludes
/// the resonances where extra irreducible Darboux polynomials appear.
pub fn coincidence_triple(rng: &mut StdRng, m: u32) -> LVParams {
    loop {
        let s = nonzero_rational(rng);
        let p = LVParams::new(nonzero_rational(rng), s.clone(), s);
        if classify_params(&p, m).coincidence_condition {
            return p;
        }
    }
}
