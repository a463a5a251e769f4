//! Lax pairs of the open and periodic Kac-van Moerbeke systems.
//!
//! The open system uses a 4x4 symmetric `L` with `sqrt(x1 x2)` and
//! `sqrt(x2 x3)` off-diagonal entries, checked numerically along a flow. The
//! periodic one has a polynomial 3x3 pair and is checked exactly.

use serde::{Deserialize, Serialize};

use super::Trajectory;
use crate::lv::{lie_derivative, LVParams};
use crate::poly::Poly;
use crate::rational::{rat, Rational};
use crate::{Error, Result};

pub type Mat4 = [[f64; 4]; 4];

/// The open-system Lax matrix at a point with strictly positive coordinates.
pub fn km_lax_matrix(x: [f64; 3], sample: usize) -> Result<Mat4> {
    if x.iter().any(|&v| !(v > 0.0)) {
        return Err(Error::NonPositiveState { sample });
    }
    let [x1, x2, x3] = x;
    let a = (x1 * x2).sqrt();
    let b = (x2 * x3).sqrt();
    Ok([
        [x1, 0.0, a, 0.0],
        [0.0, x1 + x2, 0.0, b],
        [a, 0.0, x2 + x3, 0.0],
        [0.0, b, 0.0, x3],
    ])
}

fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// `Tr L^i` for `i = 1..=4`.
pub fn km_lax_traces(x: [f64; 3], sample: usize) -> Result<[f64; 4]> {
    let l = km_lax_matrix(x, sample)?;
    let mut power = l;
    let mut out = [0.0; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        if i > 0 {
            power = mat_mul(&power, &l);
        }
        *slot = (0..4).map(|k| power[k][k]).sum();
    }
    Ok(out)
}

/// Exact polynomial values of `Tr L^i`, `i = 1..=4`.
///
/// `L` splits into two 2x2 blocks (rows 1,3 and rows 2,4), each with trace
/// `H = x1 + x2 + x3` and determinant `x1 x3`, so the power sums follow from
/// Newton's identities and the square roots never appear.
pub fn km_lax_trace_polys() -> [Poly; 4] {
    let h = Poly::hamiltonian();
    let d = Poly::monomial(1, 0, 1);
    let h2 = &h * &h;
    let h3 = &h2 * &h;
    let p = |q: i64| Rational::from_integer(q.into());
    let sums = [
        h.clone(),
        &h2 - &d.scale(&p(2)),
        &h3 - &(&h * &d).scale(&p(3)),
        &(&(&h2 * &h2) - &(&h2 * &d).scale(&p(4))) + &(&d * &d).scale(&p(2)),
    ];
    sums.map(|s| s.scale(&p(2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaxDrift {
    pub initial: [f64; 4],
    /// Per power, `max_t |Tr L^i(t) - Tr L^i(0)| / max(1, |Tr L^i(0)|)`.
    pub max_rel_drift: [f64; 4],
}

pub fn km_lax_invariants(traj: &Trajectory) -> Result<LaxDrift> {
    let initial = km_lax_traces(traj.initial(), 0)?;
    let mut max_abs = [0.0f64; 4];
    for (sample, &x) in traj.states.iter().enumerate() {
        let tr = km_lax_traces(x, sample)?;
        for i in 0..4 {
            max_abs[i] = max_abs[i].max((tr[i] - initial[i]).abs());
        }
    }
    Ok(LaxDrift {
        initial,
        max_rel_drift: std::array::from_fn(|i| max_abs[i] / initial[i].abs().max(1.0)),
    })
}

pub type PolyMat3 = [[Poly; 3]; 3];

fn poly_mat_mul(a: &PolyMat3, b: &PolyMat3) -> PolyMat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Poly::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
        })
    })
}

fn trace(m: &PolyMat3) -> Poly {
    &(&m[0][0] + &m[1][1]) + &m[2][2]
}

/// `(L, B)` for the periodic system:
/// `L = [[0, x1, 1], [1, 0, x2], [x3, 1, 0]]`,
/// `B = [[0, 0, x1 x2], [x2 x3, 0, 0], [0, x3 x1, 0]]`.
pub fn periodic_lax_pair() -> (PolyMat3, PolyMat3) {
    let (x1, x2, x3) = (Poly::x1(), Poly::x2(), Poly::x3());
    let (o, z) = (Poly::one(), Poly::zero());
    let l = [
        [z.clone(), x1.clone(), o.clone()],
        [o.clone(), z.clone(), x2.clone()],
        [x3.clone(), o, z.clone()],
    ];
    let b = [
        [z.clone(), z.clone(), &x1 * &x2],
        [&x2 * &x3, z.clone(), z.clone()],
        [z.clone(), &x3 * &x1, z],
    ];
    (l, b)
}

/// Whether `dL/dt = B L - L B` holds entrywise as polynomials, with `dL/dt`
/// taken along the periodic flow `(r, s, t) = (1, -1, 1)`.
pub fn periodic_lax_symbolic() -> bool {
    let p = LVParams::periodic_km();
    let (l, b) = periodic_lax_pair();
    let bl = poly_mat_mul(&b, &l);
    let lb = poly_mat_mul(&l, &b);
    (0..3).all(|i| (0..3).all(|j| lie_derivative(&p, &l[i][j]) == &bl[i][j] - &lb[i][j]))
}

/// `(1/i) Tr L^i` for `i = 1..=3` of the periodic Lax matrix.
pub fn periodic_lax_invariants() -> [Poly; 3] {
    let (l, _) = periodic_lax_pair();
    let l2 = poly_mat_mul(&l, &l);
    let l3 = poly_mat_mul(&l2, &l);
    [trace(&l), trace(&l2).scale(&rat(1, 2)), trace(&l3).scale(&rat(1, 3))]
}
