//! The Lotka-Volterra vector field, its Lie derivative and the quadratic
//! Poisson bracket it is Hamiltonian for.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{LinForm, Poly, Var};
use crate::rational::{int, parse_rational, Rational};
use crate::{Error, Result};

/// Interaction parameters `(r, s, t)` of the skew-symmetric system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LVParams {
    #[serde(with = "crate::rational::serde_str")]
    pub r: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub s: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub t: Rational,
}

impl LVParams {
    pub fn new(r: Rational, s: Rational, t: Rational) -> Self {
        LVParams { r, s, t }
    }

    pub fn from_ints(r: i64, s: i64, t: i64) -> Self {
        LVParams::new(int(r), int(s), int(t))
    }

    pub fn parse(r: &str, s: &str, t: &str) -> Result<Self> {
        Ok(LVParams::new(parse_rational(r)?, parse_rational(s)?, parse_rational(t)?))
    }

    /// The open Kac-van Moerbeke (Volterra) lattice, `(1, 0, 1)`.
    pub fn km() -> Self {
        LVParams::from_ints(1, 0, 1)
    }

    /// The periodic Kac-van Moerbeke lattice, `(1, -1, 1)`.
    pub fn periodic_km() -> Self {
        LVParams::from_ints(1, -1, 1)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [&self.r, &self.s, &self.t].map(|q| q.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for LVParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r, s, t) = ({}, {}, {})", self.r, self.s, self.t)
    }
}

/// Right-hand side `(v1, v2, v3)` of a polynomial ODE in three variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub components: [Poly; 3],
}

impl VectorField {
    pub fn component(&self, var: Var) -> &Poly {
        &self.components[var.index()]
    }

    /// `sum_i v_i * df/dx_i`.
    pub fn lie_derivative(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for var in Var::ALL {
            let d = f.partial(var);
            if !d.is_zero() {
                out += &(self.component(var) * &d);
            }
        }
        out
    }
}

pub fn lv_vector_field(p: &LVParams) -> VectorField {
    let (x1, x2, x3) = (Poly::x1(), Poly::x2(), Poly::x3());
    let lin = |a: &Rational, u: &Poly, b: &Rational, w: &Poly| &u.scale(a) + &w.scale(b);
    VectorField {
        components: [
            &x1 * &lin(&p.r, &x2, &p.s, &x3),
            &x2 * &lin(&-&p.r, &x1, &p.t, &x3),
            &x3 * &lin(&-&p.s, &x1, &-&p.t, &x2),
        ],
    }
}

pub fn lie_derivative(p: &LVParams, f: &Poly) -> Poly {
    lv_vector_field(p).lie_derivative(f)
}

/// The cofactor `lambda` with `L(f) = lambda f`, if `f` is a Darboux
/// polynomial.
///
/// `Ok(None)` means `f` is not Darboux: either `L(f)` is not a multiple of
/// `f`, or the quotient is not a constant-free linear form. A zero cofactor
/// means `f` is a first integral.
pub fn cofactor_of(p: &LVParams, f: &Poly) -> Result<Option<LinForm>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lf = lie_derivative(p, f);
    Ok(lf.divide_exact(f)?.and_then(|q| LinForm::from_poly(&q)))
}

/// The bracket with `{x1,x2} = r x1 x2`, `{x1,x3} = s x1 x3`,
/// `{x2,x3} = t x2 x3`.
pub fn poisson_bracket(p: &LVParams, f: &Poly, g: &Poly) -> Poly {
    let df = Var::ALL.map(|v| f.partial(v));
    let dg = Var::ALL.map(|v| g.partial(v));
    let mut out = Poly::zero();
    for (i, j, coeff) in [(0, 1, &p.r), (0, 2, &p.s), (1, 2, &p.t)] {
        if coeff.is_zero() {
            continue;
        }
        let minor = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
        if minor.is_zero() {
            continue;
        }
        let structure = Poly::var(Var::ALL[i]) * Poly::var(Var::ALL[j]);
        out += &(&structure * &minor).scale(coeff);
    }
    out
}

/// `{x1,{x2,x3}} + {x2,{x3,x1}} + {x3,{x1,x2}}`, which vanishes identically
/// when the bracket satisfies the Jacobi identity.
pub fn jacobi_polynomial(p: &LVParams) -> Poly {
    jacobiator(p, &Poly::x1(), &Poly::x2(), &Poly::x3())
}

pub fn jacobiator(p: &LVParams, f: &Poly, g: &Poly, h: &Poly) -> Poly {
    let pb = |a: &Poly, b: &Poly| poisson_bracket(p, a, b);
    &(&pb(f, &pb(g, h)) + &pb(g, &pb(h, f))) + &pb(h, &pb(f, g))
}

/// Whether `{x_i, H} = v_i` for `H = x1 + x2 + x3`.
pub fn hamiltonian_consistency(p: &LVParams) -> bool {
    let h = Poly::hamiltonian();
    let field = lv_vector_field(p);
    Var::ALL
        .into_iter()
        .all(|v| poisson_bracket(p, &Poly::var(v), &h) == *field.component(v))
}
