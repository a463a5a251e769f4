//! Exact computer algebra for Darboux polynomials of the three-dimensional
//! Lotka-Volterra system
//!
//! ```text
//! x1' = x1 (r x2 + s x3)
//! x2' = x2 (-r x1 + t x3)
//! x3' = x3 (-s x1 - t x2)
//! ```
//!
//! with rational interaction parameters `(r, s, t)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: sparse polynomials in `x1, x2, x3` over arbitrary-precision
//!   rationals, plus the [`LinForm`] type that cofactors live in.
//! - [`lv`]: the vector field, Lie derivative, cofactor extraction and the
//!   quadratic Poisson bracket.
//! - [`search`]: exhaustive enumeration of homogeneous Darboux polynomials of
//!   a fixed degree over the finite cofactor lattice.
//! - [`structure`]: factorisation certificates (coordinate powers, coincidence
//!   binomials and a first integral), Casimir exponents and parameter
//!   classification.
//! - [`numeric`]: RK4 trajectories, drift of conserved quantities and the two
//!   Lax pairs of the Kac-van Moerbeke systems.

pub mod error;
pub mod linalg;
pub mod lv;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use lv::{cofactor_of, lie_derivative, lv_vector_field, poisson_bracket, LVParams, VectorField};
pub use poly::{LinForm, Monomial, Poly, Var};
pub use rational::{parse_rational, Rational};
pub use search::{cofactor_lattice, darboux_nullspace, search, search_all, SearchResult};
pub use structure::{casimir_exponents, certify, classify_params, Certificate, Certification, ParamClass};
