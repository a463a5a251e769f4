//! Independent check of the Darboux nullspace: builds the linear system
//! straight from the exponent formula
//!
//! ```text
//! (L - lambda) x^e = x^e * ((-r e2 - s e3 - alpha) x1
//!                         + (r e1 - t e3 - beta) x2
//!                         + (s e1 + t e2 - gamma) x3)
//! ```
//!
//! and eliminates it densely over rationals with textbook Gauss-Jordan.

use std::collections::HashMap;

use darboux_core::poly::Monomial;
use darboux_core::{LVParams, LinForm, Poly, Rational};
use num_traits::{One, Zero};

/// All exponent triples of total degree `m`, in no particular order.
pub fn exponents(m: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            out.push([a, b, m - a - b]);
        }
    }
    out
}

/// Columns indexed by degree-`m` exponents, rows by degree-`m+1` exponents.
pub fn system(p: &LVParams, m: u32, lambda: &LinForm) -> (Vec<Vec<Rational>>, Vec<[u32; 3]>) {
    let cols = exponents(m);
    let rows = exponents(m + 1);
    let row_index: HashMap<[u32; 3], usize> = rows.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let mut mat = vec![vec![Rational::zero(); cols.len()]; rows.len()];
    let (r, s, t) = (&p.r, &p.s, &p.t);
    for (j, e) in cols.iter().enumerate() {
        let n = |k: u32| Rational::from_integer(k.into());
        let coeffs = [
            -(r * n(e[1])) - s * n(e[2]) - &lambda.alpha,
            r * n(e[0]) - t * n(e[2]) - &lambda.beta,
            s * n(e[0]) + t * n(e[1]) - &lambda.gamma,
        ];
        for (axis, c) in coeffs.into_iter().enumerate() {
            let mut target = *e;
            target[axis] += 1;
            mat[row_index[&target]][j] += c;
        }
    }
    (mat, cols)
}

/// Reduced row-echelon form; returns the pivot columns.
pub fn rref(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..mat.len()).find(|&i| !mat[i][col].is_zero()) else { continue };
        mat.swap(row, pr);
        let inv = Rational::one() / &mat[row][col];
        for x in mat[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..mat.len() {
            if i != row && !mat[i][col].is_zero() {
                let f = mat[i][col].clone();
                for k in 0..ncols {
                    let d = &f * &mat[row][k];
                    mat[i][k] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    mat.truncate(row);
    pivots
}

pub fn nullity(p: &LVParams, m: u32, lambda: &LinForm) -> usize {
    let (mut mat, cols) = system(p, m, lambda);
    cols.len() - rref(&mut mat).len()
}

fn to_poly(cols: &[[u32; 3]], v: &[Rational]) -> Poly {
    cols.iter().zip(v).fold(Poly::zero(), |mut acc, (e, c)| {
        acc.add_term(Monomial::new(e[0] as u8, e[1] as u8, e[2] as u8), c.clone());
        acc
    })
}

/// A kernel basis as polynomials (not in any canonical form).
pub fn kernel(p: &LVParams, m: u32, lambda: &LinForm) -> Vec<Poly> {
    let (mut mat, cols) = system(p, m, lambda);
    let pivots = rref(&mut mat);
    (0..cols.len())
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols.len()];
            v[free] = Rational::one();
            for (row, &pc) in mat.iter().zip(&pivots) {
                v[pc] = -row[free].clone();
            }
            to_poly(&cols, &v)
        })
        .collect()
}

/// Rank of a family of polynomials as coefficient vectors.
pub fn poly_rank(polys: &[Poly]) -> usize {
    let mut monos: Vec<Monomial> = polys.iter().flat_map(|f| f.terms().map(|(m, _)| *m)).collect();
    monos.sort();
    monos.dedup();
    let mut mat: Vec<Vec<Rational>> = polys
        .iter()
        .map(|f| monos.iter().map(|m| f.coeff(m)).collect())
        .collect();
    rref(&mut mat).len()
}

pub fn in_span(basis: &[Poly], f: &Poly) -> bool {
    let mut with = basis.to_vec();
    with.push(f.clone());
    poly_rank(&with) == poly_rank(basis)
}
