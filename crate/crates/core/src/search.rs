//! Exhaustive search for homogeneous Darboux polynomials of a fixed degree.
//!
//! Every cofactor of a degree-`m` homogeneous Darboux polynomial has the form
//!
//! ```text
//! alpha = -(a1 r + a2 s),   beta = b1 r - b2 t,   gamma = c1 s + c2 t
//! ```
//!
//! with non-negative index pairs summing to at most `m`. That gives a finite
//! candidate list; for each candidate `lambda` the condition
//! `L(f) = lambda f` is linear in the coefficients of `f`, so the Darboux
//! polynomials with that cofactor form the nullspace of a
//! `C(m+3,2) x C(m+2,2)` rational matrix. Most candidates give an injective
//! matrix; a rank test modulo a prime detects those before any exact
//! elimination is done.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{canonical_basis, modular, IntMatrix};
use crate::lv::{lv_vector_field, LVParams};
use crate::poly::{LinForm, Monomial, Poly, Var};
use crate::rational::{int, Rational};

/// A candidate cofactor together with every index pair that produces each of
/// its components. Several pairs can explain the same value when `r, s, t`
/// are rationally dependent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorCandidate {
    pub value: LinForm,
    /// `(a1, a2)` with `alpha = -(a1 r + a2 s)`.
    pub alpha_indices: Vec<(u32, u32)>,
    /// `(b1, b2)` with `beta = b1 r - b2 t`.
    pub beta_indices: Vec<(u32, u32)>,
    /// `(c1, c2)` with `gamma = c1 s + c2 t`.
    pub gamma_indices: Vec<(u32, u32)>,
}

/// The Darboux polynomials of one degree sharing one cofactor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub degree: u32,
    pub cofactor: LinForm,
    /// Reduced row-echelon basis over the degree-`m` monomials in canonical
    /// order: each element is monic and its leading monomial appears in no
    /// other element.
    pub basis: Vec<Poly>,
}

impl SearchResult {
    /// Whether `f` lies in the span of [`Self::basis`].
    pub fn contains(&self, f: &Poly) -> bool {
        let mut rest = f.clone();
        for b in &self.basis {
            let (lead, _) = b.leading_term().expect("basis elements are non-zero");
            let c = rest.coeff(lead);
            rest -= &b.scale(&c);
        }
        rest.is_zero()
    }
}

/// How candidate nullspaces are solved. The output is identical either way.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

fn index_pairs(m: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=m).flat_map(move |a| (0..=m - a).map(move |b| (a, b)))
}

fn component_values(
    m: u32,
    value: impl Fn(&Rational, &Rational) -> Rational,
) -> BTreeMap<Rational, Vec<(u32, u32)>> {
    let mut out: BTreeMap<Rational, Vec<(u32, u32)>> = BTreeMap::new();
    for (i, j) in index_pairs(m) {
        out.entry(value(&int(i.into()), &int(j.into())))
            .or_default()
            .push((i, j));
    }
    out
}

/// Candidates in ascending `(alpha, beta, gamma)` order, deduplicated by
/// value.
pub fn cofactor_candidates(p: &LVParams, m: u32) -> Vec<CofactorCandidate> {
    let alphas = component_values(m, |a1, a2| -(a1 * &p.r + a2 * &p.s));
    let betas = component_values(m, |b1, b2| b1 * &p.r - b2 * &p.t);
    let gammas = component_values(m, |c1, c2| c1 * &p.s + c2 * &p.t);
    let mut out = Vec::with_capacity(alphas.len() * betas.len() * gammas.len());
    for (alpha, ai) in &alphas {
        for (beta, bi) in &betas {
            for (gamma, ci) in &gammas {
                out.push(CofactorCandidate {
                    value: LinForm::new(alpha.clone(), beta.clone(), gamma.clone()),
                    alpha_indices: ai.clone(),
                    beta_indices: bi.clone(),
                    gamma_indices: ci.clone(),
                });
            }
        }
    }
    out
}

pub fn cofactor_lattice(p: &LVParams, m: u32) -> Vec<LinForm> {
    cofactor_candidates(p, m).into_iter().map(|c| c.value).collect()
}

/// The linear map `f -> L(f)` restricted to degree-`m` forms, kept as the
/// images of the basis monomials so that each candidate only has to subtract
/// `lambda * x^e`.
struct DegreeSystem {
    columns: Vec<Monomial>,
    rows: BTreeMap<Monomial, usize>,
    images: Vec<Poly>,
    screen: Option<ModularScreen>,
}

/// The same system reduced mod a prime, for a quick full-rank test.
struct ModularScreen {
    /// Per column: `(row, coefficient)` of `L(x^e)`.
    images: Vec<Vec<(usize, u64)>>,
    /// Per column: the rows of `x1 x^e`, `x2 x^e`, `x3 x^e`.
    shifted: Vec<[usize; 3]>,
}

impl ModularScreen {
    fn new(columns: &[Monomial], rows: &BTreeMap<Monomial, usize>, images: &[Poly]) -> Option<Self> {
        let images = images
            .iter()
            .map(|img| {
                img.terms()
                    .map(|(mon, c)| Some((rows[mon], modular::reduce(c)?)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        let shifted = columns
            .iter()
            .map(|mon| {
                Var::ALL.map(|v| rows[&mon.checked_mul(Monomial::var(v)).expect("degree is bounded")])
            })
            .collect();
        Some(ModularScreen { images, shifted })
    }

    /// `true` when `L - lambda` is certainly injective on degree-`m` forms.
    fn injective(&self, lambda: &LinForm, nrows: usize) -> bool {
        let Some(lam) = lambda.coeffs().iter().map(|q| modular::reduce(q)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        let ncols = self.images.len();
        let mut matrix = vec![vec![0u64; ncols]; nrows];
        for (col, (image, shifted)) in self.images.iter().zip(&self.shifted).enumerate() {
            for &(row, c) in image {
                matrix[row][col] = c;
            }
            for (row, l) in shifted.iter().zip(&lam) {
                matrix[*row][col] = modular::sub(matrix[*row][col], *l);
            }
        }
        modular::full_column_rank(matrix, ncols)
    }
}

impl DegreeSystem {
    fn new(p: &LVParams, m: u32) -> Self {
        let m8 = u8::try_from(m).expect("search degree fits the exponent bound");
        let field = lv_vector_field(p);
        let columns = Monomial::of_degree(m8);
        let rows: BTreeMap<Monomial, usize> = Monomial::of_degree(m8 + 1)
            .into_iter()
            .enumerate()
            .map(|(i, mon)| (mon, i))
            .collect();
        let images: Vec<Poly> = columns
            .iter()
            .map(|&mon| field.lie_derivative(&Poly::term(mon, int(1))))
            .collect();
        let screen = ModularScreen::new(&columns, &rows, &images);
        DegreeSystem { columns, rows, images, screen }
    }

    fn solve(&self, lambda: &LinForm) -> Vec<Poly> {
        if self.screen.as_ref().is_some_and(|s| s.injective(lambda, self.rows.len())) {
            return Vec::new();
        }
        let lambda = lambda.to_poly();
        let mut matrix = vec![vec![Rational::from_integer(0.into()); self.columns.len()]; self.rows.len()];
        for (col, (mon, image)) in self.columns.iter().zip(&self.images).enumerate() {
            let column = image - &lambda.mul_term(*mon, &int(1)).expect("degree is bounded");
            for (row_mon, c) in column.terms() {
                matrix[self.rows[row_mon]][col] = c.clone();
            }
        }
        IntMatrix::from_rational_rows(&matrix, self.columns.len())
            .nullspace()
            .into_iter()
            .map(|v| {
                let f = self.to_poly(&v);
                // Re-check L(f) = lambda f from the stored images.
                let lf = v
                    .iter()
                    .zip(&self.images)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(Poly::zero(), |acc, (c, img)| &acc + &img.scale(c));
                assert_eq!(lf, &lambda * &f, "elimination produced a non-solution");
                f
            })
            .collect()
    }

    #[cfg(test)]
    fn clone_without_screen(&self) -> DegreeSystem {
        DegreeSystem {
            columns: self.columns.clone(),
            rows: self.rows.clone(),
            images: self.images.clone(),
            screen: None,
        }
    }

    fn to_poly(&self, coords: &[Rational]) -> Poly {
        Poly::from_terms(self.columns.iter().copied().zip(coords.iter().cloned()))
    }
}

/// Basis of the homogeneous degree-`m` solutions of `L(f) = lambda f`.
pub fn darboux_nullspace(p: &LVParams, m: u32, lambda: &LinForm) -> Vec<Poly> {
    DegreeSystem::new(p, m).solve(lambda)
}

pub fn search(p: &LVParams, m: u32) -> Vec<SearchResult> {
    search_with(p, m, Execution::default())
}

pub fn search_with(p: &LVParams, m: u32, execution: Execution) -> Vec<SearchResult> {
    let system = DegreeSystem::new(p, m);
    let candidates = cofactor_lattice(p, m);
    let solve = |lambda: LinForm| {
        let basis = system.solve(&lambda);
        (!basis.is_empty()).then_some(SearchResult {
            degree: m,
            cofactor: lambda,
            basis,
        })
    };
    // Candidates arrive sorted and `collect` keeps input order, so both
    // branches return the same sequence.
    match execution {
        Execution::Sequential => candidates.into_iter().filter_map(solve).collect(),
        Execution::Parallel => candidates.into_par_iter().filter_map(solve).collect(),
    }
}

pub fn search_all(p: &LVParams, m_max: u32) -> Vec<SearchResult> {
    search_all_with(p, m_max, Execution::default())
}

pub fn search_all_with(p: &LVParams, m_max: u32, execution: Execution) -> Vec<SearchResult> {
    (1..=m_max).flat_map(|m| search_with(p, m, execution)).collect()
}

/// Canonical basis of the span of `polys`, all homogeneous of degree `m`.
pub fn canonical_span(polys: &[Poly], m: u32) -> Vec<Poly> {
    let m8 = u8::try_from(m).expect("degree fits the exponent bound");
    let columns = Monomial::of_degree(m8);
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|f| columns.iter().map(|c| f.coeff(c)).collect())
        .collect();
    canonical_basis(&rows, columns.len())
        .into_iter()
        .map(|v| Poly::from_terms(columns.iter().copied().zip(v)))
        .collect()
}
