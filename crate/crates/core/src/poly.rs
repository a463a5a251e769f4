//! Sparse polynomials in `x1, x2, x3` with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is
//! graded lexicographic with `x1 > x2 > x3`. Zero coefficients are never
//! stored, so structurally equal maps are equal polynomials and every
//! polynomial has exactly one serialisation.

use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;
use crate::{Error, Result};

/// One of the three coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X1,
    X2,
    X3,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X1, Var::X2, Var::X3];

    /// Zero-based position in an exponent triple.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Maps the axis numbers 1, 2, 3 onto variables.
    pub fn from_axis(axis: usize) -> Option<Var> {
        match axis {
            1 => Some(Var::X1),
            2 => Some(Var::X2),
            3 => Some(Var::X3),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.index() + 1)
    }
}

/// Exponent triple `(e1, e2, e3)` of `x1^e1 x2^e2 x3^e3`, each at most 255.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u8; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(e1: u8, e2: u8, e3: u8) -> Self {
        Monomial([e1, e2, e3])
    }

    pub fn var(var: Var) -> Self {
        let mut exps = [0; 3];
        exps[var.index()] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> [u8; 3] {
        self.0
    }

    pub fn exponent(&self, var: Var) -> u8 {
        self.0[var.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        let mut out = [0u8; 3];
        for (slot, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *slot = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let mut out = [0u8; 3];
        for (slot, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *slot = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    /// All monomials of total degree `degree`, in descending canonical order
    /// (`x1^m` first, `x3^m` last).
    pub fn of_degree(degree: u8) -> Vec<Monomial> {
        let mut out = Vec::with_capacity((usize::from(degree) + 1) * (usize::from(degree) + 2) / 2);
        for e1 in (0..=degree).rev() {
            for e2 in (0..=degree - e1).rev() {
                out.push(Monomial([e1, e2, degree - e1 - e2]));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for var in Var::ALL {
            let e = self.exponent(var);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `x1, x2, x3` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn var(var: Var) -> Self {
        Poly::term(Monomial::var(var), Rational::one())
    }

    pub fn x1() -> Self {
        Poly::var(Var::X1)
    }

    pub fn x2() -> Self {
        Poly::var(Var::X2)
    }

    pub fn x3() -> Self {
        Poly::var(Var::X3)
    }

    /// `x1 + x2 + x3`, the first integral shared by every parameter choice.
    pub fn hamiltonian() -> Self {
        Poly::x1() + Poly::x2() + Poly::x3()
    }

    pub fn term(monomial: Monomial, coeff: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(monomial, coeff);
        p
    }

    pub fn monomial(e1: u8, e2: u8, e3: u8) -> Self {
        Poly::term(Monomial::new(e1, e2, e3), Rational::one())
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, monomial: &Monomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    /// Multiplies by `coeff * monomial`.
    pub fn mul_term(&self, monomial: Monomial, coeff: &Rational) -> Result<Poly> {
        if coeff.is_zero() {
            return Ok(Poly::zero());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.checked_mul(monomial)?, c * coeff);
        }
        Ok(Poly { terms })
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &other.terms {
            for (n, d) in &self.terms {
                out.add_term(n.checked_mul(*m)?, d * c);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, exp: u32) -> Result<Poly> {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: Var) -> Poly {
        let i = var.index();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.exponents();
            if e[i] == 0 {
                continue;
            }
            let factor = Rational::from_integer(e[i].into());
            e[i] -= 1;
            terms.insert(Monomial(e), c * factor);
        }
        Poly { terms }
    }

    /// Exact division.
    ///
    /// Returns `Ok(None)` when `divisor` does not divide `self`. The quotient
    /// is built by cancelling leading terms in graded-lex order; the first
    /// leading term that the divisor's leading monomial does not divide ends
    /// the attempt.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (lead_mon, lead_coeff) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (lead_mon, lead_coeff) = (*lead_mon, lead_coeff.clone());
        let mut remainder = self.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = remainder.leading_term() {
            let Some(q_mon) = m.checked_div(lead_mon) else {
                return Ok(None);
            };
            let q_coeff = c / &lead_coeff;
            remainder -= &divisor.mul_term(q_mon, &q_coeff)?;
            quotient.add_term(q_mon, q_coeff);
        }
        Ok(Some(quotient))
    }

    /// Terms grouped by total degree, ascending.
    pub fn homogeneous_components(&self) -> Vec<(u32, Poly)> {
        let mut parts: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        parts.into_iter().collect()
    }

    pub fn evaluate(&self, point: &[Rational; 3]) -> Rational {
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents().iter()) {
                if e > 0 {
                    value *= num_traits::pow(x.clone(), usize::from(e));
                }
            }
            sum += value;
        }
        sum
    }

    pub fn evaluate_f64(&self, point: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponents();
                c.to_f64().unwrap_or(f64::NAN)
                    * point[0].powi(e[0].into())
                    * point[1].powi(e[1].into())
                    * point[2].powi(e[2].into())
            })
            .sum()
    }

    /// Euler's identity `x1 f_x1 + x2 f_x2 + x3 f_x3 = m f`; false for
    /// non-homogeneous input.
    pub fn euler_check(&self) -> bool {
        if !self.is_homogeneous() {
            return false;
        }
        let Some(m) = self.degree() else {
            return true;
        };
        let mut lhs = Poly::zero();
        for var in Var::ALL {
            lhs += &(&Poly::var(var) * &self.partial(var));
        }
        lhs == self.scale(&Rational::from_integer(m.into()))
    }

    /// Highest power of `var` dividing `self`; `None` for zero.
    pub fn var_multiplicity(&self, var: Var) -> Option<u8> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_poly(s)
    }
}

impl From<Var> for Poly {
    fn from(var: Var) -> Self {
        Poly::var(var)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c.into()))
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Panics on exponent overflow; use [`Poly::checked_mul`] for untrusted input.
impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial exponent overflow")
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: [u8; 3],
    #[serde(with = "crate::rational::serde_str")]
    c: Rational,
}

/// JSON form: `[{"e":[e1,e2,e3],"c":"p/q"}, ...]` in canonical order.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(m, c)| TermRepr {
            e: m.exponents(),
            c: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for t in &terms {
            if !seen.insert(t.e) {
                return Err(de::Error::custom(format!("duplicate monomial {:?}", t.e)));
            }
        }
        Ok(Poly::from_terms(
            terms.into_iter().map(|t| (Monomial(t.e), t.c)),
        ))
    }
}

/// A linear form `alpha x1 + beta x2 + gamma x3`; cofactors of this system
/// always have this shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinForm {
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub beta: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub gamma: Rational,
}

impl LinForm {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        LinForm { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        use crate::rational::int;
        LinForm::new(int(alpha), int(beta), int(gamma))
    }

    pub fn zero() -> Self {
        LinForm::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn coeffs(&self) -> [&Rational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(
            Var::ALL
                .into_iter()
                .zip(self.coeffs())
                .map(|(v, c)| (Monomial::var(v), c.clone())),
        )
    }

    /// Reads a polynomial back as a linear form; `None` unless every term
    /// has degree exactly one.
    pub fn from_poly(p: &Poly) -> Option<LinForm> {
        if p.terms().any(|(m, _)| m.degree() != 1) {
            return None;
        }
        let c = |v| p.coeff(&Monomial::var(v));
        Some(LinForm::new(c(Var::X1), c(Var::X2), c(Var::X3)))
    }

    pub fn scale(&self, k: &Rational) -> LinForm {
        LinForm::new(&self.alpha * k, &self.beta * k, &self.gamma * k)
    }

    pub fn evaluate_f64(&self, x: [f64; 3]) -> f64 {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        f(&self.alpha) * x[0] + f(&self.beta) * x[1] + f(&self.gamma) * x[2]
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly(), f)
    }
}

impl Add<&LinForm> for &LinForm {
    type Output = LinForm;

    fn add(self, rhs: &LinForm) -> LinForm {
        LinForm::new(
            &self.alpha + &rhs.alpha,
            &self.beta + &rhs.beta,
            &self.gamma + &rhs.gamma,
        )
    }
}

impl Sub<&LinForm> for &LinForm {
    type Output = LinForm;

    fn sub(self, rhs: &LinForm) -> LinForm {
        LinForm::new(
            &self.alpha - &rhs.alpha,
            &self.beta - &rhs.beta,
            &self.gamma - &rhs.gamma,
        )
    }
}
