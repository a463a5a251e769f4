//! Factorisation certificates and the parameter conditions under which they
//! are guaranteed to exist.
//!
//! A Darboux polynomial `f` is *certified* when it splits exactly as
//!
//! ```text
//! f = x1^i x2^j x3^k (x1+x2)^l12 (x2+x3)^l23 (x1+x3)^l13 * I
//! ```
//!
//! with `I` a first integral. The binomials only take part when the matching
//! parameter coincidence holds (`s = t`, `r = s`, `r = -t` respectively),
//! since otherwise they are not Darboux.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lv::{cofactor_of, lie_derivative, poisson_bracket, LVParams};
use crate::poly::{LinForm, Poly, Var};
use crate::rational::{int, Rational};
use crate::{Error, Result};

/// The linear Darboux polynomials that certificates are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialFactor {
    X1,
    X2,
    X3,
    /// `x1 + x2 + x3`, a first integral for every parameter choice.
    Hamiltonian,
    /// `x1 + x2`, Darboux iff `s = t`.
    X1PlusX2,
    /// `x2 + x3`, Darboux iff `r = s`.
    X2PlusX3,
    /// `x1 + x3`, Darboux iff `r = -t`.
    X1PlusX3,
}

impl SpecialFactor {
    pub fn poly(self) -> Poly {
        match self {
            SpecialFactor::X1 => Poly::x1(),
            SpecialFactor::X2 => Poly::x2(),
            SpecialFactor::X3 => Poly::x3(),
            SpecialFactor::Hamiltonian => Poly::hamiltonian(),
            SpecialFactor::X1PlusX2 => Poly::x1() + Poly::x2(),
            SpecialFactor::X2PlusX3 => Poly::x2() + Poly::x3(),
            SpecialFactor::X1PlusX3 => Poly::x1() + Poly::x3(),
        }
    }

    /// Cofactor of the factor, valid whenever [`Self::is_darboux`] holds.
    pub fn cofactor(self, p: &LVParams) -> LinForm {
        let zero = Rational::zero;
        match self {
            SpecialFactor::X1 => LinForm::new(zero(), p.r.clone(), p.s.clone()),
            SpecialFactor::X2 => LinForm::new(-&p.r, zero(), p.t.clone()),
            SpecialFactor::X3 => LinForm::new(-&p.s, -&p.t, zero()),
            SpecialFactor::Hamiltonian => LinForm::zero(),
            SpecialFactor::X1PlusX2 => LinForm::new(zero(), zero(), p.s.clone()),
            SpecialFactor::X2PlusX3 => LinForm::new(-&p.r, zero(), zero()),
            SpecialFactor::X1PlusX3 => LinForm::new(zero(), p.r.clone(), zero()),
        }
    }

    pub fn is_darboux(self, p: &LVParams) -> bool {
        match self {
            SpecialFactor::X1PlusX2 => p.s == p.t,
            SpecialFactor::X2PlusX3 => p.r == p.s,
            SpecialFactor::X1PlusX3 => p.r == -&p.t,
            _ => true,
        }
    }
}

/// The coordinate Darboux polynomials, `H`, and whichever coincidence
/// binomials the parameters admit, each with its cofactor.
pub fn special_linear_factors(p: &LVParams) -> Vec<(Poly, LinForm)> {
    use SpecialFactor::*;
    [X1, X2, X3, Hamiltonian, X1PlusX2, X2PlusX3, X1PlusX3]
        .into_iter()
        .filter(|f| f.is_darboux(p))
        .map(|f| (f.poly(), f.cofactor(p)))
        .collect()
}

/// Cofactor of `x1^i x2^j x3^k`: `(-r j - s k, r i - t k, s i + t j)`.
pub fn monomial_cofactor(p: &LVParams, i: u32, j: u32, k: u32) -> LinForm {
    let (i, j, k) = (int(i.into()), int(j.into()), int(k.into()));
    LinForm::new(
        -(&p.r * &j) - &p.s * &k,
        &p.r * &i - &p.t * &k,
        &p.s * &i + &p.t * &j,
    )
}

/// Multiplicities of the special factors split off by [`certify`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorExponents {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l12: u32,
    pub l23: u32,
    pub l13: u32,
}

impl FactorExponents {
    fn slot(&mut self, factor: SpecialFactor) -> &mut u32 {
        match factor {
            SpecialFactor::X1 => &mut self.i,
            SpecialFactor::X2 => &mut self.j,
            SpecialFactor::X3 => &mut self.k,
            SpecialFactor::X1PlusX2 => &mut self.l12,
            SpecialFactor::X2PlusX3 => &mut self.l23,
            SpecialFactor::X1PlusX3 => &mut self.l13,
            SpecialFactor::Hamiltonian => unreachable!("H is never split off"),
        }
    }

    fn pairs(&self) -> [(SpecialFactor, u32); 6] {
        [
            (SpecialFactor::X1, self.i),
            (SpecialFactor::X2, self.j),
            (SpecialFactor::X3, self.k),
            (SpecialFactor::X1PlusX2, self.l12),
            (SpecialFactor::X2PlusX3, self.l23),
            (SpecialFactor::X1PlusX3, self.l13),
        ]
    }

    /// The product of the special factors, without the remainder.
    pub fn product(&self) -> Poly {
        self.pairs()
            .into_iter()
            .filter(|(_, e)| *e > 0)
            .fold(Poly::one(), |acc, (f, e)| {
                &acc * &f.poly().checked_pow(e).expect("factor power within bounds")
            })
    }

    /// Sum of the factor cofactors weighted by multiplicity.
    pub fn cofactor(&self, p: &LVParams) -> LinForm {
        self.pairs()
            .into_iter()
            .fold(LinForm::zero(), |acc, (f, e)| &acc + &f.cofactor(p).scale(&int(e.into())))
    }

    pub fn uses_only(&self, allowed: &[SpecialFactor]) -> bool {
        self.pairs()
            .into_iter()
            .all(|(f, e)| e == 0 || allowed.contains(&f))
    }
}

/// A verified factorisation `f = (special factors) * remainder` with a
/// first-integral remainder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub exponents: FactorExponents,
    pub remainder: Poly,
    /// Cofactor rebuilt from the exponents alone; always equals the
    /// cofactor of the certified polynomial.
    #[serde(rename = "cofactor")]
    pub reconstructed_cofactor: LinForm,
}

impl Certificate {
    pub fn recompose(&self) -> Poly {
        &self.exponents.product() * &self.remainder
    }
}

/// What was left when the remainder is not a first integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Uncertified {
    #[serde(flatten)]
    pub exponents: FactorExponents,
    pub remainder: Poly,
    pub remainder_cofactor: LinForm,
    pub cofactor: LinForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified(Certificate),
    CannotCertify(Uncertified),
}

impl Certification {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Certification::Certified(c) => Some(c),
            Certification::CannotCertify(_) => None,
        }
    }
}

/// Splits off coordinates (`x1`, `x2`, `x3`, in that order) and then the
/// admissible coincidence binomials, each as often as it divides, and checks
/// that what remains is a first integral. `H` is never split off.
///
/// Errors on the zero polynomial and on non-Darboux input.
pub fn certify(p: &LVParams, f: &Poly) -> Result<Certification> {
    let cofactor = cofactor_of(p, f)?.ok_or(Error::NotDarboux)?;
    let mut exponents = FactorExponents::default();
    let mut remainder = f.clone();
    use SpecialFactor::*;
    for factor in [X1, X2, X3, X1PlusX2, X2PlusX3, X1PlusX3] {
        if !factor.is_darboux(p) {
            continue;
        }
        let divisor = factor.poly();
        while let Some(q) = remainder.divide_exact(&divisor)? {
            remainder = q;
            *exponents.slot(factor) += 1;
        }
    }
    let reconstructed = exponents.cofactor(p);
    // Factors of a Darboux polynomial are Darboux, so this cannot fail.
    let remainder_cofactor = cofactor_of(p, &remainder)?.expect("quotient of Darboux polynomials");
    debug_assert_eq!(&reconstructed + &remainder_cofactor, cofactor);
    if remainder_cofactor.is_zero() {
        debug_assert!(lie_derivative(p, &remainder).is_zero());
        assert_eq!(reconstructed, cofactor, "certificate cofactor mismatch");
        Ok(Certification::Certified(Certificate {
            exponents,
            remainder,
            reconstructed_cofactor: reconstructed,
        }))
    } else {
        Ok(Certification::CannotCertify(Uncertified {
            exponents,
            remainder,
            remainder_cofactor,
            cofactor,
        }))
    }
}

/// Primitive integer exponents `(a, b, c)` proportional to `(t, -s, r)`, so
/// that `x1^a x2^b x3^c` is the (possibly Laurent) Casimir. The first
/// non-zero entry is positive. `None` when `r = s = t = 0`.
pub fn casimir_exponents(p: &LVParams) -> Option<[BigInt; 3]> {
    let raw = [p.t.clone(), -&p.s, p.r.clone()];
    if raw.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = raw.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints = raw.map(|q| q.numer() * (&lcm / q.denom()));
    let gcd = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let first = ints.iter().find(|x| !x.is_zero()).expect("not all zero");
    let sign = if first.is_negative() { -BigInt::one() } else { BigInt::one() };
    for x in ints.iter_mut() {
        *x = &*x / &gcd * &sign;
    }
    Some(ints)
}

/// The three linear conditions `b r + c s = 0`, `a r - c t = 0`,
/// `a s + b t = 0` that make `x1^a x2^b x3^c` a first integral.
pub fn casimir_conditions_hold(p: &LVParams, exps: &[BigInt; 3]) -> bool {
    let [a, b, c] = exps.clone().map(Rational::from_integer);
    (&b * &p.r + &c * &p.s).is_zero()
        && (&a * &p.r - &c * &p.t).is_zero()
        && (&a * &p.s + &b * &p.t).is_zero()
}

/// For `F = x1^a x2^b x3^c` with integer exponents, writes `F = P / M` with
/// monomials `P`, `M` and returns `{x_i, P} M - P {x_i, M}` for each `i`.
/// `F` Poisson-commutes with `x_i` iff the entry is zero.
pub fn casimir_bracket_residuals(p: &LVParams, exps: &[BigInt; 3]) -> Result<[Poly; 3]> {
    let mut num = [0u8; 3];
    let mut den = [0u8; 3];
    for (idx, e) in exps.iter().enumerate() {
        let mag = e.abs().to_u8().ok_or(Error::ExponentOverflow)?;
        if e.is_negative() {
            den[idx] = mag;
        } else {
            num[idx] = mag;
        }
    }
    let numerator = Poly::monomial(num[0], num[1], num[2]);
    let denominator = Poly::monomial(den[0], den[1], den[2]);
    Ok(Var::ALL.map(|v| {
        let x = Poly::var(v);
        &(&poisson_bracket(p, &x, &numerator) * &denominator)
            - &(&numerator * &poisson_bracket(p, &x, &denominator))
    }))
}

/// Which sufficient case for `N_m s ∩ N_m t = ∅` applies to rational `s, t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Remark2Case {
    /// One of `s, t` is positive and the other negative.
    OppositeSigns,
    /// Same sign and `s/t < 1/m` or `s/t > m`.
    RatioOutOfRange,
    NotApplicable,
}

/// Exact classification of `(r, s, t)` against the hypotheses of the
/// factorisation results, for one degree `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamClass {
    pub degree: u32,
    pub r_zero: bool,
    pub s_zero: bool,
    pub t_zero: bool,
    pub s_eq_t: bool,
    pub r_eq_s: bool,
    pub r_eq_neg_t: bool,
    /// `s = 0` and `N_m r ∩ (-N_m t) = ∅`.
    pub condition_i: bool,
    /// `r, s, t` non-zero and `N_m r ∩ (-N_m t)`, `N_m s ∩ N_m t`,
    /// `(-N_m r) ∩ (-N_m s)` all empty.
    pub condition_ii: bool,
    /// `s = t` with `r, s` non-zero and the two intersections of condition
    /// (ii) that do not involve `s = t` empty.
    pub coincidence_condition: bool,
    pub remark2_case: Remark2Case,
    #[serde(with = "opt_rational")]
    pub q1: Option<Rational>,
    #[serde(with = "opt_rational")]
    pub q2: Option<Rational>,
    #[serde(with = "opt_rational")]
    pub q3: Option<Rational>,
}

mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(q) => s.collect_str(q),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Whether `{n x : n in 1..=m}` and `{n y : n in 1..=m}` meet.
pub fn multiples_intersect(m: u32, x: &Rational, y: &Rational) -> bool {
    (1..=m).any(|n1| (1..=m).any(|n2| int(n1.into()) * x == int(n2.into()) * y))
}

fn ratio(a: &Rational, b: &Rational) -> Option<Rational> {
    (!b.is_zero()).then(|| a / b)
}

pub fn classify_params(p: &LVParams, m: u32) -> ParamClass {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let all_nonzero = !r.is_zero() && !s.is_zero() && !t.is_zero();
    let rt_clear = !multiples_intersect(m, r, &-t);
    let st_clear = !multiples_intersect(m, s, t);
    let rs_clear = !multiples_intersect(m, &-r, &-s);
    let remark2_case = if s.is_zero() || t.is_zero() {
        Remark2Case::NotApplicable
    } else if s.is_positive() != t.is_positive() {
        Remark2Case::OppositeSigns
    } else {
        let q = s / t;
        let m = int(m.into());
        if q < Rational::one() / &m || q > m {
            Remark2Case::RatioOutOfRange
        } else {
            Remark2Case::NotApplicable
        }
    };
    ParamClass {
        degree: m,
        r_zero: r.is_zero(),
        s_zero: s.is_zero(),
        t_zero: t.is_zero(),
        s_eq_t: s == t,
        r_eq_s: r == s,
        r_eq_neg_t: *r == -t,
        condition_i: s.is_zero() && rt_clear,
        condition_ii: all_nonzero && rt_clear && st_clear && rs_clear,
        coincidence_condition: !r.is_zero() && !s.is_zero() && s == t && rt_clear && rs_clear,
        remark2_case,
        q1: ratio(r, s),
        q2: ratio(r, t),
        q3: ratio(s, t),
    }
}

/// Index-level hypotheses used by the finer cofactor results. They depend
/// only on the cofactor value, not on which index pair explains it.
pub mod hypotheses {
    use super::*;

    /// `x` is one of `0, 1, ..., k`.
    pub fn in_range_from_zero(x: &Rational, k: u32) -> bool {
        x.is_integer() && !x.is_negative() && *x <= int(k.into())
    }

    /// `x` is one of `1, ..., k`.
    pub fn in_range_from_one(x: &Rational, k: u32) -> bool {
        x.is_integer() && x.is_positive() && *x <= int(k.into())
    }

    /// Whether `x2 | f` is forced for every homogeneous degree-`m` Darboux
    /// polynomial with this cofactor: `gamma != 0` and either `s = 0` or
    /// `gamma` is not among `s, 2s, ..., ms`.
    pub fn x2_divides(p: &LVParams, m: u32, cofactor: &LinForm) -> bool {
        let gamma = &cofactor.gamma;
        !gamma.is_zero() && (p.s.is_zero() || !in_range_from_one(&(gamma / &p.s), m))
    }

    /// Same with the roles of `s` and `t` swapped, forcing `x1 | f`.
    pub fn x1_divides(p: &LVParams, m: u32, cofactor: &LinForm) -> bool {
        let gamma = &cofactor.gamma;
        !gamma.is_zero() && (p.t.is_zero() || !in_range_from_one(&(gamma / &p.t), m))
    }

    /// Hypothesis under which the `s`-index of `alpha` must equal the
    /// `t`-index of `beta` (`r, s, t` non-zero).
    pub fn alpha_beta_index_agreement(p: &LVParams, m: u32, c: &LinForm) -> bool {
        let (r, s, t) = (&p.r, &p.s, &p.t);
        if r.is_zero() || s.is_zero() || t.is_zero() {
            return false;
        }
        (0..m).all(|j| {
            let j = int(j.into());
            let left = -(&c.alpha / r) - &j * s / r;
            let right = &c.beta / r + &j * t / r;
            let k = m - j.to_u32().expect("small");
            !in_range_from_zero(&left, k) && !in_range_from_zero(&right, k)
        })
    }

    /// The four index hypotheses for the `s = t` case.
    pub fn coincidence_index_conditions(p: &LVParams, m: u32, c: &LinForm) -> bool {
        let (r, s) = (&p.r, &p.s);
        if r.is_zero() || s.is_zero() || p.s != p.t {
            return false;
        }
        (0..m).all(|j| {
            let k = m - j;
            let j = int(j.into());
            [
                -(&c.alpha / r) - &j * s / r,
                &c.beta / r + &j * s / r,
                -(&c.alpha / s) - &j * r / s,
                -(&c.beta / s) + &j * r / s,
            ]
            .iter()
            .all(|x| !in_range_from_zero(x, k))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn poly(text: &str) -> Poly {
        text.parse().unwrap()
    }

    fn certified(p: &LVParams, f: &str) -> Certificate {
        match certify(p, &poly(f)).unwrap() {
            Certification::Certified(c) => c,
            other => panic!("{f} not certified: {other:?}"),
        }
    }

    #[test]
    fn special_factor_examples() {
        let st = special_linear_factors(&LVParams::from_ints(5, 1, 1));
        assert!(st.contains(&(poly("x1 + x2"), LinForm::from_ints(0, 0, 1))));
        let km = special_linear_factors(&LVParams::km());
        assert_eq!(
            km,
            vec![
                (Poly::x1(), LinForm::from_ints(0, 1, 0)),
                (Poly::x2(), LinForm::from_ints(-1, 0, 1)),
                (Poly::x3(), LinForm::from_ints(0, -1, 0)),
                (Poly::hamiltonian(), LinForm::zero()),
            ]
        );
        let ones = special_linear_factors(&LVParams::from_ints(1, 1, 1));
        assert!(ones.contains(&(poly("x2 + x3"), LinForm::from_ints(-1, 0, 0))));
        assert!(ones.contains(&(poly("x1 + x2"), LinForm::from_ints(0, 0, 1))));
        assert_eq!(ones.len(), 6);
    }

    #[test]
    fn special_factor_cofactors_are_exact() {
        for p in [
            LVParams::from_ints(1, 1, 1),
            LVParams::from_ints(2, 3, -2),
            LVParams::new(rat(1, 3), rat(-2, 5), rat(-2, 5)),
        ] {
            for (f, c) in special_linear_factors(&p) {
                assert_eq!(cofactor_of(&p, &f).unwrap(), Some(c), "{f} at {p}");
            }
        }
    }

    #[test]
    fn monomial_cofactor_examples() {
        let km = LVParams::km();
        assert_eq!(monomial_cofactor(&km, 2, 0, 1), LinForm::from_ints(0, 1, 0));
        assert_eq!(cofactor_of(&km, &poly("x1^2*x3")).unwrap(), Some(LinForm::from_ints(0, 1, 0)));
        let p = LVParams::new(rat(7, 3), rat(-1, 2), rat(4, 1));
        assert_eq!(monomial_cofactor(&p, 0, 0, 0), LinForm::zero());
        let st = LVParams::from_ints(5, 1, 1);
        let base = monomial_cofactor(&st, 1, 0, 1);
        assert_eq!(base, LinForm::from_ints(-1, 4, 1));
        assert_eq!(&base + &LinForm::from_ints(0, 0, 1), LinForm::from_ints(-1, 4, 2));
    }

    #[test]
    fn certify_examples() {
        let c = certified(&LVParams::km(), "x2*x3*(x1+x2+x3)");
        assert_eq!((c.exponents.i, c.exponents.j, c.exponents.k), (0, 1, 1));
        assert_eq!(c.remainder, Poly::hamiltonian());
        assert_eq!(c.reconstructed_cofactor, LinForm::from_ints(-1, -1, 1));

        let c = certified(&LVParams::from_ints(5, 1, 1), "x1*x3*(x1+x2)");
        assert_eq!(
            c.exponents,
            FactorExponents { i: 1, k: 1, l12: 1, ..Default::default() }
        );
        assert_eq!(c.remainder, Poly::one());
        assert_eq!(c.reconstructed_cofactor, LinForm::from_ints(-1, 4, 2));

        let c = certified(&LVParams::periodic_km(), "x1*x2*x3");
        assert_eq!((c.exponents.i, c.exponents.j, c.exponents.k), (1, 1, 1));
        assert_eq!(c.remainder, Poly::one());
        assert!(c.reconstructed_cofactor.is_zero());
    }

    #[test]
    fn certificate_recomposes() {
        let p = LVParams::from_ints(5, 1, 1);
        let f = poly("-3*x2^2*x3*(x1+x2)^2*(x1+x2+x3)^2");
        let c = certified(&p, &f.to_string());
        assert_eq!(c.recompose(), f);
        assert_eq!(c.exponents.l12, 2);
        assert!(lie_derivative(&p, &c.remainder).is_zero());
    }

    #[test]
    fn certify_rejects_bad_input() {
        let km = LVParams::km();
        assert_eq!(certify(&km, &Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(certify(&km, &poly("x1 + x2")), Err(Error::NotDarboux));
    }

    #[test]
    fn certify_reports_irreducible_remainders() {
        // r = 0, s = t: every a x1 + b x2 is Darboux with cofactor s x3.
        let p = LVParams::from_ints(0, 1, 1);
        match certify(&p, &poly("x1 + 2*x2")).unwrap() {
            Certification::CannotCertify(u) => {
                assert_eq!(u.remainder, poly("x1 + 2*x2"));
                assert_eq!(u.remainder_cofactor, LinForm::from_ints(0, 0, 1));
                assert_eq!(u.cofactor, LinForm::from_ints(0, 0, 1));
            }
            other => panic!("expected CannotCertify, got {other:?}"),
        }
    }

    #[test]
    fn casimir_examples() {
        let big = |v: [i64; 3]| v.map(BigInt::from);
        assert_eq!(casimir_exponents(&LVParams::km()), Some(big([1, 0, 1])));
        assert_eq!(casimir_exponents(&LVParams::periodic_km()), Some(big([1, 1, 1])));
        let st = LVParams::from_ints(5, 1, 1);
        let e = casimir_exponents(&st).unwrap();
        assert_eq!(e, big([1, -1, 5]));
        assert!(casimir_conditions_hold(&st, &e));
        assert_eq!(casimir_exponents(&LVParams::from_ints(0, 0, 0)), None);
        let p = LVParams::new(rat(-2, 3), rat(1, 2), rat(-4, 5));
        // (t, -s, r) = (-4/5, -1/2, -2/3) ~ (24, 15, 20)
        assert_eq!(casimir_exponents(&p), Some(big([24, 15, 20])));
    }

    #[test]
    fn casimir_bracket_residuals_vanish() {
        for p in [LVParams::km(), LVParams::periodic_km(), LVParams::from_ints(5, 1, 1)] {
            let e = casimir_exponents(&p).unwrap();
            assert!(casimir_bracket_residuals(&p, &e).unwrap().iter().all(Poly::is_zero));
        }
        let wrong = [BigInt::from(1), BigInt::from(1), BigInt::from(1)];
        let residuals = casimir_bracket_residuals(&LVParams::km(), &wrong).unwrap();
        assert!(residuals.iter().any(|r| !r.is_zero()));
    }

    #[test]
    fn classify_examples() {
        let km = classify_params(&LVParams::km(), 3);
        assert!(km.condition_i && !km.condition_ii && km.s_zero);
        for m in 1..6 {
            let periodic = classify_params(&LVParams::periodic_km(), m);
            assert!(periodic.condition_ii && !periodic.condition_i);
            assert_eq!(periodic.remark2_case, Remark2Case::OppositeSigns);
        }
        let st = classify_params(&LVParams::from_ints(5, 1, 1), 3);
        assert!(st.s_eq_t && !st.condition_ii && st.coincidence_condition);
        assert_eq!(st.remark2_case, Remark2Case::NotApplicable);
        assert_eq!(st.q1, Some(int(5)));
    }

    #[test]
    fn classify_ratio_cases() {
        let p = LVParams::from_ints(1, 1, 5);
        assert_eq!(classify_params(&p, 4).remark2_case, Remark2Case::RatioOutOfRange);
        assert_eq!(classify_params(&p, 5).remark2_case, Remark2Case::NotApplicable);
        // r = 1, t = -2: 2 r = -(1 t) once m >= 2.
        let q = LVParams::from_ints(1, -1, -2);
        assert!(!classify_params(&q, 1).condition_i);
        assert!(!multiples_intersect(1, &int(1), &int(2)));
        assert!(multiples_intersect(2, &int(1), &int(2)));
        // r/s = -2 is resonant at degree 2 for the coincidence case.
        assert!(classify_params(&LVParams::new(int(-1), rat(1, 2), rat(1, 2)), 1).coincidence_condition);
        assert!(!classify_params(&LVParams::new(int(-1), rat(1, 2), rat(1, 2)), 2).coincidence_condition);
    }

    #[test]
    fn hypotheses_examples() {
        let km = LVParams::km();
        assert!(hypotheses::x2_divides(&km, 2, &LinForm::from_ints(0, 0, 1)));
        assert!(!hypotheses::x2_divides(&km, 2, &LinForm::from_ints(0, 1, 0)));
        let st = LVParams::from_ints(5, 1, 1);
        assert!(!hypotheses::x2_divides(&st, 2, &LinForm::from_ints(0, 0, 2)));
        assert!(hypotheses::x2_divides(&st, 1, &LinForm::from_ints(0, 0, 2)));
        // A zero alpha always fails the agreement hypothesis at j = 0.
        assert!(!hypotheses::alpha_beta_index_agreement(&st, 2, &LinForm::from_ints(0, 3, 1)));
        assert!(!hypotheses::coincidence_index_conditions(&st, 1, &LinForm::from_ints(0, 0, 1)));
    }
}
