//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x1' | 'x2' | 'x3' | '(' expr ')'
//! ```
//!
//! `^` binds tightest, then unary minus, then `*` and `/`, then `+` and `-`,
//! so `-x1^2 + x3` is `(-(x1^2)) + x3`. Division is only allowed by a
//! non-zero constant, which is how fractions such as `1/2*x3` are written.
//! Decimal literals are rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::{Error, Result};

pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = acc.checked_mul(&rhs)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                if !rhs.is_constant() || rhs.is_zero() {
                    return Err(Error::Parse {
                        offset: at,
                        message: "can only divide by a non-zero constant".into(),
                    });
                }
                let c = rhs.coeff(&crate::poly::Monomial::ONE);
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.integer()?;
            let exp: u32 = exp
                .try_into()
                .ok()
                .filter(|e| *e <= u32::from(u8::MAX))
                .ok_or_else(|| self.error("exponent out of range"))?;
            return base.checked_pow(exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let var = match self.src.get(self.pos) {
                    Some(b'1') => Var::X1,
                    Some(b'2') => Var::X2,
                    Some(b'3') => Var::X3,
                    _ => return Err(self.error("expected x1, x2 or x3")),
                };
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    return Err(self.error("unknown identifier"));
                }
                Ok(Poly::var(var))
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        if matches!(self.src.get(self.pos), Some(b'.' | b'e' | b'E')) {
            return Err(self.error("decimal literals are not accepted; write p/q"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let n: BigInt = digits.parse().expect("validated digits");
        debug_assert!(!digits.is_empty() || n.is_zero());
        Ok(n)
    }
}
