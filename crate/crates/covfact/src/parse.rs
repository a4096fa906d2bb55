//! Parser for the polynomial text grammar.
//!
//! Terms are joined by `+`/`-`; a term is a `*`-joined product of an
//! optional coefficient (integer or `a/b`) and powers `x<i>^<e>`, `t^<e>`;
//! parenthesised subexpressions may be raised to a power. Whitespace is
//! insignificant. The canonical printer ([`Polynomial`]'s `Display`) emits
//! grevlex-sorted terms that parse back to the same polynomial.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::field::{FieldError, Scalar};
use crate::poly::{Monomial, Polynomial, RingCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub fn parse_polynomial<K: Scalar>(
    text: &str,
    ring: &RingCtx<K>,
) -> Result<Polynomial<K>, ParseError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = parser.expression()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(ParseError::new(parser.pos, "unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a, K: Scalar> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a RingCtx<K>,
}

impl<'a, K: Scalar> Parser<'a, K> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expression(&mut self) -> Result<Polynomial<K>, ParseError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.term()?;
            acc = if negate { &acc - &term } else { &acc + &term };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<K>, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<K>, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.unsigned_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial<K>, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                match self.bump() {
                    Some(b')') => Ok(inner),
                    _ => Err(ParseError::new(self.pos, "expected ')'")),
                }
            }
            Some(b't') => {
                self.pos += 1;
                if matches!(self.bytes.get(self.pos), Some(c) if c.is_ascii_alphanumeric()) {
                    return Err(ParseError::new(self.pos, "unknown variable"));
                }
                Ok(self.power_of_t()?)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let index = self.raw_digits()?;
                let index: usize = index
                    .parse()
                    .map_err(|_| ParseError::new(start, "variable index out of range"))?;
                if index > self.ring.n() {
                    return Err(ParseError::new(
                        start,
                        format!("unknown variable x{index}: ring has x0..x{}", self.ring.n()),
                    ));
                }
                Ok(Polynomial::variable(self.ring, index))
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("unexpected character '{}'", c as char),
            )),
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
        }
    }

    fn power_of_t(&mut self) -> Result<Polynomial<K>, ParseError> {
        // The caller consumed 't'; exponent handling happens in factor().
        Ok(Polynomial::term(
            self.ring,
            Monomial::t_var(self.ring.nvars()),
            self.ring.scalar(1),
        ))
    }

    fn number(&mut self) -> Result<Polynomial<K>, ParseError> {
        let start = self.pos;
        let num: BigInt = self
            .raw_digits()?
            .parse()
            .map_err(|_| ParseError::new(start, "bad integer literal"))?;
        let den: BigInt = if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let dstart = self.pos;
            self.raw_digits()?
                .parse()
                .map_err(|_| ParseError::new(dstart, "bad denominator"))?
        } else {
            BigInt::one()
        };
        let coeff = K::from_ratio(self.ring.field().base(), &num, &den)
            .map_err(|e: FieldError| ParseError::new(start, e.to_string()))?;
        Ok(Polynomial::constant(self.ring, coeff))
    }

    fn raw_digits(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .to_string())
    }

    fn unsigned_int(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.raw_digits()?
            .parse()
            .map_err(|_| ParseError::new(start, "exponent out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, Fp, PrimeField, Rationals};
    use crate::poly::Homogeneity;
    use num_rational::BigRational;

    fn ring_q(n: usize, m: usize) -> RingCtx<BigRational> {
        RingCtx::new(n, m, FieldSpec::new(Rationals::default()))
    }

    #[test]
    fn parses_cyclic_equation() {
        let ring = ring_q(3, 2);
        let p = parse_polynomial("t^2 - x0^4 - x1^2*x2^2", &ring).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.weighted_degree(), Homogeneity::Homogeneous(4));
    }

    #[test]
    fn parses_zero() {
        let ring = ring_q(3, 2);
        let p = parse_polynomial("0", &ring).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn expands_binomial_difference() {
        let ring = ring_q(3, 2);
        let p = parse_polynomial("(x0+x1)^2 - x0^2 - 2*x0*x1", &ring).unwrap();
        let expected = parse_polynomial("x1^2", &ring).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn reports_error_positions() {
        let ring = ring_q(3, 2);
        let err = parse_polynomial("x0 + @", &ring).unwrap_err();
        assert_eq!(err.position, 5);

        let err = parse_polynomial("x9", &ring).unwrap_err();
        assert!(err.message.contains("unknown variable"));

        let err = parse_polynomial("x0 + ", &ring).unwrap_err();
        assert!(err.message.contains("end of input"));

        let err = parse_polynomial("(x0+x1", &ring).unwrap_err();
        assert!(err.message.contains("')'"));
    }

    #[test]
    fn rational_coefficients_in_prime_fields() {
        let ring: RingCtx<Fp> =
            RingCtx::new(3, 2, FieldSpec::new(PrimeField::new(10007).unwrap()));
        let p = parse_polynomial("1/2*x0^2", &ring).unwrap();
        let doubled = p.scalar_mul(&ring.scalar(2));
        assert_eq!(doubled, parse_polynomial("x0^2", &ring).unwrap());
    }

    #[test]
    fn print_then_parse_is_identity() {
        let ring = ring_q(3, 2);
        for text in [
            "t^2 - x0^4 - x1^2*x2^2",
            "0",
            "-x0 - x1",
            "3/4*x0*x3 + t",
            "(x0+x1+x2+x3)^3",
        ] {
            let p = parse_polynomial(text, &ring).unwrap();
            let reparsed = parse_polynomial(&p.to_string(), &ring).unwrap();
            assert_eq!(p, reparsed);
        }
    }
}
