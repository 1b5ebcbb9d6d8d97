//! Recursive-descent parser for coefficient strings.
//!
//! Grammar: integer literals, the symbols `q` and `t`, and the operators
//! `+ - * ^ / ( )`, with `^` restricted to positive integer exponents.

use num_bigint::BigInt;

use super::poly::QtPoly;
use super::rat::QtRat;
use crate::error::{Error, Result};

pub fn parse_rat(input: &str) -> Result<QtRat> {
    let mut p = Parser {
        chars: input.char_indices().collect(),
        pos: 0,
        input,
    };
    let v = p.expression()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses a string that must denote a polynomial (denominator 1).
pub fn parse_poly(input: &str) -> Result<QtPoly> {
    let v = parse_rat(input)?;
    if !v.den().is_one() {
        return Err(Error::Parse {
            pos: input.len(),
            msg: "expected a polynomial, found a fraction".to_string(),
        });
    }
    Ok(v.num().clone())
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        let pos = self
            .chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.input.len());
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .map_or(false, |(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).map(|(_, c)| *c);
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expression(&mut self) -> Result<QtRat> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QtRat> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                '*' => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                '/' => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs).map_err(|_| self.err("division by zero"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QtRat> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.nat()?;
            if e == 0 {
                return Err(self.err("exponent must be a positive integer"));
            }
            return base.pow(e as i64).map_err(|_| self.err("invalid power"));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<QtRat> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let v = self.expression()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some('q') => {
                self.bump();
                Ok(QtRat::q())
            }
            Some('t') => {
                self.bump();
                Ok(QtRat::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(QtRat::from_poly(QtPoly::constant(n)))
            }
            Some(_) => Err(self.err("expected a number, 'q', 't' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected an integer exponent"));
        }
        digits.parse().map_err(|_| self.err("exponent too large"))
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(*c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_zero() {
        assert_eq!(parse_rat("0").unwrap(), QtRat::zero());
    }

    #[test]
    fn parse_canonical_fraction() {
        let v = parse_rat("(q*t - q + t - 1)/(q^2*t - 1)").unwrap();
        assert_eq!(v.render(), "(q*t - q + t - 1)/(q^2*t - 1)");
    }

    #[test]
    fn parse_is_field_evaluation() {
        let a = parse_rat("(q + 1)*(t - 1)/(q^2*t - 1)").unwrap();
        let b = parse_rat("(q*t - q + t - 1)/(q^2*t - 1)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_reports_position() {
        match parse_rat("q + %") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(parse_rat("q^0").is_err());
        assert!(parse_rat("q +").is_err());
        assert!(parse_rat("(q").is_err());
        assert!(parse_rat("1/(q - q)").is_err());
    }

    #[test]
    fn unary_minus() {
        assert_eq!(parse_rat("-q").unwrap(), QtRat::q().neg());
        assert_eq!(parse_rat("-q^2").unwrap().render(), "-q^2");
        assert_eq!(parse_rat("3 - -2").unwrap(), QtRat::from_int(5));
    }
}
