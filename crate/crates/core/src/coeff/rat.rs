//! The coefficient field Q(q,t): canonical reduced fractions of integer
//! polynomials in q and t.
//!
//! Canonical form: gcd(num, den) = 1 in Z[q,t] (integer contents coprime as
//! well), den is never zero, den has a positive leading coefficient under
//! graded-lex order with q > t, and zero is 0/1. Equality of field elements
//! is plain component-wise equality of canonical forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::QtPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtRat {
    num: QtPoly,
    den: QtPoly,
}

impl QtRat {
    /// Canonical representative of num/den. Errors on a zero denominator.
    pub fn new(num: QtPoly, den: QtPoly) -> Result<QtRat> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QtPoly, den: QtPoly) -> QtRat {
        if num.is_zero() {
            return QtRat {
                num: QtPoly::zero(),
                den: QtPoly::one(),
            };
        }
        if den.is_one() {
            return QtRat { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.try_divexact(&g).expect("gcd divides numerator"),
                den.try_divexact(&g).expect("gcd divides denominator"),
            )
        };
        if den.is_negative_led() {
            num = num.neg();
            den = den.neg();
        }
        QtRat { num, den }
    }

    /// Fraction known to be reduced already; only fixes the denominator sign.
    fn from_reduced(num: QtPoly, den: QtPoly) -> QtRat {
        if num.is_zero() {
            return QtRat::zero();
        }
        if den.is_negative_led() {
            QtRat {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            QtRat { num, den }
        }
    }

    pub fn zero() -> QtRat {
        QtRat {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> QtRat {
        QtRat {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> QtRat {
        QtRat {
            num: QtPoly::from_i64(c),
            den: QtPoly::one(),
        }
    }

    pub fn from_poly(p: QtPoly) -> QtRat {
        QtRat {
            num: p,
            den: QtPoly::one(),
        }
    }

    /// q^a * t^b with arbitrary integer exponents.
    pub fn monomial(a: i64, b: i64) -> QtRat {
        let num = QtPoly::monomial(BigInt::one(), a.max(0) as u32, b.max(0) as u32);
        let den = QtPoly::monomial(BigInt::one(), (-a).max(0) as u32, (-b).max(0) as u32);
        QtRat { num, den }
    }

    pub fn q() -> QtRat {
        QtRat::from_poly(QtPoly::var_q())
    }

    pub fn t() -> QtRat {
        QtRat::from_poly(QtPoly::var_t())
    }

    pub fn num(&self) -> &QtPoly {
        &self.num
    }

    pub fn den(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the numerator's graded-lex leading coefficient is negative;
    /// used by renderers to pull the sign out front.
    pub fn is_negative_led(&self) -> bool {
        self.num.is_negative_led()
    }

    /// When the value is c * q^a * t^b, returns (c, a, b).
    pub fn as_monomial(&self) -> Option<(BigInt, i64, i64)> {
        let (kn, cn) = self.num.as_monomial()?;
        let (kd, cd) = self.den.as_monomial()?;
        if !cd.is_one() {
            return None;
        }
        Some((
            cn.clone(),
            kn.0 as i64 - kd.0 as i64,
            kn.1 as i64 - kd.1 as i64,
        ))
    }

    /// True for +q^a * t^b with a and b possibly negative and b == exponent
    /// restrictions given by `pure_t`: when pure_t is set, requires a == 0.
    pub fn is_unit_monomial(&self, pure_t: bool) -> bool {
        match self.as_monomial() {
            Some((c, a, _)) => c.is_one() && (!pure_t || a == 0),
            None => false,
        }
    }

    pub fn neg(&self) -> QtRat {
        QtRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &QtRat) -> QtRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            return Self::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // With coprime denominators only integer content can remain.
            let c = num.content().gcd_with(&den.content());
            return QtRat::from_reduced(num.divexact_int(&c), den.divexact_int(&c));
        }
        let db = self.den.try_divexact(&g).expect("gcd divides");
        let dd = other.den.try_divexact(&g).expect("gcd divides");
        let num = self.num.mul(&dd).add(&other.num.mul(&db));
        let den = self.den.mul(&dd);
        Self::reduce(num, den)
    }

    pub fn sub(&self, other: &QtRat) -> QtRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QtRat) -> QtRat {
        if self.is_zero() || other.is_zero() {
            return QtRat::zero();
        }
        // Cross-cancel so the product of reduced inputs is already reduced.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.try_divexact(&g1).expect("gcd divides");
        let d2 = other.den.try_divexact(&g1).expect("gcd divides");
        let n2 = other.num.try_divexact(&g2).expect("gcd divides");
        let d1 = self.den.try_divexact(&g2).expect("gcd divides");
        QtRat::from_reduced(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, other: &QtRat) -> Result<QtRat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&QtRat::from_reduced(
            other.den.clone(),
            other.num.clone(),
        )))
    }

    pub fn inv(&self) -> Result<QtRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QtRat::from_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<QtRat> {
        if e == 0 {
            return Ok(QtRat::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = QtRat::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// General substitution q -> q_val, t -> t_val within the field.
    /// Errors when the denominator specializes to zero.
    pub fn substitute(&self, q_val: &QtRat, t_val: &QtRat) -> Result<QtRat> {
        let den = eval_poly(&self.den, q_val, t_val);
        if den.is_zero() {
            return Err(Error::SingularSpecialization);
        }
        let num = eval_poly(&self.num, q_val, t_val);
        num.div(&den)
    }

    /// The substitution q -> 1/q, t -> 1/t, computed by clearing negative
    /// powers with a common monomial. Always defined on canonical values.
    pub fn invert_params(&self) -> QtRat {
        if self.is_zero() {
            return QtRat::zero();
        }
        let a = self.num.deg_q().max(self.den.deg_q());
        let b = self.num.deg_t().max(self.den.deg_t());
        Self::reduce(self.num.reversed(a, b), self.den.reversed(a, b))
    }

    /// Canonical string form with one top-level `/` when the denominator is
    /// not 1, e.g. "(q*t - q + t - 1)/(q^2*t - 1)".
    pub fn render(&self) -> String {
        let num_str = self.num.render();
        if self.den.is_one() {
            return num_str;
        }
        let num_wrapped = if self.num.num_terms() > 1 {
            format!("({})", num_str)
        } else {
            num_str
        };
        let den_str = self.den.render();
        let den_wrapped = if needs_parens_as_den(&self.den) {
            format!("({})", den_str)
        } else {
            den_str
        };
        format!("{}/{}", num_wrapped, den_wrapped)
    }
}

/// A denominator can stand bare after `/` only when it is a single power of
/// one symbol with unit coefficient, like "t" or "q^2".
fn needs_parens_as_den(p: &QtPoly) -> bool {
    match p.as_monomial() {
        Some(((a, b), c)) => !c.is_one() || (a > 0 && b > 0),
        None => true,
    }
}

fn eval_poly(p: &QtPoly, q_val: &QtRat, t_val: &QtRat) -> QtRat {
    let mut acc = QtRat::zero();
    let mut q_pows: Vec<QtRat> = vec![QtRat::one()];
    let mut t_pows: Vec<QtRat> = vec![QtRat::one()];
    for (&(a, b), c) in p.terms() {
        while q_pows.len() <= a as usize {
            let next = q_pows.last().unwrap().mul(q_val);
            q_pows.push(next);
        }
        while t_pows.len() <= b as usize {
            let next = t_pows.last().unwrap().mul(t_val);
            t_pows.push(next);
        }
        let term = q_pows[a as usize]
            .mul(&t_pows[b as usize])
            .mul(&QtRat::from_poly(QtPoly::constant(c.clone())));
        acc = acc.add(&term);
    }
    acc
}

trait GcdWith {
    fn gcd_with(&self, other: &Self) -> Self;
}

impl GcdWith for BigInt {
    fn gcd_with(&self, other: &Self) -> Self {
        use num_integer::Integer;
        let g = self.gcd(other);
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }
}

impl fmt::Display for QtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::str::FromStr for QtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<QtRat> {
        super::parse::parse_rat(s)
    }
}
