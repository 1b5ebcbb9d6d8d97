//! Integer polynomials in the two parameters q and t.
//!
//! These are the numerators and denominators of coefficients in Q(q,t).
//! Negative powers of q and t are never stored here; they only arise
//! through fractions, which keeps gcd computations in an ordinary
//! polynomial ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in Z[q,t], stored sparsely as (q-power, t-power) -> coefficient.
///
/// Invariants: no zero coefficients are stored; the zero polynomial has an
/// empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Graded-lexicographic comparison with q > t: total degree first, then q-power.
pub fn glex_cmp(a: (u32, u32), b: (u32, u32)) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QtPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        QtPoly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        QtPoly::constant(BigInt::from(c))
    }

    /// c * q^a * t^b
    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        QtPoly { terms }
    }

    pub fn var_q() -> Self {
        QtPoly::monomial(BigInt::one(), 1, 0)
    }

    pub fn var_t() -> Self {
        QtPoly::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = QtPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Single-term polynomials: returns (exponents, coefficient).
    pub fn as_monomial(&self) -> Option<((u32, u32), &BigInt)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((*k, c))
        } else {
            None
        }
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn min_deg_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }

    pub fn min_deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).min().unwrap_or(0)
    }

    /// Leading term key under graded-lex with q > t.
    pub fn leading_key(&self) -> Option<(u32, u32)> {
        self.terms.keys().copied().max_by(|a, b| glex_cmp(*a, *b))
    }

    /// Leading coefficient under graded-lex with q > t.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.leading_key().and_then(|k| self.terms.get(&k))
    }

    /// True when the graded-lex leading coefficient is negative.
    pub fn is_negative_led(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_negative())
    }

    pub fn neg(&self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn add(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn mul(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() || other.is_zero() {
            return QtPoly::zero();
        }
        let mut out = QtPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term((ka.0 + kb.0, ka.1 + kb.1), ca * cb);
            }
        }
        out
    }

    /// Multiply by c * q^a * t^b without building a second polynomial.
    pub fn mul_monomial(&self, c: &BigInt, a: u32, b: u32) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| ((k.0 + a, k.1 + b), v * c))
                .collect(),
        }
    }

    pub fn mul_int(&self, c: &BigInt) -> QtPoly {
        self.mul_monomial(c, 0, 0)
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        let mut out = QtPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// gcd of all integer coefficients, non-negative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by d exactly. Panics if not exact (internal use).
    pub fn divexact_int(&self, d: &BigInt) -> QtPoly {
        assert!(!d.is_zero());
        if d.is_one() {
            return self.clone();
        }
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let (qu, re) = c.div_rem(d);
                    debug_assert!(re.is_zero());
                    (*k, qu)
                })
                .collect(),
        }
    }

    /// Divide out q^a * t^b from every term. Panics if some term lacks the factor.
    pub fn shift_down(&self, a: u32, b: u32) -> QtPoly {
        if a == 0 && b == 0 {
            return self.clone();
        }
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| ((k.0 - a, k.1 - b), c.clone()))
                .collect(),
        }
    }

    /// Exact division: self = g * h returns Some(h), otherwise None.
    pub fn try_divexact(&self, g: &QtPoly) -> Option<QtPoly> {
        assert!(!g.is_zero());
        if self.is_zero() {
            return Some(QtPoly::zero());
        }
        if let Some(((a, b), c)) = g.as_monomial() {
            if self.min_deg_q() < a || self.min_deg_t() < b {
                return None;
            }
            let mut terms = BTreeMap::new();
            for (k, v) in &self.terms {
                let (qu, re) = v.div_rem(c);
                if !re.is_zero() {
                    return None;
                }
                terms.insert((k.0 - a, k.1 - b), qu);
            }
            return Some(QtPoly { terms });
        }
        let f = to_nested(self);
        let g_n = to_nested(g);
        let h = nested_divexact(&f, &g_n)?;
        Some(from_nested(h))
    }

    /// Greatest common divisor in Z[q,t] (including integer content), normalized
    /// to a positive graded-lex leading coefficient. Primitive PRS over Z[t][q].
    pub fn gcd(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        // Common monomial factor first: it is cheap and very frequent.
        let a = self.min_deg_q().min(other.min_deg_q());
        let b = self.min_deg_t().min(other.min_deg_t());
        let f = self.shift_down(self.min_deg_q(), self.min_deg_t());
        let g = other.shift_down(other.min_deg_q(), other.min_deg_t());

        if let Some((_, cf)) = f.as_monomial() {
            let c = cf.gcd(&g.content());
            return QtPoly::monomial(c, a, b);
        }
        if let Some((_, cg)) = g.as_monomial() {
            let c = cg.gcd(&f.content());
            return QtPoly::monomial(c, a, b);
        }

        let fe = to_nested(&f);
        let ge = to_nested(&g);
        let gg = nested_gcd(&fe, &ge);
        from_nested(gg)
            .mul_monomial(&BigInt::one(), a, b)
            .normalize_sign()
    }

    /// Flip the sign so the graded-lex leading coefficient is positive.
    pub fn normalize_sign(&self) -> QtPoly {
        if self.is_negative_led() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// p(1/q, 1/t) * q^a * t^b, defined when a >= deg_q and b >= deg_t.
    pub fn reversed(&self, a: u32, b: u32) -> QtPoly {
        debug_assert!(a >= self.deg_q() && b >= self.deg_t());
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| ((a - k.0, b - k.1), c.clone()))
                .collect(),
        }
    }

    /// Terms in descending graded-lex order (q > t).
    pub fn sorted_terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by(|x, y| glex_cmp(y.0, x.0));
        v
    }

    /// Canonical string form, e.g. "q*t - q + t - 1".
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (key, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&render_term(&mag, key));
        }
        out
    }
}

fn render_term(mag: &BigInt, (a, b): (u32, u32)) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !mag.is_one() || (a == 0 && b == 0) {
        parts.push(mag.to_string());
    }
    if a == 1 {
        parts.push("q".to_string());
    } else if a > 1 {
        parts.push(format!("q^{}", a));
    }
    if b == 1 {
        parts.push("t".to_string());
    } else if b > 1 {
        parts.push(format!("t^{}", b));
    }
    parts.join("*")
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------
// Dense nested representation used by gcd and exact division: a polynomial in
// q whose coefficients are dense polynomials in t.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in t; empty vector = zero, no trailing zeros.
type TPoly = Vec<BigInt>;

fn tp_trim(mut p: TPoly) -> TPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn tp_is_zero(p: &TPoly) -> bool {
    p.is_empty()
}

fn tp_neg(p: &TPoly) -> TPoly {
    p.iter().map(|c| -c).collect()
}

fn tp_sub(a: &TPoly, b: &TPoly) -> TPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    tp_trim(out)
}

fn tp_mul(a: &TPoly, b: &TPoly) -> TPoly {
    if tp_is_zero(a) || tp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    tp_trim(out)
}

fn tp_mul_int(a: &TPoly, c: &BigInt) -> TPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn tp_content(a: &TPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn tp_divexact_int(a: &TPoly, d: &BigInt) -> TPoly {
    a.iter()
        .map(|c| {
            let (qu, re) = c.div_rem(d);
            debug_assert!(re.is_zero());
            qu
        })
        .collect()
}

/// Primitive part with positive leading coefficient.
fn tp_primitive(a: &TPoly) -> TPoly {
    if tp_is_zero(a) {
        return Vec::new();
    }
    let mut c = tp_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    tp_divexact_int(a, &c)
}

/// Pseudo-remainder of a by b in t (b nonzero).
fn tp_pseudo_rem(a: &TPoly, b: &TPoly) -> TPoly {
    let db = b.len() - 1;
    let lcb = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while !tp_is_zero(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(tp_mul_int(b, &lr));
        r = tp_sub(&tp_mul_int(&r, &lcb), &shifted);
        e -= 1;
        if tp_is_zero(&r) {
            break;
        }
    }
    for _ in 0..e.max(0) {
        r = tp_mul_int(&r, &lcb);
    }
    r
}

/// gcd in Z[t] including integer content, positive leading coefficient.
fn tp_gcd(a: &TPoly, b: &TPoly) -> TPoly {
    if tp_is_zero(a) {
        return tp_abs(b);
    }
    if tp_is_zero(b) {
        return tp_abs(a);
    }
    let ca = tp_content(a);
    let cb = tp_content(b);
    let c = ca.gcd(&cb);
    let mut f = tp_primitive(a);
    let mut g = tp_primitive(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !tp_is_zero(&g) {
        if g.len() == 1 {
            // A primitive constant is a unit.
            f = vec![BigInt::one()];
            break;
        }
        let r = tp_pseudo_rem(&f, &g);
        f = g;
        g = tp_primitive(&r);
    }
    let f = tp_primitive(&f);
    tp_mul_int(&f, &c)
}

fn tp_abs(a: &TPoly) -> TPoly {
    if a.last().map_or(false, |c| c.is_negative()) {
        tp_neg(a)
    } else {
        a.clone()
    }
}

/// Exact division in Z[t]; None when not divisible.
fn tp_divexact(a: &TPoly, b: &TPoly) -> Option<TPoly> {
    if tp_is_zero(a) {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lcb = b.last().unwrap();
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !tp_is_zero(&r) {
        let dr = r.len() - 1;
        if dr < db {
            return None;
        }
        let (c, re) = r.last().unwrap().div_rem(lcb);
        if !re.is_zero() {
            return None;
        }
        quot[dr - db] = c.clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(tp_mul_int(b, &c));
        r = tp_sub(&r, &shifted);
    }
    Some(tp_trim(quot))
}

/// Dense polynomial in q with Z[t] coefficients; empty = zero, no trailing zeros.
type NestedPoly = Vec<TPoly>;

fn np_trim(mut p: NestedPoly) -> NestedPoly {
    while p.last().map_or(false, tp_is_zero) {
        p.pop();
    }
    p
}

fn to_nested(p: &QtPoly) -> NestedPoly {
    if p.is_zero() {
        return Vec::new();
    }
    let dq = p.deg_q() as usize;
    let mut out: NestedPoly = vec![Vec::new(); dq + 1];
    for (&(a, b), c) in p.terms.iter() {
        let tp = &mut out[a as usize];
        if tp.len() <= b as usize {
            tp.resize(b as usize + 1, BigInt::zero());
        }
        tp[b as usize] += c;
    }
    for tp in out.iter_mut() {
        let trimmed = tp_trim(std::mem::take(tp));
        *tp = trimmed;
    }
    np_trim(out)
}

fn from_nested(p: NestedPoly) -> QtPoly {
    let mut terms = BTreeMap::new();
    for (a, tp) in p.into_iter().enumerate() {
        for (b, c) in tp.into_iter().enumerate() {
            if !c.is_zero() {
                terms.insert((a as u32, b as u32), c);
            }
        }
    }
    QtPoly { terms }
}

fn np_is_zero(p: &NestedPoly) -> bool {
    p.is_empty()
}

fn np_mul_tp(p: &NestedPoly, c: &TPoly) -> NestedPoly {
    if tp_is_zero(c) {
        return Vec::new();
    }
    p.iter().map(|x| tp_mul(x, c)).collect()
}

fn np_sub(a: &NestedPoly, b: &NestedPoly) -> NestedPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Vec::new(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = tp_sub(&out[i], c);
    }
    np_trim(out)
}

/// Content with respect to q: gcd in Z[t] of all coefficients.
fn np_content(p: &NestedPoly) -> TPoly {
    let mut g: TPoly = Vec::new();
    for c in p {
        g = tp_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn np_divexact_tp(p: &NestedPoly, d: &TPoly) -> NestedPoly {
    p.iter()
        .map(|c| tp_divexact(c, d).expect("content division is exact"))
        .collect()
}

/// Primitive w.r.t. q-content, sign fixed so the q-leading coefficient has a
/// positive t-leading coefficient.
fn np_primitive(p: &NestedPoly) -> NestedPoly {
    if np_is_zero(p) {
        return Vec::new();
    }
    let mut c = np_content(p);
    if p.last().unwrap().last().unwrap().is_negative() {
        c = tp_neg(&c);
    }
    np_divexact_tp(p, &c)
}

/// Pseudo-remainder in q of a by b (b nonzero).
fn np_pseudo_rem(a: &NestedPoly, b: &NestedPoly) -> NestedPoly {
    let db = b.len() - 1;
    let lcb = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while !np_is_zero(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut shifted: NestedPoly = vec![Vec::new(); dr - db];
        shifted.extend(np_mul_tp(b, &lr));
        r = np_sub(&np_mul_tp(&r, &lcb), &shifted);
        e -= 1;
        if np_is_zero(&r) {
            break;
        }
    }
    for _ in 0..e.max(0) {
        r = np_mul_tp(&r, &lcb);
    }
    r
}

fn nested_gcd(a: &NestedPoly, b: &NestedPoly) -> NestedPoly {
    let ca = np_content(a);
    let cb = np_content(b);
    let c = tp_gcd(&ca, &cb);
    let mut f = np_primitive(a);
    let mut g = np_primitive(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !np_is_zero(&g) {
        if g.len() == 1 {
            // Primitive of q-degree zero: a unit in the PRS.
            f = vec![vec![BigInt::one()]];
            break;
        }
        let r = np_pseudo_rem(&f, &g);
        f = g;
        g = np_primitive(&r);
    }
    let f = np_primitive(&f);
    np_mul_tp(&f, &c)
}

/// Exact division in Z[t][q]; None when not divisible.
fn nested_divexact(a: &NestedPoly, b: &NestedPoly) -> Option<NestedPoly> {
    if np_is_zero(a) {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lcb = b.last().unwrap();
    let mut r = a.clone();
    let mut quot: NestedPoly = vec![Vec::new(); a.len() - b.len() + 1];
    while !np_is_zero(&r) {
        let dr = r.len() - 1;
        if dr < db {
            return None;
        }
        let c = tp_divexact(r.last().unwrap(), lcb)?;
        quot[dr - db] = c.clone();
        let mut shifted: NestedPoly = vec![Vec::new(); dr - db];
        shifted.extend(np_mul_tp(b, &c));
        r = np_sub(&r, &shifted);
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QtPoly {
        crate::coeff::parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("q*t - 1");
        let b = p("q*t + 1");
        assert_eq!(a.add(&b), p("2*q*t"));
        assert_eq!(a.mul(&b), p("q^2*t^2 - 1"));
        assert_eq!(a.sub(&a), QtPoly::zero());
    }

    #[test]
    fn gcd_with_common_factor() {
        // q^2*t - q*t = q*t*(q - 1), q*t^2 - t^2 = t^2*(q - 1)
        let f = p("q^2*t - q*t");
        let g = p("q*t^2 - t^2");
        let d = f.gcd(&g);
        assert_eq!(d, p("q*t - t"));
    }

    #[test]
    fn gcd_of_coprime() {
        let f = p("q*t - q");
        let g = p("q*t - 1");
        assert_eq!(f.gcd(&g), QtPoly::one());
    }

    #[test]
    fn gcd_includes_integer_content() {
        let f = p("2*q + 2");
        let g = p("4*q + 4");
        assert_eq!(f.gcd(&g), p("2*q + 2"));
        assert_eq!(p("6").gcd(&p("4*t")), p("2"));
    }

    #[test]
    fn divexact_roundtrip() {
        let f = p("q^2*t - 1").mul(&p("q + t - 3"));
        let h = f.try_divexact(&p("q + t - 3")).unwrap();
        assert_eq!(h, p("q^2*t - 1"));
        assert!(p("q*t + 1").try_divexact(&p("q - 1")).is_none());
    }

    #[test]
    fn render_ordering() {
        // Descending graded-lex with q > t.
        let f = p("t - 1 + q*t - q");
        assert_eq!(f.render(), "q*t - q + t - 1");
        assert_eq!(QtPoly::zero().render(), "0");
        assert_eq!(p("-5").render(), "-5");
        assert_eq!(p("q^2").render(), "q^2");
    }

    #[test]
    fn reversal() {
        let f = p("q^2*t - 1");
        // f(1/q,1/t) * q^2 * t = t*... = 1*... : (q^2 t)(q^-2 t^-1 - 1) = 1 - q^2*t
        assert_eq!(f.reversed(2, 1), p("1 - q^2*t"));
    }
}
