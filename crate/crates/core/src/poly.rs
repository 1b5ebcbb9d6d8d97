//! Sparse multivariate polynomials in z_1..z_n over Q(q,t).

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{parse_poly, QtPoly, QtRat};
use crate::compositions::{Composition, Permutation};
use crate::error::{Error, Result};

/// Exponent vectors are plain Vec<u32> of length n.
pub type Exponents = Vec<u32>;

/// Graded-lex comparison of exponent vectors: total degree first, then
/// lexicographic with z_1 most significant.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// A sparse polynomial in z_1..z_n with coefficients in Q(q,t).
///
/// No zero coefficients are stored and every exponent key has length n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Exponents, QtRat>,
}

impl MPoly {
    pub fn zero(n: usize) -> MPoly {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> MPoly {
        MPoly::constant(QtRat::one(), n)
    }

    pub fn constant(c: QtRat, n: usize) -> MPoly {
        let mut p = MPoly::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// The variable z_i (1-based).
    pub fn var(i: usize, n: usize) -> Result<MPoly> {
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut e = vec![0u32; n];
        e[i - 1] = 1;
        let mut p = MPoly::zero(n);
        p.add_term(e, QtRat::one());
        Ok(p)
    }

    /// The monomial z^eta.
    pub fn monomial(eta: &Composition) -> MPoly {
        let mut p = MPoly::zero(eta.len());
        p.add_term(eta.parts().to_vec(), QtRat::one());
        p
    }

    pub fn from_terms(
        n: usize,
        it: impl IntoIterator<Item = (Exponents, QtRat)>,
    ) -> Result<MPoly> {
        let mut p = MPoly::zero(n);
        for (e, c) in it {
            if e.len() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: QtRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &QtRat)> {
        self.terms.iter()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Coefficient of the given exponent vector; zero when absent.
    pub fn coeff_of(&self, e: &[u32]) -> QtRat {
        self.terms.get(e).cloned().unwrap_or_else(QtRat::zero)
    }

    /// Coefficient of z^eta.
    pub fn coeff_of_comp(&self, eta: &Composition) -> QtRat {
        self.coeff_of(eta.parts())
    }

    fn check_n(&self, other: &MPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_n(other)?;
        let mut out = MPoly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QtRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Multiply by the single variable z_i (1-based).
    pub fn mul_var(&self, i: usize) -> Result<MPoly> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n,
            });
        }
        Ok(MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i - 1] += 1;
                    (e, c.clone())
                })
                .collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Result<MPoly> {
        let mut out = MPoly::one(self.n);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Swap the variables z_i and z_{i+1}.
    pub fn swap_vars(&self, i: usize) -> Result<MPoly> {
        if i < 1 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n.saturating_sub(1),
            });
        }
        Ok(MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Permute variables: exponent vectors transform like compositions under
    /// the permutation action, so swap_vars(i) agrees with adjacent(i).
    pub fn permute_vars(&self, omega: &Permutation) -> Result<MPoly> {
        if omega.n() != self.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: omega.n(),
            });
        }
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut new_e = vec![0u32; self.n];
            for (j, &exp) in e.iter().enumerate() {
                new_e[omega.apply(j + 1) - 1] = exp;
            }
            out.add_term(new_e, c.clone());
        }
        Ok(out)
    }

    /// Exact division: returns h with self = g * h, or an error when the
    /// division leaves a remainder.
    pub fn exact_divide(&self, g: &MPoly) -> Result<MPoly> {
        self.check_n(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead_g = g
            .terms
            .keys()
            .max_by(|a, b| grlex_cmp(a, b))
            .expect("nonzero");
        let lead_g_coeff = g.terms.get(lead_g).expect("present").clone();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.n);
        while !rem.is_zero() {
            let lead_r = rem
                .terms
                .keys()
                .max_by(|a, b| grlex_cmp(a, b))
                .expect("nonzero")
                .clone();
            if lead_r.iter().zip(lead_g).any(|(r, g)| r < g) {
                return Err(Error::NonExactDivision);
            }
            let shift: Exponents = lead_r.iter().zip(lead_g).map(|(r, g)| r - g).collect();
            let c = rem
                .terms
                .get(&lead_r)
                .expect("present")
                .div(&lead_g_coeff)?;
            let mut piece = MPoly::zero(self.n);
            piece.add_term(shift, c);
            rem = rem.sub(&piece.mul(g)?)?;
            quot = quot.add(&piece)?;
        }
        Ok(quot)
    }

    /// Exact evaluation at a point of Q(q,t)^n.
    pub fn evaluate(&self, point: &[QtRat]) -> Result<QtRat> {
        if point.len() != self.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: point.len(),
            });
        }
        let mut pows: Vec<Vec<QtRat>> = point.iter().map(|_| vec![QtRat::one()]).collect();
        let mut acc = QtRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                while pows[i].len() <= exp as usize {
                    let next = pows[i].last().unwrap().mul(&point[i]);
                    pows[i].push(next);
                }
                term = term.mul(&pows[i][exp as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The sub-polynomial of terms of maximal total degree.
    pub fn top_homogeneous(&self) -> Result<MPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Apply a fallible map to every coefficient (for parameter substitutions).
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<MPoly>
    where
        F: FnMut(&QtRat) -> Result<QtRat>,
    {
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Coefficient-wise q -> 1/q, t -> 1/t.
    pub fn invert_params(&self) -> MPoly {
        self.map_coeffs(|c| Ok(c.invert_params()))
            .expect("inversion is total")
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &QtRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    /// The graded-lex greatest exponent vector, if any.
    pub fn leading_exponents(&self) -> Option<&Exponents> {
        self.terms.keys().max_by(|a, b| grlex_cmp(a, b))
    }

    /// Plain-text rendering, e.g. "z1^2*z2 + ((q*t - q)/(q*t - 1))*z1*z2^2".
    pub fn render_text(&self) -> String {
        self.render(RenderStyle::Text)
    }

    /// LaTeX rendering with z_i^{e} variables and \frac coefficients.
    pub fn render_latex(&self) -> String {
        self.render(RenderStyle::Latex)
    }

    fn render(&self, style: RenderStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative_led();
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&render_term(&mag, e, style));
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq)]
enum RenderStyle {
    Text,
    Latex,
}

fn render_term(mag: &QtRat, e: &[u32], style: RenderStyle) -> String {
    let z_part = match style {
        RenderStyle::Text => {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        format!("z{}", i + 1)
                    } else {
                        format!("z{}^{}", i + 1, exp)
                    }
                })
                .collect();
            factors.join("*")
        }
        RenderStyle::Latex => {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        format!("z_{{{}}}", i + 1)
                    } else {
                        format!("z_{{{}}}^{{{}}}", i + 1, exp)
                    }
                })
                .collect();
            factors.join(" ")
        }
    };

    if z_part.is_empty() {
        return match style {
            RenderStyle::Text => {
                if mag.den().is_one() && mag.num().num_terms() > 1 {
                    format!("({})", mag.render())
                } else {
                    mag.render()
                }
            }
            RenderStyle::Latex => latex_coeff(mag),
        };
    }
    if mag.is_one() {
        return z_part;
    }
    match style {
        RenderStyle::Text => {
            let coeff_str = mag.render();
            let simple = mag.den().is_one() && mag.num().num_terms() == 1;
            if simple {
                format!("{}*{}", coeff_str, z_part)
            } else {
                format!("({})*{}", coeff_str, z_part)
            }
        }
        RenderStyle::Latex => format!("{} {}", latex_coeff(mag), z_part),
    }
}

fn latex_coeff(mag: &QtRat) -> String {
    let num = latex_poly(mag.num());
    if mag.den().is_one() {
        if mag.num().num_terms() > 1 {
            format!("\\left({}\\right)", num)
        } else {
            num
        }
    } else {
        format!("\\frac{{{}}}{{{}}}", num, latex_poly(mag.den()))
    }
}

fn latex_poly(p: &QtPoly) -> String {
    use num_traits::{One, Signed};
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), coeff)) in p.sorted_terms().into_iter().enumerate() {
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
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || (a == 0 && b == 0) {
            parts.push(mag.to_string());
        }
        if a == 1 {
            parts.push("q".to_string());
        } else if a > 1 {
            parts.push(format!("q^{{{}}}", a));
        }
        if b == 1 {
            parts.push("t".to_string());
        } else if b > 1 {
            parts.push(format!("t^{{{}}}", b));
        }
        out.push_str(&parts.join(" "));
    }
    out
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

// ---------------------------------------------------------------------------
// Classical constructions
// ---------------------------------------------------------------------------

/// Elementary symmetric polynomial e_r in n variables.
pub fn elementary_e(r: usize, n: usize) -> Result<MPoly> {
    if r > n {
        return Err(Error::IndexOutOfRange { index: r, max: n });
    }
    let mut out = MPoly::zero(n);
    // iterate over r-subsets of {0..n-1}
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        let mut e = vec![0u32; n];
        for &i in &subset {
            e[i] = 1;
        }
        out.add_term(e, QtRat::one());
        if r == 0 {
            break;
        }
        // next subset in lexicographic order
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if subset[i] != i + n - r {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Monomial symmetric polynomial m_kappa in n variables: the sum of all
/// distinct rearrangements of kappa.
pub fn monomial_m(kappa: &Composition, n: usize) -> Result<MPoly> {
    if !kappa.is_partition() {
        return Err(Error::NotAPartition(kappa.to_string()));
    }
    let padded = kappa.padded(n)?;
    let mut out = MPoly::zero(n);
    let mut seen = std::collections::BTreeSet::new();
    permute_all(padded.parts().to_vec(), &mut seen);
    for e in seen {
        out.add_term(e, QtRat::one());
    }
    Ok(out)
}

fn permute_all(parts: Vec<u32>, out: &mut std::collections::BTreeSet<Vec<u32>>) {
    let mut sorted = parts;
    sorted.sort_unstable();
    // Heap-style enumeration of distinct permutations of a multiset.
    fn rec(prefix: &mut Vec<u32>, rest: &mut Vec<u32>, out: &mut std::collections::BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            out.insert(prefix.clone());
            return;
        }
        let mut last: Option<u32> = None;
        for i in 0..rest.len() {
            if last == Some(rest[i]) {
                continue;
            }
            last = Some(rest[i]);
            let v = rest.remove(i);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut prefix = Vec::new();
    let mut rest = sorted;
    rec(&mut prefix, &mut rest, out);
}

/// The t-Vandermonde product of (z_i - z_j/t) over all i < j.
pub fn t_vandermonde(n: usize) -> MPoly {
    let mut out = MPoly::one(n);
    let t_inv = QtRat::monomial(0, -1);
    for i in 1..=n {
        for j in i + 1..=n {
            let zi = MPoly::var(i, n).expect("in range");
            let zj = MPoly::var(j, n).expect("in range");
            let factor = zi.sub(&zj.scale(&t_inv)).expect("same n");
            out = out.mul(&factor).expect("same n");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// JSON serialization: list of {"z": [...], "coeff": {"num": "...", "den": "..."}}
// sorted graded-lex descending, wrapped with the variable count.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    z: Vec<u32>,
    coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                z: e.clone(),
                coeff: CoeffJson {
                    num: c.num().render(),
                    den: c.den().render(),
                },
            })
            .collect();
        PolyJson { n: self.n, terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<MPoly, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut out = MPoly::zero(raw.n);
        for term in raw.terms {
            if term.z.len() != raw.n {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let num = parse_poly(&term.coeff.num).map_err(D::Error::custom)?;
            let den = parse_poly(&term.coeff.den).map_err(D::Error::custom)?;
            let c = QtRat::new(num, den).map_err(D::Error::custom)?;
            out.add_term(term.z, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> QtRat {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        let z1z2 = MPoly::monomial(&c("1,1"));
        assert_eq!(z1z2.mul(&z1z2).unwrap(), MPoly::monomial(&c("2,2")));
        let f = MPoly::monomial(&c("2,1"));
        assert!(f.add(&f.neg()).unwrap().is_zero());
        assert!(f.mul(&MPoly::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn variable_count_mismatch() {
        let f = MPoly::one(2);
        let g = MPoly::one(3);
        assert!(f.add(&g).is_err());
    }

    #[test]
    fn coeff_lookup() {
        let f = MPoly::monomial(&c("2,1"))
            .add(&MPoly::monomial(&c("1,2")).scale(&r("(q*t - q)/(q*t - 1)")))
            .unwrap();
        assert_eq!(f.coeff_of(&[2, 1]), QtRat::one());
        assert_eq!(f.coeff_of(&[1, 2]), r("(q*t - q)/(q*t - 1)"));
        assert!(f.coeff_of(&[5, 5]).is_zero());
    }

    #[test]
    fn swap_and_permute() {
        let f = MPoly::monomial(&c("2,1"));
        assert_eq!(f.swap_vars(1).unwrap(), MPoly::monomial(&c("1,2")));
        let sym = MPoly::var(1, 2)
            .unwrap()
            .add(&MPoly::var(2, 2).unwrap())
            .unwrap();
        assert_eq!(sym.swap_vars(1).unwrap(), sym);
        // full reversal of z1^2*z2 in n=3
        let f = MPoly::monomial(&c("2,1,0"));
        let w = Permutation::from_images(vec![3, 2, 1]).unwrap();
        assert_eq!(f.permute_vars(&w).unwrap(), MPoly::monomial(&c("0,1,2")));
    }

    #[test]
    fn exact_division() {
        let z1 = MPoly::var(1, 2).unwrap();
        let z2 = MPoly::var(2, 2).unwrap();
        let d = z1.sub(&z2).unwrap();
        // (z2 - z1) / (z1 - z2) = -1
        let v = z2.sub(&z1).unwrap().exact_divide(&d).unwrap();
        assert_eq!(v, MPoly::one(2).neg());
        // (z1^2 - z2^2) / (z1 - z2) = z1 + z2
        let f = z1.mul(&z1).unwrap().sub(&z2.mul(&z2).unwrap()).unwrap();
        assert_eq!(f.exact_divide(&d).unwrap(), z1.add(&z2).unwrap());
        // z1*z2 is not divisible
        let g = z1.mul(&z2).unwrap();
        assert!(matches!(g.exact_divide(&d), Err(Error::NonExactDivision)));
    }

    #[test]
    fn evaluation() {
        let one = MPoly::one(3);
        let pt = vec![r("q"), r("1/t"), r("q*t - 1")];
        assert_eq!(one.evaluate(&pt).unwrap(), QtRat::one());
        let f = MPoly::var(1, 2)
            .unwrap()
            .mul(&MPoly::var(2, 2).unwrap())
            .unwrap();
        assert_eq!(
            f.evaluate(&[r("q"), r("t")]).unwrap(),
            r("q*t")
        );
    }

    #[test]
    fn top_homogeneous_parts() {
        // z1*z2 - z1/t - z2/t + 1/t^2: top part is z1*z2
        let f = MPoly::monomial(&c("1,1"))
            .add(&MPoly::monomial(&c("1,0")).scale(&r("-1/t")))
            .unwrap()
            .add(&MPoly::monomial(&c("0,1")).scale(&r("-1/t")))
            .unwrap()
            .add(&MPoly::constant(r("1/t^2"), 2))
            .unwrap();
        assert_eq!(f.top_homogeneous().unwrap(), MPoly::monomial(&c("1,1")));
        let h = MPoly::monomial(&c("2,1"));
        assert_eq!(h.top_homogeneous().unwrap(), h);
        assert!(MPoly::zero(2).top_homogeneous().is_err());
    }

    #[test]
    fn constructors() {
        let e2 = elementary_e(2, 3).unwrap();
        let expect = MPoly::monomial(&c("1,1,0"))
            .add(&MPoly::monomial(&c("1,0,1")))
            .unwrap()
            .add(&MPoly::monomial(&c("0,1,1")))
            .unwrap();
        assert_eq!(e2, expect);
        assert_eq!(elementary_e(0, 3).unwrap(), MPoly::one(3));
        assert!(elementary_e(4, 3).is_err());

        let dt = t_vandermonde(2);
        let expect = MPoly::var(1, 2)
            .unwrap()
            .sub(&MPoly::var(2, 2).unwrap().scale(&r("1/t")))
            .unwrap();
        assert_eq!(dt, expect);

        let m21 = monomial_m(&c("2,1"), 2).unwrap();
        let expect = MPoly::monomial(&c("2,1")).add(&MPoly::monomial(&c("1,2"))).unwrap();
        assert_eq!(m21, expect);
        // repeated parts are not double counted
        let m11 = monomial_m(&c("1,1"), 2).unwrap();
        assert_eq!(m11, MPoly::monomial(&c("1,1")));
    }

    #[test]
    fn text_rendering() {
        let f = MPoly::monomial(&c("2,1"))
            .add(&MPoly::monomial(&c("1,2")).scale(&r("q*(t - 1)/(q*t - 1)")))
            .unwrap();
        assert_eq!(
            f.render_text(),
            "z1^2*z2 + ((q*t - q)/(q*t - 1))*z1*z2^2"
        );
        let g = MPoly::monomial(&c("0,1"))
            .add(&MPoly::constant(r("-1/t"), 2))
            .unwrap();
        assert_eq!(g.render_text(), "z2 - 1/t");
        assert_eq!(MPoly::zero(2).render_text(), "0");
        assert_eq!(MPoly::one(1).render_text(), "1");
    }

    #[test]
    fn json_roundtrip() {
        let f = MPoly::monomial(&c("2,1"))
            .add(&MPoly::monomial(&c("1,2")).scale(&r("q*(t - 1)/(q*t - 1)")))
            .unwrap()
            .add(&MPoly::constant(r("-1/t"), 2))
            .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let g: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        // terms come out graded-lex descending
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let first = &v["terms"][0];
        assert_eq!(first["z"], serde_json::json!([2, 1]));
    }

    #[test]
    fn latex_rendering() {
        let f = MPoly::monomial(&c("2,1"))
            .add(&MPoly::monomial(&c("1,2")).scale(&r("q*(t - 1)/(q*t - 1)")))
            .unwrap();
        let s = f.render_latex();
        assert!(s.contains("z_{1}^{2} z_{2}"));
        assert!(s.contains("\\frac{q t - q}{q t - 1}"));
        assert_eq!(s.matches('{').count(), s.matches('}').count());
    }
}
