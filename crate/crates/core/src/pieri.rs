//! Pieri-type expansion: coefficients of e_r(z) E_eta(z;1/q,1/t) in the
//! inverted-parameter basis {E_lambda(z;1/q,1/t) : |lambda| = |eta| + r}.

use std::collections::BTreeMap;

use crate::coeff::QtRat;
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::poly::{elementary_e, MPoly};

/// An expansion in the inverted-parameter basis: composition -> coefficient.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionTable {
    entries: BTreeMap<Composition, QtRat>,
}

impl ExpansionTable {
    pub fn coeff(&self, lambda: &Composition) -> QtRat {
        self.entries
            .get(lambda)
            .cloned()
            .unwrap_or_else(QtRat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Composition, &QtRat)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rebuilds sum of coeff * E_lambda(z;1/q,1/t); used by the
    /// reconstruction checks.
    pub fn reconstruct(&self, gen: &Generator, n: usize) -> Result<MPoly> {
        let mut acc = MPoly::zero(n);
        for (lambda, coeff) in &self.entries {
            let basis = gen.generate_inverted(lambda)?;
            acc = acc.add(&basis.scale(coeff))?;
        }
        Ok(acc)
    }
}

/// Total order compatible with the triangular structure of the basis: degree,
/// then the partition rearrangement lexicographically, then the composition
/// itself lexicographically. Every E_lambda has z^lambda as its unique
/// greatest monomial in this order, which makes greedy peeling terminate.
fn triangular_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let deg = |v: &[u32]| v.iter().sum::<u32>();
    let sorted = |v: &[u32]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|x, y| y.cmp(x));
        s
    };
    deg(a)
        .cmp(&deg(b))
        .then_with(|| sorted(a).cmp(&sorted(b)))
        .then_with(|| a.cmp(b))
}

/// Expands a homogeneous polynomial of degree d in the inverted-parameter
/// basis by peeling the greatest remaining monomial.
pub fn expand_in_e_basis(gen: &Generator, f: &MPoly, degree: u32) -> Result<ExpansionTable> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if let Some(d) = f.degree() {
        if d != degree {
            return Err(Error::ModulusMismatch {
                expected: degree,
                got: d,
            });
        }
    }
    let mut entries = BTreeMap::new();
    let mut rem = f.clone();
    // Peeling strictly lowers the greatest monomial, so the number of
    // monomials of the given degree bounds the iteration count.
    let mut budget = count_monomials(degree, rem.n());
    while !rem.is_zero() {
        if budget == 0 {
            return Err(Error::PeelingFailed);
        }
        budget -= 1;
        let lead = rem
            .terms()
            .map(|(e, _)| e.clone())
            .max_by(|a, b| triangular_cmp(a, b))
            .expect("nonzero");
        let lambda = Composition::new(lead.clone())?;
        let coeff = rem.coeff_of(&lead);
        let basis = gen.generate_inverted(&lambda)?;
        rem = rem.sub(&basis.scale(&coeff))?;
        entries.insert(lambda, coeff);
    }
    Ok(ExpansionTable { entries })
}

fn count_monomials(degree: u32, n: usize) -> u64 {
    // binomial(degree + n - 1, n - 1)
    let mut acc: u64 = 1;
    for i in 1..n as u64 {
        acc = acc * (degree as u64 + i) / i;
    }
    acc
}

/// All Pieri coefficients A^{(r)}_{eta,lambda} for fixed eta and r.
pub fn pieri_row(gen: &Generator, eta: &Composition, r: usize) -> Result<ExpansionTable> {
    let n = eta.len();
    if r < 1 || r > n {
        return Err(Error::IndexOutOfRange { index: r, max: n });
    }
    let e_r = elementary_e(r, n)?;
    let base = gen.generate_inverted(eta)?;
    let product = e_r.mul(&base)?;
    expand_in_e_basis(gen, &product, eta.modulus() + r as u32)
}

/// A single Pieri coefficient; lambda must satisfy |lambda| = |eta| + r.
pub fn pieri_coeff(
    gen: &Generator,
    eta: &Composition,
    lambda: &Composition,
    r: usize,
) -> Result<QtRat> {
    if lambda.modulus() != eta.modulus() + r as u32 {
        return Err(Error::ModulusMismatch {
            expected: eta.modulus() + r as u32,
            got: lambda.modulus(),
        });
    }
    if lambda.len() != eta.len() {
        return Err(Error::VariableCountMismatch {
            left: eta.len(),
            right: lambda.len(),
        });
    }
    Ok(pieri_row(gen, eta, r)?.coeff(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> QtRat {
        s.parse().unwrap()
    }

    #[test]
    fn basis_element_expands_to_itself() {
        let gen = Generator::new();
        let f = gen.generate_inverted(&c("1,2")).unwrap();
        let table = expand_in_e_basis(&gen, &f, 3).unwrap();
        assert_eq!(table.len(), 1);
        assert!(table.coeff(&c("1,2")).is_one());
    }

    #[test]
    fn zero_expands_to_empty() {
        let gen = Generator::new();
        let table = expand_in_e_basis(&gen, &MPoly::zero(2), 3).unwrap();
        assert!(table.is_empty());
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let gen = Generator::new();
        let f = MPoly::one(2)
            .add(&MPoly::var(1, 2).unwrap())
            .unwrap();
        assert!(matches!(
            expand_in_e_basis(&gen, &f, 1),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn full_degree_expansion_reconstructs() {
        // A mixed-degree-3 input over two variables.
        let gen = Generator::new();
        let f = MPoly::monomial(&c("3,0"))
            .add(&MPoly::monomial(&c("1,2")).scale(&r("q/(t - 2)")))
            .unwrap()
            .add(&MPoly::monomial(&c("0,3")).scale(&r("t")))
            .unwrap();
        let table = expand_in_e_basis(&gen, &f, 3).unwrap();
        assert_eq!(table.reconstruct(&gen, 2).unwrap(), f);
    }

    #[test]
    fn pieri_identity_entry() {
        let gen = Generator::new();
        let a = pieri_coeff(&gen, &c("1,0,1,0"), &c("2,0,2,0"), 2).unwrap();
        assert!(a.is_one());
    }

    #[test]
    fn modulus_mismatch_is_rejected() {
        let gen = Generator::new();
        assert!(matches!(
            pieri_coeff(&gen, &c("1,2"), &c("9,9"), 1),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn row_support_has_correct_modulus() {
        let gen = Generator::new();
        let row = pieri_row(&gen, &c("1,0"), 1).unwrap();
        assert!(!row.is_empty());
        for (lambda, coeff) in row.entries() {
            assert_eq!(lambda.modulus(), 2);
            assert!(!coeff.is_zero());
        }
        // r out of range
        assert!(pieri_row(&gen, &c("1,0"), 3).is_err());
    }
}
