//! Switching and raising operators acting on polynomials.
//!
//! T_i = t + (t z_i - z_{i+1})/(z_i - z_{i+1}) (s_i - 1) is the
//! Demazure-Lustig realization of the Hecke algebra used by the nonsymmetric
//! family; H_i = t + (z_i - t z_{i+1})/(z_i - z_{i+1}) (s_i - 1) is the
//! interpolation-side realization. Raising is done by
//! Phi_q = z_n T_{n-1}^{-1} ... T_1^{-1} and Phi_q^* = (z_n - t^{1-n}) Delta
//! with (Delta f)(z_1,...,z_n) = f(z_n/q, z_1, ..., z_{n-1}).
//!
//! Operator words act rightmost-first throughout.

use std::collections::BTreeSet;

use crate::coeff::QtRat;
use crate::compositions::{subgroup_elements, Permutation};
use crate::error::{Error, Result};
use crate::poly::MPoly;

fn check_index(f: &MPoly, i: usize) -> Result<()> {
    if i < 1 || i >= f.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: f.n().saturating_sub(1),
        });
    }
    Ok(())
}

/// Common core of T_i and H_i: t*f + exact((a z_i + b z_{i+1}) (s_i f - f) / (z_i - z_{i+1})).
fn switching_op(f: &MPoly, i: usize, weight: &MPoly) -> Result<MPoly> {
    let n = f.n();
    let diff = f.swap_vars(i)?.sub(f)?;
    let zi = MPoly::var(i, n)?;
    let zi1 = MPoly::var(i + 1, n)?;
    let denom = zi.sub(&zi1)?;
    let quotient = weight.mul(&diff)?.exact_divide(&denom)?;
    f.scale(&QtRat::t()).add(&quotient)
}

/// The Demazure-Lustig operator T_i.
pub fn t_i(f: &MPoly, i: usize) -> Result<MPoly> {
    check_index(f, i)?;
    let n = f.n();
    // t z_i - z_{i+1}
    let weight = MPoly::var(i, n)?
        .scale(&QtRat::t())
        .sub(&MPoly::var(i + 1, n)?)?;
    switching_op(f, i, &weight)
}

/// T_i^{-1} = t^{-1} - 1 + t^{-1} T_i.
pub fn t_i_inv(f: &MPoly, i: usize) -> Result<MPoly> {
    let t_inv = QtRat::monomial(0, -1);
    let c = t_inv.sub(&QtRat::one());
    t_i(f, i)?.scale(&t_inv).add(&f.scale(&c))
}

/// The interpolation-side Hecke operator H_i.
pub fn h_i(f: &MPoly, i: usize) -> Result<MPoly> {
    check_index(f, i)?;
    let n = f.n();
    // z_i - t z_{i+1}
    let weight = MPoly::var(i, n)?
        .sub(&MPoly::var(i + 1, n)?.scale(&QtRat::t()))?;
    switching_op(f, i, &weight)
}

/// The q-shift: (Delta f)(z_1,...,z_n) = f(z_n/q, z_1, ..., z_{n-1}).
/// On a monomial this rotates the exponent vector left and multiplies the
/// coefficient by q^{-a_1}.
pub fn delta_shift(f: &MPoly) -> MPoly {
    let n = f.n();
    let mut terms = Vec::with_capacity(f.num_terms());
    for (e, c) in f.terms() {
        let mut rotated: Vec<u32> = e[1..].to_vec();
        rotated.push(e[0]);
        let coeff = c.mul(&QtRat::monomial(-(e[0] as i64), 0));
        terms.push((rotated, coeff));
    }
    MPoly::from_terms(n, terms).expect("rotation preserves length")
}

/// Raising operator for the nonsymmetric family: multiply by z_n after
/// applying T_1^{-1}, T_2^{-1}, ..., T_{n-1}^{-1} in that order.
pub fn phi_q(f: &MPoly) -> Result<MPoly> {
    let n = f.n();
    let mut g = f.clone();
    for i in 1..n {
        g = t_i_inv(&g, i)?;
    }
    g.mul_var(n)
}

/// Raising operator for the interpolation family: (z_n - t^{1-n}) Delta.
pub fn phi_q_star(f: &MPoly) -> Result<MPoly> {
    let n = f.n();
    let shifted = delta_shift(f);
    let factor = MPoly::var(n, n)?.sub(&MPoly::constant(
        QtRat::monomial(0, -(n as i64 - 1)),
        n,
    ))?;
    factor.mul(&shifted)
}

/// Word-indexed product: letters act rightmost-first.
pub fn t_word(f: &MPoly, word: &[usize]) -> Result<MPoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = t_i(&g, i)?;
    }
    Ok(g)
}

pub fn h_word(f: &MPoly, word: &[usize]) -> Result<MPoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = h_i(&g, i)?;
    }
    Ok(g)
}

/// T_omega via a reduced word of omega; any reduced word gives the same
/// operator by the braid relations.
pub fn t_omega(f: &MPoly, omega: &Permutation) -> Result<MPoly> {
    t_word(f, &omega.reduced_word())
}

pub fn h_omega(f: &MPoly, omega: &Permutation) -> Result<MPoly> {
    h_word(f, &omega.reduced_word())
}

fn check_blocks(n: usize, sym: &BTreeSet<usize>, anti: &BTreeSet<usize>) -> Result<()> {
    for &k in sym.iter().chain(anti) {
        if k < 1 || k >= n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: n.saturating_sub(1),
            });
        }
    }
    for &i in sym {
        for &j in anti {
            if i.abs_diff(j) < 2 {
                return Err(Error::BlocksNotSeparated);
            }
        }
    }
    Ok(())
}

/// Prescribed-symmetry operator O_{I,J} = sum over W_{I u J} of
/// (-1/t)^{l(omega_J)} T_omega. The generator sets I and J must be disjoint
/// and separated so W_{I u J} factors as W_I x W_J.
pub fn o_ij(f: &MPoly, sym: &BTreeSet<usize>, anti: &BTreeSet<usize>) -> Result<MPoly> {
    group_sum(f, sym, anti, t_omega)
}

/// Interpolation analogue built from H instead of T.
pub fn o_ij_star(f: &MPoly, sym: &BTreeSet<usize>, anti: &BTreeSet<usize>) -> Result<MPoly> {
    group_sum(f, sym, anti, h_omega)
}

fn group_sum(
    f: &MPoly,
    sym: &BTreeSet<usize>,
    anti: &BTreeSet<usize>,
    apply: fn(&MPoly, &Permutation) -> Result<MPoly>,
) -> Result<MPoly> {
    let n = f.n();
    check_blocks(n, sym, anti)?;
    let neg_t_inv = QtRat::monomial(0, -1).neg();
    // inner antisymmetrized sum, then the symmetrizing sum on top
    let mut inner = MPoly::zero(n);
    for omega in subgroup_elements(n, anti)? {
        let sign = neg_t_inv.pow(omega.length() as i64)?;
        inner = inner.add(&apply(f, &omega)?.scale(&sign))?;
    }
    let mut out = MPoly::zero(n);
    for omega in subgroup_elements(n, sym)? {
        out = out.add(&apply(&inner, &omega)?)?;
    }
    Ok(out)
}
