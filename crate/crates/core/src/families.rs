//! Derived families: prescribed-symmetry polynomials, symmetric and
//! antisymmetric specializations, Hall-Littlewood, Schur, and homogenization.

use std::collections::BTreeSet;

use crate::coeff::QtRat;
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::generator::{Family, Generator};
use crate::ops;
use crate::poly::MPoly;

/// Output of a prescribed-symmetry computation: the normalization read off
/// the raw group sum, and the monic polynomial labelled by eta_star.
#[derive(Debug, Clone)]
pub struct PrescribedResult {
    pub normalization: QtRat,
    pub poly: MPoly,
    pub eta_star: Composition,
}

/// The rearrangement of eta that is weakly decreasing across every
/// symmetrized block and strictly decreasing across every antisymmetrized
/// block. Strictness failing means the symmetrization annihilates E_eta.
fn eta_star(
    eta: &Composition,
    sym: &BTreeSet<usize>,
    anti: &BTreeSet<usize>,
) -> Result<Composition> {
    let mut parts = eta.parts().to_vec();
    let all: BTreeSet<usize> = sym.union(anti).copied().collect();
    let mut run: Vec<usize> = Vec::new();
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &k in &all {
        if run.last().map_or(false, |&prev| k == prev + 1) {
            run.push(k);
        } else {
            if !run.is_empty() {
                runs.push(std::mem::take(&mut run));
            }
            run.push(k);
        }
    }
    if !run.is_empty() {
        runs.push(run);
    }
    for run in runs {
        // generators a..=b cover positions a..=b+1 (1-based)
        let lo = run[0] - 1;
        let hi = *run.last().unwrap() + 1;
        let mut vals: Vec<u32> = parts[lo..hi].to_vec();
        vals.sort_unstable_by(|a, b| b.cmp(a));
        let strict = run.iter().all(|k| anti.contains(k));
        if strict && vals.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::VanishingSymmetrization);
        }
        parts[lo..hi].copy_from_slice(&vals);
    }
    Composition::new(parts)
}

/// Applies O_{I,J} (or its interpolation analogue) to the generated
/// polynomial and normalizes so the coefficient of z^{eta_star} is 1.
pub fn prescribed(
    gen: &Generator,
    eta: &Composition,
    sym: &BTreeSet<usize>,
    anti: &BTreeSet<usize>,
    family: Family,
) -> Result<PrescribedResult> {
    let base = gen.generate(eta, family)?;
    let summed = match family {
        Family::Nonsymmetric => ops::o_ij(&base, sym, anti)?,
        Family::Interpolation => ops::o_ij_star(&base, sym, anti)?,
    };
    let star = eta_star(eta, sym, anti)?;
    let normalization = summed.coeff_of_comp(&star);
    if normalization.is_zero() {
        return Err(Error::VanishingSymmetrization);
    }
    Ok(PrescribedResult {
        poly: summed.scale(&normalization.inv()?),
        normalization,
        eta_star: star,
    })
}

fn full_sym_sets(n: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    ((1..n).collect(), BTreeSet::new())
}

fn full_anti_sets(n: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (BTreeSet::new(), (1..n).collect())
}

fn require_partition(kappa: &Composition) -> Result<()> {
    if !kappa.is_partition() {
        return Err(Error::NotAPartition(kappa.to_string()));
    }
    Ok(())
}

fn require_strict_partition(kappa: &Composition) -> Result<()> {
    if !kappa.is_strict_partition() {
        return Err(Error::NotAPartition(format!(
            "{} (strictly decreasing parts required)",
            kappa
        )));
    }
    Ok(())
}

/// Symmetric Macdonald polynomial P_kappa(z;q,t).
pub fn sym_mac(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    require_partition(kappa)?;
    let (sym, anti) = full_sym_sets(kappa.len());
    Ok(prescribed(gen, kappa, &sym, &anti, Family::Nonsymmetric)?.poly)
}

/// Antisymmetric Macdonald polynomial S_kappa(z;q,t); kappa must be strict.
pub fn asym_mac(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    require_strict_partition(kappa)?;
    let (sym, anti) = full_anti_sets(kappa.len());
    Ok(prescribed(gen, kappa, &sym, &anti, Family::Nonsymmetric)?.poly)
}

/// Symmetric interpolation Macdonald polynomial P*_kappa(z;q,t).
pub fn sym_int_mac(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    require_partition(kappa)?;
    let (sym, anti) = full_sym_sets(kappa.len());
    Ok(prescribed(gen, kappa, &sym, &anti, Family::Interpolation)?.poly)
}

/// Antisymmetric interpolation Macdonald polynomial S*_kappa(z;q,t).
pub fn asym_int_mac(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    require_strict_partition(kappa)?;
    let (sym, anti) = full_anti_sets(kappa.len());
    Ok(prescribed(gen, kappa, &sym, &anti, Family::Interpolation)?.poly)
}

/// Hall-Littlewood polynomial P_kappa(z;t): the q = 0 specialization.
pub fn hall_littlewood(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    let p = sym_mac(gen, kappa)?;
    p.map_coeffs(|c| c.substitute(&QtRat::zero(), &QtRat::t()))
}

/// Schur polynomial s_kappa(z): the t = q specialization, whose coefficients
/// must come out parameter-free.
pub fn schur(gen: &Generator, kappa: &Composition) -> Result<MPoly> {
    let p = sym_mac(gen, kappa)?;
    p.map_coeffs(|c| {
        let s = c.substitute(&QtRat::q(), &QtRat::q())?;
        let constant = s.num().deg_q() == 0
            && s.num().deg_t() == 0
            && s.den().deg_q() == 0
            && s.den().deg_t() == 0;
        if !constant {
            return Err(Error::ConventionViolation(format!(
                "Schur specialization left parameters in {}",
                s.render()
            )));
        }
        Ok(s)
    })
}

/// Top-degree part of the interpolation polynomial with parameters inverted
/// coefficient-wise; equals the nonsymmetric polynomial E_eta(z;q,t).
pub fn homogenize_to_e(gen: &Generator, eta: &Composition) -> Result<MPoly> {
    let star = gen.interpolation(eta)?;
    Ok(star.top_homogeneous()?.invert_params())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen() -> Generator {
        Generator::new()
    }

    fn r(s: &str) -> QtRat {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn z(i: usize, n: usize) -> MPoly {
        MPoly::var(i, n).unwrap()
    }

    /// z_i - t z_j
    fn dt_factor(i: usize, j: usize, n: usize) -> MPoly {
        z(i, n).sub(&z(j, n).scale(&QtRat::t())).unwrap()
    }

    #[test]
    fn sym_int_mac_1_0() {
        // (t(z1+z2) - t - 1)/t
        let expect = z(1, 2)
            .add(&z(2, 2))
            .unwrap()
            .add(&MPoly::constant(r("-(t + 1)/t"), 2))
            .unwrap();
        assert_eq!(sym_int_mac(&gen(), &c("1,0")).unwrap(), expect);
    }

    #[test]
    fn asym_int_mac_2_0() {
        // (z1 - t z2)(t(z1+z2) - q t - 1)/t
        let f2 = z(1, 2)
            .add(&z(2, 2))
            .unwrap()
            .scale(&QtRat::t())
            .add(&MPoly::constant(r("-(q*t + 1)"), 2))
            .unwrap();
        let expect = dt_factor(1, 2, 2)
            .mul(&f2)
            .unwrap()
            .scale(&r("1/t"));
        assert_eq!(asym_int_mac(&gen(), &c("2,0")).unwrap(), expect);
    }

    #[test]
    fn sym_int_mac_1_1() {
        // (t z1 - 1)(t z2 - 1)/t^2
        let f = |i| z(i, 2).scale(&QtRat::t()).add(&MPoly::constant(r("-1"), 2)).unwrap();
        let expect = f(1).mul(&f(2)).unwrap().scale(&r("1/t^2"));
        assert_eq!(sym_int_mac(&gen(), &c("1,1")).unwrap(), expect);
    }

    #[test]
    fn asym_int_mac_2_1() {
        // (z1 - t z2)(t z1 - 1)(t z2 - 1)/t^2
        let f = |i| z(i, 2).scale(&QtRat::t()).add(&MPoly::constant(r("-1"), 2)).unwrap();
        let expect = dt_factor(1, 2, 2)
            .mul(&f(1))
            .unwrap()
            .mul(&f(2))
            .unwrap()
            .scale(&r("1/t^2"));
        assert_eq!(asym_int_mac(&gen(), &c("2,1")).unwrap(), expect);
    }

    #[test]
    fn sym_int_mac_1_0_0() {
        // (t^2(z1+z2+z3) - t^2 - t - 1)/t^2
        let expect = z(1, 3)
            .add(&z(2, 3))
            .unwrap()
            .add(&z(3, 3))
            .unwrap()
            .add(&MPoly::constant(r("-(t^2 + t + 1)/t^2"), 3))
            .unwrap();
        assert_eq!(sym_int_mac(&gen(), &c("1,0,0")).unwrap(), expect);
    }

    #[test]
    fn asym_int_mac_3_1_0() {
        // (z1-t z2)(z1-t z3)(z2-t z3)(t^2(z1+z2+z3) - q t (q t + 1) - 1)/t^2
        let sum = z(1, 3).add(&z(2, 3)).unwrap().add(&z(3, 3)).unwrap();
        let last = sum
            .scale(&r("t^2"))
            .add(&MPoly::constant(r("-(q*t*(q*t + 1) + 1)"), 3))
            .unwrap();
        let expect = dt_factor(1, 2, 3)
            .mul(&dt_factor(1, 3, 3))
            .unwrap()
            .mul(&dt_factor(2, 3, 3))
            .unwrap()
            .mul(&last)
            .unwrap()
            .scale(&r("1/t^2"));
        assert_eq!(asym_int_mac(&gen(), &c("3,1,0")).unwrap(), expect);
    }

    #[test]
    fn sym_mac_of_single_box() {
        let expect = z(1, 2).add(&z(2, 2)).unwrap();
        assert_eq!(sym_mac(&gen(), &c("1,0")).unwrap(), expect);
    }

    #[test]
    fn schur_examples() {
        let g = gen();
        let expect = MPoly::monomial(&c("2,1"))
            .add(&MPoly::monomial(&c("1,2")))
            .unwrap();
        assert_eq!(schur(&g, &c("2,1")).unwrap(), expect);
        let expect = z(1, 3).add(&z(2, 3)).unwrap().add(&z(3, 3)).unwrap();
        assert_eq!(schur(&g, &c("1,0,0")).unwrap(), expect);
    }

    #[test]
    fn hall_littlewood_example() {
        // P_(2)(z;t) in two variables: z1^2 + z2^2 + (1-t) z1 z2
        let expect = MPoly::monomial(&c("2,0"))
            .add(&MPoly::monomial(&c("0,2")))
            .unwrap()
            .add(&MPoly::monomial(&c("1,1")).scale(&r("1 - t")))
            .unwrap();
        assert_eq!(hall_littlewood(&gen(), &c("2,0")).unwrap(), expect);
    }

    #[test]
    fn antisymmetrizing_equal_parts_vanishes() {
        assert!(matches!(
            asym_mac(&gen(), &c("1,1")),
            Err(Error::NotAPartition(_))
        ));
        // directly through prescribed: the group sum itself is zero
        let (sym, anti) = full_anti_sets(2);
        assert!(matches!(
            prescribed(&gen(), &c("1,1"), &sym, &anti, Family::Nonsymmetric),
            Err(Error::VanishingSymmetrization)
        ));
    }

    #[test]
    fn rearrangement_independence() {
        let g = gen();
        let (sym, anti) = full_sym_sets(2);
        let a = prescribed(&g, &c("1,0"), &sym, &anti, Family::Nonsymmetric).unwrap();
        let b = prescribed(&g, &c("0,1"), &sym, &anti, Family::Nonsymmetric).unwrap();
        assert_eq!(a.poly, b.poly);
        assert_eq!(a.eta_star, b.eta_star);
    }

    #[test]
    fn vandermonde_relation_sample() {
        // S_{kappa+delta}(z;q,t) = Delta_t(z) P_kappa(z;q,q t) for kappa = (1,0)
        let g = gen();
        let kappa = c("1,0");
        let shifted = kappa.add(&Composition::staircase(2)).unwrap();
        let lhs = asym_mac(&g, &shifted).unwrap();
        let qt = QtRat::q().mul(&QtRat::t());
        let p_qqt = sym_mac(&g, &kappa)
            .unwrap()
            .map_coeffs(|c| c.substitute(&QtRat::q(), &qt))
            .unwrap();
        let rhs = crate::poly::t_vandermonde(2).mul(&p_qqt).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogenization_golden_cases() {
        let g = gen();
        for eta in ["1,0", "1,1", "0,1"] {
            let eta = c(eta);
            assert_eq!(
                homogenize_to_e(&g, &eta).unwrap(),
                g.nonsymmetric(&eta).unwrap(),
                "homogenization mismatch for {}",
                eta
            );
        }
    }

    #[test]
    fn mixed_prescribed_blocks() {
        // n = 4, symmetrize {1}, antisymmetrize {3}: blocks {1,2} and {3,4}
        let g = gen();
        let sym: BTreeSet<usize> = [1].into_iter().collect();
        let anti: BTreeSet<usize> = [3].into_iter().collect();
        let res = prescribed(&g, &c("0,1,0,2"), &sym, &anti, Family::Nonsymmetric).unwrap();
        assert_eq!(res.eta_star, c("1,0,2,0"));
        assert!(res.poly.coeff_of_comp(&res.eta_star).is_one());
        // swapping within the symmetric block leaves it invariant
        assert_eq!(res.poly.swap_vars(1).unwrap(), res.poly);
        // the antisymmetric block divides by z3 - z4/t
        let factor = z(3, 4)
            .sub(&z(4, 4).scale(&QtRat::monomial(0, -1)))
            .unwrap();
        assert!(res.poly.exact_divide(&factor).is_ok());
    }
}
