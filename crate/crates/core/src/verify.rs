//! Invariant suites behind the `verify` command: Hecke relations, action
//! formulas, interpolation vanishing, homogenization, symmetrization, and
//! Pieri reconstruction. Each suite reports a check count and the first few
//! failures in a machine-readable form.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{QtPoly, QtRat};
use crate::compositions::{compositions_of, partitions_of, Composition};
use crate::error::Result;
use crate::families;
use crate::generator::{Family, GenState, Generator};
use crate::ops;
use crate::pieri;
use crate::poly::{elementary_e, t_vandermonde, MPoly};

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_modulus: u32,
    pub max_vars: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_modulus: 3,
            max_vars: 3,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(what());
        } else if !ok {
            self.failures.truncate(8);
        }
    }

    fn check_result(&mut self, res: Result<bool>, what: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.check(false, || format!("{} ({})", what(), e)),
        }
    }
}

/// Runs all six suites in their canonical order.
pub fn run_all(gen: &Generator, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    vec![
        hecke_relations(cfg),
        action_formulas(gen, cfg),
        vanishing(gen, cfg),
        homogenisation(gen, cfg),
        symmetrization(gen, cfg),
        pieri_reconstruction(gen, cfg),
    ]
}

// ---------------------------------------------------------------------------
// Suite 1: Hecke algebra relations on random polynomials
// ---------------------------------------------------------------------------

fn random_rat(rng: &mut ChaCha8Rng) -> QtRat {
    let mut num = QtPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        num = num.add(&QtPoly::monomial(
            c.into(),
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
        ));
    }
    if num.is_zero() {
        num = QtPoly::one();
    }
    let den = match rng.gen_range(0..4) {
        0 => QtPoly::var_t(),
        1 => QtPoly::var_q(),
        _ => QtPoly::one(),
    };
    QtRat::new(num, den).expect("nonzero denominator")
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> MPoly {
    let terms = rng.gen_range(2..=5);
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let mut left = max_degree;
        for slot in e.iter_mut() {
            let v = rng.gen_range(0..=left.min(2));
            *slot = v;
            left -= v;
        }
        out.push((e, random_rat(rng)));
    }
    MPoly::from_terms(n, out).expect("lengths match")
}

pub fn hecke_relations(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("hecke-relations");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let t = QtRat::t();
    let samples = 50usize;
    for _ in 0..samples {
        let n = rng.gen_range(2..=cfg.max_vars.max(2).min(4));
        let f = random_poly(&mut rng, n, 4);
        for (label, op) in [("T", ops::t_i as OpFn), ("H", ops::h_i as OpFn)] {
            // quadratic: (X + 1)(X - t) = 0
            for i in 1..n {
                let res = (|| -> Result<bool> {
                    let xf = op(&f, i)?;
                    let xxf = op(&xf, i)?;
                    let lhs = xxf
                        .add(&xf)?
                        .sub(&xf.scale(&t))?
                        .sub(&f.scale(&t))?;
                    Ok(lhs.is_zero())
                })();
                report.check_result(res, || format!("quadratic {}_{} on n={}", label, i, n));
            }
            // braid
            for i in 1..n.saturating_sub(1) {
                let res = (|| -> Result<bool> {
                    let lhs = op(&op(&op(&f, i)?, i + 1)?, i)?;
                    let rhs = op(&op(&op(&f, i + 1)?, i)?, i + 1)?;
                    Ok(lhs == rhs)
                })();
                report.check_result(res, || format!("braid {}_{} on n={}", label, i, n));
            }
            // commutation for |i-j| > 1
            for i in 1..n {
                for j in i + 2..n {
                    let res = (|| -> Result<bool> {
                        Ok(op(&op(&f, i)?, j)? == op(&op(&f, j)?, i)?)
                    })();
                    report
                        .check_result(res, || format!("commute {}_{},{} on n={}", label, i, j, n));
                }
            }
        }
        // inverse
        for i in 1..n {
            let res = (|| -> Result<bool> { Ok(ops::t_i_inv(&ops::t_i(&f, i)?, i)? == f) })();
            report.check_result(res, || format!("T inverse at {} on n={}", i, n));
        }
    }
    report
}

type OpFn = fn(&MPoly, usize) -> Result<MPoly>;

// ---------------------------------------------------------------------------
// Suite 2: action formulas, forward and inverted, plus raising scalars
// ---------------------------------------------------------------------------

/// Forward check of the switching action on one composition and index.
fn switch_action_matches(
    e_eta: &MPoly,
    e_switched: &MPoly,
    eta: &Composition,
    i: usize,
    family: Family,
) -> Result<bool> {
    let one = QtRat::one();
    let t = QtRat::t();
    let a = eta.part(i);
    let b = eta.part(i + 1);
    let applied = match family {
        Family::Nonsymmetric => ops::t_i(e_eta, i)?,
        Family::Interpolation => ops::h_i(e_eta, i)?,
    };
    if a == b {
        return Ok(applied == e_eta.scale(&t));
    }
    let delta = eta.delta_stat(i)?;
    let c = t.sub(&one).div(&one.sub(&delta.inv()?))?;
    let coupling = if a < b {
        match family {
            Family::Nonsymmetric => t.clone(),
            Family::Interpolation => one.clone(),
        }
    } else {
        let dsq = one.sub(&delta).mul(&one.sub(&delta));
        match family {
            Family::Nonsymmetric => one
                .sub(&t.mul(&delta))
                .mul(&one.sub(&delta.div(&t)?))
                .div(&dsq)?,
            Family::Interpolation => {
                one.sub(&t.mul(&delta)).mul(&t.sub(&delta)).div(&dsq)?
            }
        }
    };
    let rhs = e_eta.scale(&c).add(&e_switched.scale(&coupling))?;
    Ok(applied == rhs)
}

pub fn action_formulas(gen: &Generator, cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("action-formulas");
    for n in 2..=cfg.max_vars {
        for modulus in 0..=cfg.max_modulus {
            for eta in compositions_of(modulus, n) {
                for family in [Family::Nonsymmetric, Family::Interpolation] {
                    let label = family.token();
                    for i in 1..n {
                        let res = (|| -> Result<bool> {
                            let e_eta = gen.generate(&eta, family)?;
                            let switched = eta.switch(i)?;
                            let e_sw = gen.generate(&switched, family)?;
                            Ok(switch_action_matches(&e_eta, &e_sw, &eta, i, family)?
                                && inverse_direction_holds(gen, &eta, i, family)?)
                        })();
                        report.check_result(res, || {
                            format!("{} action at i={} for eta={}", label, i, eta)
                        });
                    }
                    // raising action with its exact scalar
                    let res = raising_scalar_matches(gen, &eta, family);
                    report.check_result(res, || format!("{} raise for eta={}", label, eta));
                }
            }
        }
    }
    report
}

/// The generator's inverted formulas must reproduce the switched polynomial.
fn inverse_direction_holds(
    gen: &Generator,
    eta: &Composition,
    i: usize,
    family: Family,
) -> Result<bool> {
    if eta.part(i) == eta.part(i + 1) {
        return Ok(true);
    }
    let state = GenState {
        poly: gen.generate(eta, family)?,
        comp: eta.clone(),
        family,
    };
    let next = state.step(i)?;
    Ok(next.poly == gen.generate(&eta.switch(i)?, family)?)
}

/// Phi_q E_eta = t^{-#{i>1: eta_i <= eta_1}} E_{Phi eta} for the
/// nonsymmetric family; Phi_q^* E*_eta = q^{-eta_1} E*_{Phi eta}.
fn raising_scalar_matches(gen: &Generator, eta: &Composition, family: Family) -> Result<bool> {
    let e_eta = gen.generate(eta, family)?;
    let e_raised = gen.generate(&eta.raise(), family)?;
    match family {
        Family::Nonsymmetric => {
            let s = eta
                .parts()
                .iter()
                .skip(1)
                .filter(|&&x| x <= eta.part(1))
                .count();
            let scalar = QtRat::monomial(0, -(s as i64));
            Ok(ops::phi_q(&e_eta)? == e_raised.scale(&scalar))
        }
        Family::Interpolation => {
            let scalar = QtRat::monomial(-(eta.part(1) as i64), 0);
            Ok(ops::phi_q_star(&e_eta)? == e_raised.scale(&scalar))
        }
    }
}

// ---------------------------------------------------------------------------
// Suite 3: vanishing of interpolation polynomials at spectral vectors
// ---------------------------------------------------------------------------

pub fn vanishing(gen: &Generator, cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("vanishing");
    for n in 1..=cfg.max_vars {
        for modulus in 0..=cfg.max_modulus {
            for eta in compositions_of(modulus, n) {
                let res = (|| -> Result<bool> {
                    let star = gen.interpolation(&eta)?;
                    Ok(!star.evaluate(&eta.spectral_vector())?.is_zero())
                })();
                report.check_result(res, || format!("nonvanishing at eta={}", eta));
                for lower in 0..=modulus {
                    for lambda in compositions_of(lower, n) {
                        if lambda == eta {
                            continue;
                        }
                        let res = (|| -> Result<bool> {
                            let star = gen.interpolation(&eta)?;
                            Ok(star.evaluate(&lambda.spectral_vector())?.is_zero())
                        })();
                        report.check_result(res, || {
                            format!("vanishing of E*_{} at {}", eta, lambda)
                        });
                    }
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Suite 4: homogenization with inverted parameters
// ---------------------------------------------------------------------------

pub fn homogenisation(gen: &Generator, cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("homogenisation");
    for n in 1..=cfg.max_vars {
        for modulus in 0..=cfg.max_modulus {
            for eta in compositions_of(modulus, n) {
                let res = (|| -> Result<bool> {
                    Ok(families::homogenize_to_e(gen, &eta)? == gen.nonsymmetric(&eta)?)
                })();
                report.check_result(res, || format!("homogenization of {}", eta));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Suite 5: symmetrization properties
// ---------------------------------------------------------------------------

pub fn symmetrization(gen: &Generator, cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("symmetrization");
    let qt = QtRat::q().mul(&QtRat::t());
    for n in 2..=cfg.max_vars {
        for modulus in 0..=cfg.max_modulus {
            for kappa in partitions_of(modulus, n) {
                // full symmetrization is swap-invariant
                let res = (|| -> Result<bool> {
                    let p = families::sym_mac(gen, &kappa)?;
                    for i in 1..n {
                        if p.swap_vars(i)? != p {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })();
                report.check_result(res, || format!("symmetry of P_{}", kappa));

                // antisymmetric side: S_{kappa+delta} = Delta_t * P_kappa(q, qt)
                let res = (|| -> Result<bool> {
                    let shifted = kappa.add(&Composition::staircase(n))?;
                    let lhs = families::asym_mac(gen, &shifted)?;
                    let p_qqt = families::sym_mac(gen, &kappa)?
                        .map_coeffs(|c| c.substitute(&QtRat::q(), &qt))?;
                    let rhs = t_vandermonde(n).mul(&p_qqt)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                    // and the literal divisibility check
                    lhs.exact_divide(&t_vandermonde(n))?;
                    Ok(true)
                })();
                report.check_result(res, || format!("t-Vandermonde relation at {}", kappa));

                // normalized output is independent of the rearrangement
                let res = (|| -> Result<bool> {
                    let reversed = kappa.reversed();
                    Ok(families::sym_mac(gen, &kappa)?
                        == sym_of_any(gen, &reversed)?)
                })();
                report.check_result(res, || format!("rearrangement independence at {}", kappa));
            }
        }
    }
    report
}

/// Full symmetrization of an arbitrary composition (not necessarily sorted).
fn sym_of_any(gen: &Generator, eta: &Composition) -> Result<MPoly> {
    let sym: std::collections::BTreeSet<usize> = (1..eta.len()).collect();
    let anti = std::collections::BTreeSet::new();
    Ok(families::prescribed(gen, eta, &sym, &anti, Family::Nonsymmetric)?.poly)
}

// ---------------------------------------------------------------------------
// Suite 6: Pieri reconstruction
// ---------------------------------------------------------------------------

pub fn pieri_reconstruction(gen: &Generator, cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("pieri-reconstruction");
    for n in 1..=cfg.max_vars {
        for modulus in 0..=cfg.max_modulus {
            for eta in compositions_of(modulus, n) {
                for r in 1..=n {
                    let res = (|| -> Result<bool> {
                        let row = pieri::pieri_row(gen, &eta, r)?;
                        for (lambda, _) in row.entries() {
                            if lambda.modulus() != eta.modulus() + r as u32 {
                                return Ok(false);
                            }
                        }
                        let product =
                            elementary_e(r, n)?.mul(&gen.generate_inverted(&eta)?)?;
                        Ok(row.reconstruct(gen, n)? == product)
                    })();
                    report.check_result(res, || {
                        format!("reconstruction for eta={}, r={}", eta, r)
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_scope() {
        let gen = Generator::new();
        let cfg = VerifyConfig {
            max_modulus: 2,
            max_vars: 2,
            seed: 7,
        };
        for report in run_all(&gen, &cfg) {
            assert!(
                report.passed(),
                "suite {} failed: {:?}",
                report.name,
                report.failures
            );
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn trivial_scope_passes() {
        let gen = Generator::new();
        let cfg = VerifyConfig {
            max_modulus: 0,
            max_vars: 1,
            seed: 1,
        };
        for report in run_all(&gen, &cfg) {
            assert!(report.passed());
        }
    }

    #[test]
    fn injected_fault_is_detected() {
        // Feed the forward action check a deliberately wrong polynomial.
        let gen = Generator::new();
        let eta: Composition = "1,0".parse().unwrap();
        let e_eta = gen.nonsymmetric(&eta).unwrap();
        let e_sw = gen.nonsymmetric(&eta.switch(1).unwrap()).unwrap();
        assert!(
            switch_action_matches(&e_eta, &e_sw, &eta, 1, Family::Nonsymmetric).unwrap()
        );
        let tampered = e_eta.scale(&QtRat::t());
        assert!(
            !switch_action_matches(&tampered, &e_sw, &eta, 1, Family::Nonsymmetric).unwrap()
        );
        // and a tampered raising scalar
        let bad = e_sw.add(&MPoly::one(2)).unwrap();
        assert!(
            !switch_action_matches(&e_eta, &bad, &eta, 1, Family::Nonsymmetric).unwrap()
        );
    }

    #[test]
    fn failure_reporting_is_bounded() {
        let mut report = SuiteReport::new("synthetic");
        for i in 0..50 {
            report.check(false, || format!("failure {}", i));
        }
        assert!(!report.passed());
        assert_eq!(report.checks, 50);
        assert!(report.failures.len() <= 8);
    }
}
