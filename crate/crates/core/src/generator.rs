//! Recursive generation of the two base families along planner words.
//!
//! A generation step either raises (letter 0) or switches (letter i >= 1).
//! Switching inverts the Hecke action formulas, picking the case from the
//! comparison of the two affected parts; raising applies Phi_q or Phi_q^*
//! and rescales so the result stays monic at the new composition. The monic
//! coefficient is asserted at every step: a violation means a formula-case
//! bug, not bad input.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::coeff::QtRat;
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::ops;
use crate::poly::MPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Nonsymmetric,
    Interpolation,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::Nonsymmetric => "ns",
            Family::Interpolation => "interp",
        }
    }
}

/// One point of a generation walk: the polynomial labelled by `comp`.
#[derive(Debug, Clone)]
pub struct GenState {
    pub poly: MPoly,
    pub comp: Composition,
    pub family: Family,
}

impl GenState {
    /// The walk origin: the constant 1 at the all-zero composition.
    pub fn initial(n: usize, family: Family) -> GenState {
        GenState {
            poly: MPoly::one(n),
            comp: Composition::zeros(n),
            family,
        }
    }

    /// Shortcut origin for the homogeneous family: (z_1...z_n)^k at (k,...,k).
    pub fn initial_scaled(k: u32, n: usize) -> GenState {
        let parts = vec![k; n];
        let comp = Composition::new(parts).expect("n >= 1");
        GenState {
            poly: MPoly::monomial(&comp),
            comp,
            family: Family::Nonsymmetric,
        }
    }

    /// Apply one word letter and return the next state.
    pub fn step(&self, letter: usize) -> Result<GenState> {
        if letter == 0 {
            self.step_raise()
        } else {
            self.step_switch(letter)
        }
    }

    fn step_raise(&self) -> Result<GenState> {
        let new_comp = self.comp.raise();
        let poly = match self.family {
            Family::Nonsymmetric => {
                let raised = ops::phi_q(&self.poly)?;
                // Phi_q E = t^{-s} E' for some integer s; fix the power of t
                // by reading off the coefficient that must become 1.
                let lead = raised.coeff_of_comp(&new_comp);
                if !lead.is_unit_monomial(true) {
                    return Err(Error::ConventionViolation(format!(
                        "raising scalar for {} is not a power of t: {}",
                        self.comp,
                        lead.render()
                    )));
                }
                raised.scale(&lead.inv()?)
            }
            Family::Interpolation => {
                let raised = ops::phi_q_star(&self.poly)?;
                let scalar = QtRat::monomial(self.comp.part(1) as i64, 0);
                raised.scale(&scalar)
            }
        };
        let state = GenState {
            poly,
            comp: new_comp,
            family: self.family,
        };
        state.assert_monic()?;
        Ok(state)
    }

    fn step_switch(&self, i: usize) -> Result<GenState> {
        let a = self.comp.part(i);
        let b = self.comp.part(i + 1);
        if a == b {
            return Err(Error::PlannerBug(format!(
                "switch {} on equal parts of {}",
                i, self.comp
            )));
        }
        let one = QtRat::one();
        let t = QtRat::t();
        let delta = self.comp.delta_stat(i)?;
        // c = (t - 1) / (1 - delta^{-1})
        let c = t
            .sub(&one)
            .div(&one.sub(&delta.inv()?))?;
        let applied = match self.family {
            Family::Nonsymmetric => ops::t_i(&self.poly, i)?,
            Family::Interpolation => ops::h_i(&self.poly, i)?,
        };
        let base = applied.sub(&self.poly.scale(&c))?;
        let poly = if a < b {
            match self.family {
                // E_{s_i eta} = t^{-1} (T_i E - c E)
                Family::Nonsymmetric => base.scale(&t.inv()?),
                // E*_{s_i eta} = H_i E* - c E*
                Family::Interpolation => base,
            }
        } else {
            // (1 - delta)^2 over the family-specific pair of factors
            let num = one.sub(&delta).mul(&one.sub(&delta));
            let den = match self.family {
                Family::Nonsymmetric => one
                    .sub(&t.mul(&delta))
                    .mul(&one.sub(&delta.div(&t)?)),
                Family::Interpolation => one.sub(&t.mul(&delta)).mul(&t.sub(&delta)),
            };
            base.scale(&num.div(&den)?)
        };
        let state = GenState {
            poly,
            comp: self.comp.switch(i)?,
            family: self.family,
        };
        state.assert_monic()?;
        Ok(state)
    }

    fn assert_monic(&self) -> Result<()> {
        if self.poly.coeff_of_comp(&self.comp).is_one() {
            Ok(())
        } else {
            Err(Error::ConventionViolation(format!(
                "polynomial for {} is not monic at its leading monomial",
                self.comp
            )))
        }
    }
}

type MemoKey = (Family, Vec<u32>, bool);

/// Polynomial factory with an in-memory memo and an optional on-disk cache.
///
/// Every intermediate composition visited during a walk is itself a finished
/// polynomial, so all of them are memoized; later generations resume from the
/// longest already-known prefix of their plan.
pub struct Generator {
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<MemoKey, MPoly>>,
}

impl Default for Generator {
    fn default() -> Self {
        Self::new()
    }
}

static WRITE_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Generator {
    pub fn new() -> Generator {
        Generator {
            cache_dir: None,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Uses `dir` as a persistent cache of final polynomials. The cache is
    /// advisory: read or write failures never fail a computation.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Generator {
        Generator {
            cache_dir: Some(dir.into()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Cache directory from the MPOLY_CACHE_DIR environment variable.
    pub fn from_env() -> Generator {
        match std::env::var_os("MPOLY_CACHE_DIR") {
            Some(dir) if !dir.is_empty() => Generator::with_cache_dir(dir),
            _ => Generator::new(),
        }
    }

    pub fn nonsymmetric(&self, eta: &Composition) -> Result<MPoly> {
        self.generate(eta, Family::Nonsymmetric)
    }

    pub fn interpolation(&self, eta: &Composition) -> Result<MPoly> {
        self.generate(eta, Family::Interpolation)
    }

    pub fn generate(&self, eta: &Composition, family: Family) -> Result<MPoly> {
        let key = (family, eta.parts().to_vec(), false);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if let Some(hit) = self.read_disk(family, eta, false) {
            self.memo.lock().unwrap().insert(key, hit.clone());
            return Ok(hit);
        }

        let min = eta.min_part();
        let (plan, mut state) = if family == Family::Nonsymmetric && min >= 1 {
            (
                eta.plan_reduced(),
                GenState::initial_scaled(min, eta.len()),
            )
        } else {
            (eta.plan(), GenState::initial(eta.len(), family))
        };

        // Resume from the longest prefix already memoized.
        let mut start_idx = 0;
        {
            let memo = self.memo.lock().unwrap();
            for (idx, comp) in plan.states.iter().enumerate().rev() {
                if let Some(poly) = memo.get(&(family, comp.parts().to_vec(), false)) {
                    state = GenState {
                        poly: poly.clone(),
                        comp: comp.clone(),
                        family,
                    };
                    start_idx = idx + 1;
                    break;
                }
            }
        }

        for &letter in &plan.word[start_idx..] {
            state = state.step(letter)?;
            self.memo.lock().unwrap().insert(
                (family, state.comp.parts().to_vec(), false),
                state.poly.clone(),
            );
        }

        if state.comp != *eta {
            return Err(Error::PlannerBug(format!(
                "walk for {} ended at {}",
                eta, state.comp
            )));
        }
        self.memo
            .lock()
            .unwrap()
            .insert(key, state.poly.clone());
        self.write_disk(family, eta, false, &state.poly);
        Ok(state.poly)
    }

    /// E_eta with the substitution q -> 1/q, t -> 1/t applied coefficient-wise.
    pub fn generate_inverted(&self, eta: &Composition) -> Result<MPoly> {
        let key = (Family::Nonsymmetric, eta.parts().to_vec(), true);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if let Some(hit) = self.read_disk(Family::Nonsymmetric, eta, true) {
            self.memo.lock().unwrap().insert(key, hit.clone());
            return Ok(hit);
        }
        let poly = self.nonsymmetric(eta)?.invert_params();
        self.memo.lock().unwrap().insert(key, poly.clone());
        self.write_disk(Family::Nonsymmetric, eta, true, &poly);
        Ok(poly)
    }

    fn cache_path(&self, family: Family, eta: &Composition, inverted: bool) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let parts: Vec<String> = eta.parts().iter().map(|p| p.to_string()).collect();
        let suffix = if inverted { ".inv" } else { "" };
        Some(dir.join(format!(
            "{}_{}_{}{}.json",
            family.token(),
            eta.len(),
            parts.join("-"),
            suffix
        )))
    }

    fn read_disk(&self, family: Family, eta: &Composition, inverted: bool) -> Option<MPoly> {
        let path = self.cache_path(family, eta, inverted)?;
        let data = std::fs::read_to_string(path).ok()?;
        serde_json::from_str(&data).ok()
    }

    fn write_disk(&self, family: Family, eta: &Composition, inverted: bool, poly: &MPoly) {
        let Some(path) = self.cache_path(family, eta, inverted) else {
            return;
        };
        let Some(dir) = path.parent() else { return };
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        let Ok(data) = serde_json::to_string(poly) else {
            return;
        };
        // Write-then-rename keeps concurrent writers from clobbering reads.
        let tmp = dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            WRITE_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        if std::fs::write(&tmp, data).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
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

    /// Assembles a polynomial from (coefficient, exponents) pairs.
    fn poly(n: usize, terms: &[(&str, &[u32])]) -> MPoly {
        MPoly::from_terms(
            n,
            terms
                .iter()
                .map(|(coeff, e)| (e.to_vec(), r(coeff))),
        )
        .unwrap()
    }

    fn e_2_1() -> MPoly {
        poly(2, &[("1", &[2, 1]), ("q*(t - 1)/(q*t - 1)", &[1, 2])])
    }

    #[test]
    fn step_switch_reaches_2_1() {
        let state = GenState {
            poly: MPoly::monomial(&c("1,2")),
            comp: c("1,2"),
            family: Family::Nonsymmetric,
        };
        let next = state.step(1).unwrap();
        assert_eq!(next.comp, c("2,1"));
        assert_eq!(next.poly, e_2_1());
    }

    #[test]
    fn step_raise_from_origin() {
        let state = GenState::initial(2, Family::Nonsymmetric);
        let next = state.step(0).unwrap();
        assert_eq!(next.comp, c("0,1"));
        assert_eq!(next.poly, MPoly::monomial(&c("0,1")));

        let state = GenState::initial(2, Family::Interpolation);
        let next = state.step(0).unwrap();
        assert_eq!(next.poly, poly(2, &[("1", &[0, 1]), ("-1/t", &[0, 0])]));
    }

    #[test]
    fn step_on_equal_parts_is_rejected() {
        let state = GenState {
            poly: MPoly::monomial(&c("1,1")),
            comp: c("1,1"),
            family: Family::Nonsymmetric,
        };
        assert!(matches!(state.step(1), Err(Error::PlannerBug(_))));
    }

    #[test]
    fn golden_nonsymmetric_examples() {
        let gen = Generator::new();
        assert_eq!(
            gen.nonsymmetric(&c("0,3")).unwrap(),
            poly(
                2,
                &[
                    ("1", &[0, 3]),
                    ("(t - 1)/(q^2*t - 1)", &[2, 1]),
                    ("(q + 1)*(t - 1)/(q^2*t - 1)", &[1, 2]),
                ]
            )
        );
        assert_eq!(gen.nonsymmetric(&c("2,1")).unwrap(), e_2_1());
        assert_eq!(
            gen.nonsymmetric(&c("1,2")).unwrap(),
            MPoly::monomial(&c("1,2"))
        );
        assert_eq!(
            gen.nonsymmetric(&Composition::zeros(3)).unwrap(),
            MPoly::one(3)
        );
    }

    #[test]
    fn golden_interpolation_examples() {
        let gen = Generator::new();
        assert_eq!(
            gen.interpolation(&c("1,1")).unwrap(),
            poly(
                2,
                &[
                    ("1", &[1, 1]),
                    ("-1/t", &[1, 0]),
                    ("-1/t", &[0, 1]),
                    ("1/t^2", &[0, 0]),
                ]
            )
        );
        assert_eq!(
            gen.interpolation(&c("1,0")).unwrap(),
            poly(
                2,
                &[
                    ("1", &[1, 0]),
                    ("(t - 1)/(q*t - 1)", &[0, 1]),
                    ("-(q*t^2 - 1)/(t*(q*t - 1))", &[0, 0]),
                ]
            )
        );
        assert_eq!(
            gen.interpolation(&c("0,1")).unwrap(),
            poly(2, &[("1", &[0, 1]), ("-1/t", &[0, 0])])
        );
        assert_eq!(
            gen.interpolation(&Composition::zeros(2)).unwrap(),
            MPoly::one(2)
        );
    }

    #[test]
    fn inverted_examples() {
        let gen = Generator::new();
        // E_{(1,2)} has no parameters, so inversion changes nothing.
        assert_eq!(
            gen.generate_inverted(&c("1,2")).unwrap(),
            MPoly::monomial(&c("1,2"))
        );
        let inv = gen.generate_inverted(&c("2,1")).unwrap();
        assert_eq!(inv.coeff_of(&[2, 1]), QtRat::one());
        assert_eq!(
            inv.coeff_of(&[1, 2]),
            r("q*(t - 1)/(q*t - 1)").invert_params()
        );
        // inversion is an involution
        assert_eq!(inv.invert_params(), gen.nonsymmetric(&c("2,1")).unwrap());
    }

    #[test]
    fn shortcut_agrees_with_full_plan() {
        let gen = Generator::new();
        for eta in ["2,1", "1,2", "3,2", "2,2", "1,1,2"] {
            let eta = c(eta);
            let fast = gen.nonsymmetric(&eta).unwrap();
            // replay the unreduced plan by hand
            let mut state = GenState::initial(eta.len(), Family::Nonsymmetric);
            for &letter in &eta.plan().word {
                state = state.step(letter).unwrap();
            }
            assert_eq!(fast, state.poly, "shortcut mismatch for {}", eta);
            // and the factorized form of the shortcut
            let m = eta.min_part();
            if m >= 1 {
                let inner = Composition::new(
                    eta.parts().iter().map(|p| p - m).collect(),
                )
                .unwrap();
                let prefix = MPoly::monomial(
                    &Composition::new(vec![m; eta.len()]).unwrap(),
                );
                let product = prefix.mul(&gen.nonsymmetric(&inner).unwrap()).unwrap();
                assert_eq!(fast, product, "factorization mismatch for {}", eta);
            }
        }
    }

    #[test]
    fn any_valid_word_gives_the_same_polynomial() {
        // (0,2,1) via the planner versus a longer valid word.
        let gen = Generator::new();
        let planned = gen.nonsymmetric(&c("0,2,1")).unwrap();
        let longer = [0, 2, 0, 2, 0, 2, 1, 2, 1];
        let mut state = GenState::initial(3, Family::Nonsymmetric);
        for &letter in &longer {
            state = state.step(letter).unwrap();
        }
        assert_eq!(state.comp, c("0,2,1"));
        assert_eq!(state.poly, planned);
    }

    #[test]
    fn disk_cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let eta = c("2,1");
        let first = {
            let gen = Generator::with_cache_dir(dir.path());
            gen.nonsymmetric(&eta).unwrap()
        };
        let expected_file = dir.path().join("ns_2_2-1.json");
        assert!(expected_file.exists());
        let second = {
            let gen = Generator::with_cache_dir(dir.path());
            gen.nonsymmetric(&eta).unwrap()
        };
        assert_eq!(first, second);
        // corrupt cache entries are ignored, not fatal
        std::fs::write(&expected_file, "not json").unwrap();
        let gen = Generator::with_cache_dir(dir.path());
        assert_eq!(gen.nonsymmetric(&eta).unwrap(), first);
    }

    #[test]
    fn inverted_cache_filename() {
        let dir = tempfile::tempdir().unwrap();
        let gen = Generator::with_cache_dir(dir.path());
        gen.generate_inverted(&c("1,0,1,0")).unwrap();
        assert!(dir.path().join("ns_4_1-0-1-0.inv.json").exists());
    }
}
