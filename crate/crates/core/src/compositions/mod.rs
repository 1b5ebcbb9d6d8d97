//! Compositions, their statistics, permutations, and the minimal-length
//! operator-word planner.

mod perm;
mod plan;

pub use perm::{subgroup_elements, Permutation};
pub use plan::GenerationPlan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::QtRat;
use crate::error::{Error, Result};

/// An n-tuple of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition(
                "a composition needs at least one part".to_string(),
            ));
        }
        Ok(Composition { parts })
    }

    pub fn zeros(n: usize) -> Composition {
        Composition {
            parts: vec![0; n],
        }
    }

    /// The staircase (n-1, n-2, ..., 1, 0).
    pub fn staircase(n: usize) -> Composition {
        Composition {
            parts: (0..n).rev().map(|i| i as u32).collect(),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-based component access.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    /// The modulus |eta|: the sum of all parts.
    pub fn modulus(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn min_part(&self) -> u32 {
        self.parts.iter().copied().min().unwrap_or(0)
    }

    /// The partition rearrangement: parts sorted non-increasing.
    pub fn sorted(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    /// The reversal (eta_n, ..., eta_1).
    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strict_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Component-wise sum; lengths must match.
    pub fn add(&self, other: &Composition) -> Result<Composition> {
        if self.len() != other.len() {
            return Err(Error::VariableCountMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Composition {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Pads with zeros on the right up to length n.
    pub fn padded(&self, n: usize) -> Result<Composition> {
        if n < self.len() {
            return Err(Error::InvalidComposition(format!(
                "cannot shrink a length-{} composition to {} parts",
                self.len(),
                n
            )));
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(Composition { parts })
    }

    /// The switching operator s_i: exchanges parts i and i+1 (1-based).
    pub fn switch(&self, i: usize) -> Result<Composition> {
        if i < 1 || i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len().saturating_sub(1),
            });
        }
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Ok(Composition { parts })
    }

    /// The raising operator: (eta_1, ..., eta_n) -> (eta_2, ..., eta_n, eta_1 + 1).
    pub fn raise(&self) -> Composition {
        let mut parts: Vec<u32> = self.parts[1..].to_vec();
        parts.push(self.parts[0] + 1);
        Composition { parts }
    }

    /// Co-leg length l'_eta(i) = #{j<i: eta_j >= eta_i} + #{j>i: eta_j > eta_i}.
    pub fn coleg(&self, i: usize) -> Result<u32> {
        if i < 1 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len(),
            });
        }
        let v = self.parts[i - 1];
        let before = self.parts[..i - 1].iter().filter(|&&x| x >= v).count();
        let after = self.parts[i..].iter().filter(|&&x| x > v).count();
        Ok((before + after) as u32)
    }

    /// The spectral-vector entry q^{eta_i} t^{-l'_eta(i)}.
    pub fn eta_bar(&self, i: usize) -> Result<QtRat> {
        let l = self.coleg(i)?;
        Ok(QtRat::monomial(self.parts[i - 1] as i64, -(l as i64)))
    }

    /// The full spectral vector (eta_bar(1), ..., eta_bar(n)).
    pub fn spectral_vector(&self) -> Vec<QtRat> {
        (1..=self.len())
            .map(|i| self.eta_bar(i).expect("index in range"))
            .collect()
    }

    /// delta_{i,eta} = eta_bar(i) / eta_bar(i+1); always a Laurent monomial.
    pub fn delta_stat(&self, i: usize) -> Result<QtRat> {
        if i < 1 || i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len().saturating_sub(1),
            });
        }
        let a = self.parts[i - 1] as i64 - self.parts[i] as i64;
        let b = self.coleg(i + 1)? as i64 - self.coleg(i)? as i64;
        Ok(QtRat::monomial(a, b))
    }

    /// Minimal operator word generating this composition from (0,...,0).
    pub fn plan(&self) -> GenerationPlan {
        plan::plan(self)
    }

    /// Same word with the leading n*min(eta) raises stripped; the walk starts
    /// from (min, ..., min) instead of the all-zero composition.
    pub fn plan_reduced(&self) -> GenerationPlan {
        plan::plan_reduced(self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part '{}'", tok)))
            })
            .collect::<Result<_>>()?;
        Composition::new(parts)
    }
}

/// All compositions of the given modulus with exactly n parts, in
/// lexicographically descending order.
pub fn compositions_of(modulus: u32, n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, idx: usize, left: u32, out: &mut Vec<Composition>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(Composition {
                parts: cur.clone(),
            });
            return;
        }
        for v in (0..=left).rev() {
            cur[idx] = v;
            rec(cur, idx + 1, left - v, out);
        }
    }
    rec(&mut cur, 0, modulus, &mut out);
    out
}

/// All partitions of the given modulus with at most n parts, padded to n.
pub fn partitions_of(modulus: u32, n: usize) -> Vec<Composition> {
    compositions_of(modulus, n)
        .into_iter()
        .filter(|c| c.is_partition())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn switch_examples() {
        assert_eq!(c("1,4,2,1").switch(1).unwrap(), c("4,1,2,1"));
        assert!(c("1,1").switch(2).is_err());
        let eta = c("3,1,4");
        assert_eq!(eta.switch(2).unwrap().switch(2).unwrap(), eta);
    }

    #[test]
    fn raise_examples() {
        let mut eta = Composition::zeros(4);
        for _ in 0..4 {
            eta = eta.raise();
        }
        assert_eq!(eta, c("1,1,1,1"));
        assert_eq!(c("1,2").raise(), c("2,2"));
        assert_eq!(c("2,1").raise(), c("1,3"));
    }

    #[test]
    fn coleg_examples() {
        assert_eq!(c("2,1").coleg(2).unwrap(), 1);
        let z = Composition::zeros(5);
        for i in 1..=5 {
            assert_eq!(z.coleg(i).unwrap(), (i - 1) as u32);
        }
        assert_eq!(c("7").coleg(1).unwrap(), 0);
        assert!(c("2,1").coleg(3).is_err());
    }

    #[test]
    fn eta_bar_examples() {
        let r = |s: &str| -> QtRat { s.parse().unwrap() };
        assert_eq!(c("0,1").spectral_vector(), vec![r("1/t"), r("q")]);
        assert_eq!(c("0,0").spectral_vector(), vec![r("1"), r("1/t")]);
        assert_eq!(c("2,1").spectral_vector(), vec![r("q^2"), r("q/t")]);
        // all-zero composition: (1, 1/t, ..., t^{-n+1})
        let z = Composition::zeros(4);
        for i in 1..=4 {
            assert_eq!(z.eta_bar(i).unwrap(), QtRat::monomial(0, -((i - 1) as i64)));
        }
    }

    #[test]
    fn delta_stat_examples() {
        let r = |s: &str| -> QtRat { s.parse().unwrap() };
        assert_eq!(c("0,1").delta_stat(1).unwrap(), r("1/(q*t)"));
        assert_eq!(c("1,0").delta_stat(1).unwrap(), r("q*t"));
        assert_eq!(c("1,1").delta_stat(1).unwrap(), r("t"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c("4,1,2,1").to_string(), "4,1,2,1");
        assert!("".parse::<Composition>().is_err());
        assert!("1,x".parse::<Composition>().is_err());
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions_of(3, 2).len(), 4);
        assert_eq!(compositions_of(4, 4).len(), 35);
        // (4,0), (3,1), (2,2)
        assert_eq!(partitions_of(4, 2).len(), 3);
    }
}
