//! Permutations of {1..n} with reduced words and Young-subgroup enumeration.

use std::collections::BTreeSet;

use super::Composition;
use crate::error::{Error, Result};

/// A permutation in one-line notation: `images[k]` is the image of k+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidComposition(format!(
                    "{:?} is not a permutation of 1..={}",
                    images, n
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition of i and i+1 (1-based).
    pub fn adjacent(n: usize, i: usize) -> Result<Permutation> {
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of value k (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Coxeter length: the number of inversions in the one-line notation.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Group product: (self * other)(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&k| self.images[k - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Action on compositions: (sigma eta)_i = eta_{sigma^{-1}(i)}, so s_i acts
    /// exactly like Composition::switch.
    pub fn act(&self, eta: &Composition) -> Result<Composition> {
        if eta.len() != self.n() {
            return Err(Error::VariableCountMismatch {
                left: self.n(),
                right: eta.len(),
            });
        }
        let mut parts = vec![0u32; eta.len()];
        for (j, &img) in self.images.iter().enumerate() {
            parts[img - 1] = eta.parts()[j];
        }
        Composition::new(parts)
    }

    /// Lexicographically smallest reduced word (i_1, ..., i_l) with
    /// self = s_{i_1} ... s_{i_l}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        let inv_has_descent = |p: &Permutation, i: usize| {
            let inv = p.inverse();
            inv.images[i - 1] > inv.images[i]
        };
        loop {
            let mut found = None;
            for i in 1..cur.n() {
                if inv_has_descent(&cur, i) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    word.push(i);
                    let s = Permutation::adjacent(cur.n(), i).expect("in range");
                    cur = s.compose(&cur);
                }
                None => break,
            }
        }
        debug_assert!(cur.is_identity());
        word
    }

    /// Product of adjacent transpositions s_{word[0]} ... s_{word[last]}.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut out = Permutation::identity(n);
        for &i in word {
            out = out.compose(&Permutation::adjacent(n, i)?);
        }
        Ok(out)
    }

    /// The shortest permutation mapping the partition rearrangement back to
    /// eta, i.e. with act(eta+) = eta (equivalently inverse().act(eta) = eta+).
    pub fn shortest_sorting(eta: &Composition) -> Permutation {
        let mut idx: Vec<usize> = (0..eta.len()).collect();
        idx.sort_by(|&a, &b| eta.parts()[b].cmp(&eta.parts()[a]).then(a.cmp(&b)));
        Permutation {
            images: idx.into_iter().map(|i| i + 1).collect(),
        }
    }
}

/// All elements of the Young subgroup generated by {s_k : k in gens},
/// sorted by one-line notation for determinism.
pub fn subgroup_elements(n: usize, gens: &BTreeSet<usize>) -> Result<Vec<Permutation>> {
    for &k in gens {
        if k < 1 || k >= n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: n.saturating_sub(1),
            });
        }
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(frontier[0].clone());
    while let Some(p) = frontier.pop() {
        for &k in gens {
            let next = p.compose(&Permutation::adjacent(n, k)?);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_empty_word() {
        let id = Permutation::identity(4);
        assert_eq!(id.length(), 0);
        assert!(id.reduced_word().is_empty());
    }

    #[test]
    fn reduced_word_roundtrip() {
        for images in [
            vec![2, 1, 3],
            vec![3, 1, 2],
            vec![3, 2, 1],
            vec![2, 3, 1],
            vec![4, 3, 2, 1],
        ] {
            let p = Permutation::from_images(images).unwrap();
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            assert_eq!(Permutation::from_word(p.n(), &w).unwrap(), p);
        }
    }

    #[test]
    fn subgroup_sizes() {
        let gens1: BTreeSet<usize> = [1].into_iter().collect();
        assert_eq!(subgroup_elements(3, &gens1).unwrap().len(), 2);
        let gens12: BTreeSet<usize> = [1, 2].into_iter().collect();
        assert_eq!(subgroup_elements(3, &gens12).unwrap().len(), 6);
        let empty: BTreeSet<usize> = BTreeSet::new();
        assert_eq!(subgroup_elements(3, &empty).unwrap().len(), 1);
        // {s_1, s_3} in S_4: two commuting blocks, 4 elements
        let gens13: BTreeSet<usize> = [1, 3].into_iter().collect();
        assert_eq!(subgroup_elements(4, &gens13).unwrap().len(), 4);
    }

    #[test]
    fn shortest_sorting_perm() {
        let eta: Composition = "0,1".parse().unwrap();
        let w = Permutation::shortest_sorting(&eta);
        assert_eq!(w.inverse().act(&eta).unwrap(), eta.sorted());
        assert_eq!(w.length(), 1);

        let eta: Composition = "4,1,2,1".parse().unwrap();
        let w = Permutation::shortest_sorting(&eta);
        assert_eq!(w.inverse().act(&eta).unwrap(), eta.sorted());

        // already sorted: identity
        let eta: Composition = "3,2,1".parse().unwrap();
        assert!(Permutation::shortest_sorting(&eta).is_identity());
    }

    #[test]
    fn action_matches_switch() {
        let eta: Composition = "5,7,9".parse().unwrap();
        let s2 = Permutation::adjacent(3, 2).unwrap();
        assert_eq!(s2.act(&eta).unwrap(), eta.switch(2).unwrap());
    }

    #[test]
    fn compose_then_act_is_action_of_product() {
        let eta: Composition = "1,2,3".parse().unwrap();
        let a = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let b = Permutation::from_images(vec![1, 3, 2]).unwrap();
        let lhs = a.act(&b.act(&eta).unwrap()).unwrap();
        let rhs = a.compose(&b).act(&eta).unwrap();
        assert_eq!(lhs, rhs);
    }
}
