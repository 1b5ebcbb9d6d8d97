//! Minimal-length operator words that build a composition from (0,...,0).
//!
//! A word is a sequence over {0, 1, ..., n-1}: 0 applies the raising operator,
//! a positive letter i applies the switch s_i. Words are stored in application
//! order (the first letter is applied first).
//!
//! The construction runs in two phases. The raising phase builds the reversed
//! partition rearrangement of the target: components of size >= i are raised
//! in a sweep for i = 1, 2, ..., max(eta), with switches moving each component
//! that still needs raising to the front. The repositioning phase then sorts
//! the reversed partition into the target, fixing positions n, n-1, ..., 2 and
//! always picking the closest matching component from the right.

use serde::{Deserialize, Serialize};

use super::Composition;

/// An operator word together with the compositions it visits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationPlan {
    pub eta: Composition,
    pub start: Composition,
    pub word: Vec<usize>,
    /// Composition after each letter of `word`; the last entry equals `eta`.
    pub states: Vec<Composition>,
}

impl GenerationPlan {
    /// Number of operators in the word.
    pub fn operator_count(&self) -> usize {
        self.word.len()
    }

    /// Re-applies the word to `start` and checks it reproduces the states.
    pub fn replay_is_consistent(&self) -> bool {
        let mut cur = self.start.clone();
        if self.states.len() != self.word.len() {
            return false;
        }
        for (&letter, expected) in self.word.iter().zip(&self.states) {
            cur = match letter {
                0 => cur.raise(),
                i => match cur.switch(i) {
                    Ok(c) => c,
                    Err(_) => return false,
                },
            };
            if &cur != expected {
                return false;
            }
        }
        cur == self.eta
    }
}

pub(super) fn plan(eta: &Composition) -> GenerationPlan {
    let n = eta.len();
    let parts = eta.parts();
    let mut word: Vec<usize> = Vec::new();
    let mut states: Vec<Composition> = Vec::new();
    let start = Composition::zeros(n);
    let mut cur = start.clone();

    let push = |letter: usize, cur: &mut Composition, word: &mut Vec<usize>, states: &mut Vec<Composition>| {
        *cur = match letter {
            0 => cur.raise(),
            i => cur.switch(i).expect("planner letters are in range"),
        };
        word.push(letter);
        states.push(cur.clone());
    };

    // Raising phase: after sweep i the current composition holds every
    // component of value >= i raised to at least i, arranged ascending.
    for i in 1..=eta.max_part() {
        let l = parts.iter().filter(|&&x| x < i - 1).count(); // l_{eta,i-1}
        let g = parts.iter().filter(|&&x| x >= i).count(); // g_{eta,i}
        if i > 1 {
            for m in 1..=g {
                for s in (m..l + m).rev() {
                    push(s, &mut cur, &mut word, &mut states);
                }
            }
        }
        for _ in 0..g {
            push(0, &mut cur, &mut word, &mut states);
        }
    }

    debug_assert_eq!(cur, eta.sorted().reversed());

    // Repositioning phase: fix positions n, n-1, ..., 2 in turn, moving the
    // closest matching component (largest index <= i) into place.
    for i in (2..=n).rev() {
        let target = parts[i - 1];
        let p = (1..=i)
            .rev()
            .find(|&j| cur.part(j) == target)
            .expect("a matching component always exists");
        for s in p..i {
            push(s, &mut cur, &mut word, &mut states);
        }
    }

    debug_assert_eq!(&cur, eta);
    GenerationPlan {
        eta: eta.clone(),
        start,
        word,
        states,
    }
}

pub(super) fn plan_reduced(eta: &Composition) -> GenerationPlan {
    let full = plan(eta);
    let m = eta.min_part() as usize;
    if m == 0 {
        return full;
    }
    let n = eta.len();
    let skip = n * m;
    debug_assert!(full.word[..skip].iter().all(|&l| l == 0));
    GenerationPlan {
        eta: full.eta,
        start: full.states[skip - 1].clone(),
        word: full.word[skip..].to_vec(),
        states: full.states[skip..].to_vec(),
    }
}
