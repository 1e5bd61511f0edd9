use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subst::matrix::{require_primitive, substitution_matrix};
use crate::subst::substitution::Substitution;
use crate::subst::word::{LetterId, Word};

/// `σ^power(start)` begins with `start` and has length at least 2, so
/// `σ^{power·n}(start)` converges to a one-sided fixed word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedPointSeed {
    pub power: usize,
    pub start: LetterId,
}

/// Seed with the smallest power, ties broken by alphabet order.
pub fn fixed_point_seed(s: &Substitution) -> Result<FixedPointSeed> {
    let witness = require_primitive(s)?;
    let k = s.size();
    let a = substitution_matrix(s);
    // The first-letter map cycles within k steps and lengths grow once the
    // matrix power is positive (k ≥ 2), so this bound always suffices.
    let max_power = k * (witness + 1);
    let first: Vec<LetterId> = s.alphabet().ids().map(|l| s.image(l)[0]).collect();
    let mut lead: Vec<LetterId> = s.alphabet().ids().collect();
    for p in 1..=max_power {
        for l in lead.iter_mut() {
            *l = first[*l as usize];
        }
        let lens = a.pow(p as u32)?.row_sums()?;
        if let Some(start) = s.alphabet().ids().find(|&l| lead[l as usize] == l && lens[l as usize] >= 2) {
            return Ok(FixedPointSeed { power: p, start });
        }
    }
    Err(Error::NoGrowingSeed)
}

/// Letters of the fixed word generated by a seed, produced lazily.
///
/// The word is walked as the derivation tree of `τ^D(start)` with
/// `τ = σ^p`. When the tree is exhausted its root becomes the first child of
/// a new root one level up, so the stack holds one frame per level and no
/// image is ever materialized.
#[derive(Clone, Debug)]
pub struct FixedWordStream {
    images: Vec<Vec<LetterId>>,
    start: LetterId,
    /// `(letter, next child)`; frame `i` sits at depth `depth - i`.
    stack: Vec<(LetterId, usize)>,
    depth: usize,
    emitted: usize,
}

impl FixedWordStream {
    pub fn new(s: &Substitution, seed: FixedPointSeed) -> Self {
        let tau = s.power(seed.power);
        let images = tau.images().iter().map(|w| w.letters().to_vec()).collect();
        FixedWordStream { images, start: seed.start, stack: vec![(seed.start, 0)], depth: 1, emitted: 0 }
    }

    /// Letters produced so far.
    pub fn position(&self) -> usize {
        self.emitted
    }

    /// Current derivation depth in units of `σ^p`.
    pub fn depth(&self) -> usize {
        self.depth
    }
}

impl Iterator for FixedWordStream {
    type Item = LetterId;

    fn next(&mut self) -> Option<LetterId> {
        loop {
            let Some(top) = self.stack.len().checked_sub(1) else {
                self.depth += 1;
                self.stack.push((self.start, 1));
                continue;
            };
            let (letter, next) = self.stack[top];
            let image = &self.images[letter as usize];
            if next == image.len() {
                self.stack.pop();
                continue;
            }
            self.stack[top].1 += 1;
            let child = image[next];
            if self.depth - top == 1 {
                self.emitted += 1;
                return Some(child);
            }
            self.stack.push((child, 0));
        }
    }
}

pub fn fixed_word_prefix(s: &Substitution, seed: FixedPointSeed, n: usize) -> Word {
    FixedWordStream::new(s, seed).take(n).collect()
}
