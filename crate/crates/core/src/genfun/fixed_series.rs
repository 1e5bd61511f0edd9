//! Truncations of the characteristic, weighted and position series of a
//! fixed word, read from the lazy stream.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::genfun::series::TruncatedSeries;
use crate::rational::{self, Rational};
use crate::subst::fixed::{FixedPointSeed, FixedWordStream};
use crate::subst::substitution::Substitution;
use crate::subst::verdict::gap_bound;
use crate::subst::word::{Alphabet, LetterId};

/// Rational weight per letter, indexed in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterWeighting {
    weights: Vec<Rational>,
}

impl LetterWeighting {
    pub fn new(alphabet: &Alphabet, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != alphabet.len() {
            return Err(Error::Invalid(format!("{} weights for {} letters", weights.len(), alphabet.len())));
        }
        Ok(LetterWeighting { weights })
    }

    pub fn uniform(alphabet: &Alphabet, w: Rational) -> Self {
        LetterWeighting { weights: vec![w; alphabet.len()] }
    }

    pub fn indicator(alphabet: &Alphabet, letter: LetterId) -> Self {
        let weights = alphabet.ids().map(|l| rational::int(i64::from(l == letter))).collect();
        LetterWeighting { weights }
    }

    pub fn weight(&self, l: LetterId) -> &Rational {
        &self.weights[l as usize]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }
}

pub fn char_series(s: &Substitution, seed: FixedPointSeed, letter: LetterId, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(FixedWordStream::new(s, seed).take(order + 1).map(|l| i64::from(l == letter)))
}

/// `Σ_j g(a_j) C_{a_j}`, in one pass over the word.
pub fn weighted_series(s: &Substitution, seed: FixedPointSeed, g: &LetterWeighting, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(FixedWordStream::new(s, seed).take(order + 1).map(|l| g.weight(l).clone()).collect())
}

/// Positions of the first `n_terms` occurrences of `letter`.
///
/// The scan stops after `(n_terms + 1) · gap_bound` letters, which suffices
/// for primitive substitutions.
pub fn occurrence_positions(s: &Substitution, seed: FixedPointSeed, letter: LetterId, n_terms: usize) -> Result<Vec<u64>> {
    let gap = if s.size() == 1 { 1 } else { gap_bound(s)? as usize };
    let limit = (n_terms + 1).saturating_mul(gap);
    let mut out = Vec::with_capacity(n_terms);
    if n_terms == 0 {
        return Ok(out);
    }
    for (i, l) in FixedWordStream::new(s, seed).take(limit).enumerate() {
        if l == letter {
            out.push(i as u64);
            if out.len() == n_terms {
                return Ok(out);
            }
        }
    }
    Err(Error::InsufficientOccurrences { letter: s.alphabet().symbol(letter), wanted: n_terms, scanned: limit })
}

/// `Σ_{n=1}^{n_terms} p(n) X^n`, constant term 0.
pub fn position_series(s: &Substitution, seed: FixedPointSeed, letter: LetterId, n_terms: usize) -> Result<TruncatedSeries> {
    let pos = occurrence_positions(s, seed, letter, n_terms)?;
    let mut c = Vec::with_capacity(n_terms + 1);
    c.push(Rational::zero());
    c.extend(pos.into_iter().map(|p| rational::int(p as i64)));
    Ok(TruncatedSeries::new(c))
}
