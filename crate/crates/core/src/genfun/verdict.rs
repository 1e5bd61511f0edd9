//! Rational-or-transcendental verdicts for the series of a fixed word.
//!
//! A series with 0/1 or bounded integer coefficients that converges in the
//! unit disk is either rational or transcendental over `Q(X)`, and it is
//! rational exactly when its coefficients are eventually periodic.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::genfun::period::{detect_period, rational_form_from_witness, PeriodWitness, RationalForm};
use crate::rational::{self, Rational};
use crate::subst::fixed::{fixed_word_prefix, FixedPointSeed};
use crate::subst::substitution::Substitution;
use crate::subst::verdict::{aperiodicity_verdict, AperiodicityVerdict};
use crate::subst::word::{LetterId, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// `C_a`: indicator of the letter.
    Characteristic,
    /// `P_a`: positions of its occurrences.
    Position,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodBounds {
    pub max_preperiod: usize,
    pub max_period: usize,
}

impl Default for PeriodBounds {
    fn default() -> Self {
        PeriodBounds { max_preperiod: 1000, max_period: 200 }
    }
}

impl PeriodBounds {
    /// Letters needed by the period search.
    pub fn prefix_len(&self) -> usize {
        self.max_preperiod + 10 * self.max_period
    }
}

/// Why the fixed word is known to be aperiodic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AperiodicityReason {
    IrrationalPF,
    CallerAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SeriesVerdict {
    Rational {
        form: RationalForm,
        witness: PeriodWitness,
    },
    /// The word is aperiodic and this letter belongs to the only pair of
    /// letters without a period witness; see [`series_verdict`].
    TranscendentalByAperiodicity { reason: AperiodicityReason },
    InconclusiveUpTo { max_preperiod: usize, max_period: usize },
}

impl SeriesVerdict {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, SeriesVerdict::InconclusiveUpTo { .. })
    }

    pub fn rational_form(&self) -> Option<&RationalForm> {
        match self {
            SeriesVerdict::Rational { form, .. } => Some(form),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictOptions {
    pub bounds: PeriodBounds,
    /// Treat the fixed word as aperiodic even if the PF eigenvalue is rational.
    pub assume_aperiodic: bool,
}

/// Indicator sequence of `letter` in `w`.
fn indicator(w: &Word, letter: LetterId) -> Vec<u8> {
    w.letters().iter().map(|&l| u8::from(l == letter)).collect()
}

/// `0, p(1), p(2) − p(1), …`: the position series after one difference.
fn position_gaps(w: &Word, letter: LetterId) -> Vec<u64> {
    let mut out = vec![0];
    let mut last = 0;
    for (i, &l) in w.letters().iter().enumerate() {
        if l == letter {
            out.push(i as u64 - last);
            last = i as u64;
        }
    }
    out
}

/// Witness for the letter's sequence that also survives one more
/// application of `σ^p` to the prefix.
fn certified_witness(s: &Substitution, seed: FixedPointSeed, prefix: &Word, letter: LetterId, kind: SeriesKind, bounds: PeriodBounds) -> Result<Option<PeriodWitness>> {
    let found = match kind {
        SeriesKind::Characteristic => detect_period(&indicator(prefix, letter), bounds.max_preperiod, bounds.max_period),
        SeriesKind::Position => {
            let gaps = position_gaps(prefix, letter);
            if gaps.len() < bounds.prefix_len() {
                return Ok(None);
            }
            detect_period(&gaps, bounds.max_preperiod, bounds.max_period)
        }
    }?;
    let Some(w) = found else { return Ok(None) };
    let longer = s.iterate(prefix, seed.power);
    let holds = match kind {
        SeriesKind::Characteristic => w.holds_on(&indicator(&longer, letter)),
        SeriesKind::Position => w.holds_on(&position_gaps(&longer, letter)),
    };
    Ok(holds.then_some(w))
}

fn to_rationals<T: Copy + Into<i64>>(v: &[T]) -> Vec<Rational> {
    v.iter().map(|&x| rational::int(x.into())).collect()
}

/// Rational when the letter's sequence has a certified period witness.
/// Otherwise, when the word is aperiodic (irrational PF eigenvalue, or the
/// caller's assertion) and exactly two letters lack a witness, each of them
/// is transcendental: an aperiodic word cannot have a single
/// non-periodic letter, as the indicators sum to `1/(1 − X)`. Everything
/// else is inconclusive. Position series follow their letter's indicator,
/// since gaps are eventually periodic exactly when the indicator is.
pub fn series_verdict(
    s: &Substitution,
    seed: FixedPointSeed,
    letter: LetterId,
    kind: SeriesKind,
    opts: &VerdictOptions,
) -> Result<SeriesVerdict> {
    let bounds = opts.bounds;
    let word_len = match kind {
        SeriesKind::Characteristic => bounds.prefix_len(),
        // Enough letters for `prefix_len` gaps, up to the gap bound.
        SeriesKind::Position => bounds.prefix_len() * gap_factor(s)?,
    };
    let prefix = fixed_word_prefix(s, seed, word_len);
    if let Some(w) = certified_witness(s, seed, &prefix, letter, kind, bounds)? {
        let form = match kind {
            SeriesKind::Characteristic => rational_form_from_witness(&to_rationals(&indicator(&prefix, letter)), w)?,
            SeriesKind::Position => rational_form_from_witness(&to_rationals_u64(&position_gaps(&prefix, letter)), w)?.summed(),
        };
        return Ok(SeriesVerdict::Rational { form, witness: w });
    }
    let inconclusive = SeriesVerdict::InconclusiveUpTo { max_preperiod: bounds.max_preperiod, max_period: bounds.max_period };
    let reason = if opts.assume_aperiodic {
        AperiodicityReason::CallerAsserted
    } else {
        match aperiodicity_verdict(s, bounds.max_preperiod, bounds.max_period)? {
            AperiodicityVerdict::AperiodicByIrrationalPF => AperiodicityReason::IrrationalPF,
            _ => return Ok(inconclusive),
        }
    };
    let char_prefix = fixed_word_prefix(s, seed, bounds.prefix_len());
    let mut unexplained = Vec::new();
    for l in s.alphabet().ids() {
        if certified_witness(s, seed, &char_prefix, l, SeriesKind::Characteristic, bounds)?.is_none() {
            unexplained.push(l);
        }
    }
    if unexplained.len() == 2 && unexplained.contains(&letter) {
        Ok(SeriesVerdict::TranscendentalByAperiodicity { reason })
    } else {
        Ok(inconclusive)
    }
}

fn to_rationals_u64(v: &[u64]) -> Vec<Rational> {
    v.iter().map(|&x| rational::int(x as i64)).collect()
}

fn gap_factor(s: &Substitution) -> Result<usize> {
    if s.size() == 1 {
        return Ok(1);
    }
    Ok(crate::subst::verdict::gap_bound(s)? as usize)
}
