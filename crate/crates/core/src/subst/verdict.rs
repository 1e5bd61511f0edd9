use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::period::{detect_period, PeriodWitness};
use crate::subst::fixed::{fixed_point_seed, fixed_word_prefix};
use crate::subst::matrix::{require_primitive, substitution_matrix};
use crate::subst::pf::pf_data;
use crate::subst::substitution::Substitution;

/// Every letter recurs in the fixed word with gaps at most this long:
/// twice the longest `σ^m(a_j)`, `m` being the primitivity power.
pub fn gap_bound(s: &Substitution) -> Result<u64> {
    if s.size() < 2 {
        return Err(Error::WrongAlphabetSize(s.size()));
    }
    let m = require_primitive(s)?;
    let lens = substitution_matrix(s).pow(m as u32)?.row_sums()?;
    Ok(2 * lens.into_iter().max().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AperiodicityVerdict {
    AperiodicByIrrationalPF,
    EventuallyPeriodic { preperiod: usize, period: usize },
    InconclusiveUpTo { prefix_bound: usize, period_bound: usize },
}

impl AperiodicityVerdict {
    pub fn is_aperiodic(&self) -> bool {
        matches!(self, AperiodicityVerdict::AperiodicByIrrationalPF)
    }

    pub fn witness(&self) -> Option<PeriodWitness> {
        match *self {
            AperiodicityVerdict::EventuallyPeriodic { preperiod, period } => Some(PeriodWitness { preperiod, period }),
            _ => None,
        }
    }
}

/// Irrational PF eigenvalue proves aperiodicity. Otherwise a period found on
/// a prefix of length `prefix_bound + 10·period_bound` is accepted only if
/// it also holds on `σ^p` of that prefix; this strengthens the empirical
/// match but is not a decision procedure.
pub fn aperiodicity_verdict(s: &Substitution, prefix_bound: usize, period_bound: usize) -> Result<AperiodicityVerdict> {
    let pf = pf_data(&substitution_matrix(s))?;
    if !pf.is_rational {
        return Ok(AperiodicityVerdict::AperiodicByIrrationalPF);
    }
    let inconclusive = AperiodicityVerdict::InconclusiveUpTo { prefix_bound, period_bound };
    let seed = fixed_point_seed(s)?;
    let prefix = fixed_word_prefix(s, seed, prefix_bound + 10 * period_bound);
    let Some(witness) = detect_period(prefix.letters(), prefix_bound, period_bound)? else {
        return Ok(inconclusive);
    };
    let image = s.iterate(&prefix, seed.power);
    if !witness.holds_on(image.letters()) {
        return Ok(inconclusive);
    }
    Ok(AperiodicityVerdict::EventuallyPeriodic { preperiod: witness.preperiod, period: witness.period })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subst::substitution::catalog;

    #[test]
    fn gap_bounds() {
        assert_eq!(gap_bound(&catalog::fibonacci()).unwrap(), 6);
        // xyz is primitive at m = 2; the longest σ²-image is σ²(x), of length 10.
        assert_eq!(gap_bound(&catalog::xyz()).unwrap(), 20);
        let single = Substitution::from_rules(&[('a', "aa")]).unwrap();
        assert_eq!(gap_bound(&single), Err(Error::WrongAlphabetSize(1)));
    }

    #[test]
    fn corpus_verdicts() {
        assert_eq!(
            aperiodicity_verdict(&catalog::fibonacci(), 1000, 200).unwrap(),
            AperiodicityVerdict::AperiodicByIrrationalPF
        );
        assert_eq!(
            aperiodicity_verdict(&catalog::period_two(), 1000, 200).unwrap(),
            AperiodicityVerdict::EventuallyPeriodic { preperiod: 0, period: 2 }
        );
        assert_eq!(
            aperiodicity_verdict(&catalog::thue_morse(), 10_000, 1000).unwrap(),
            AperiodicityVerdict::InconclusiveUpTo { prefix_bound: 10_000, period_bound: 1000 }
        );
    }

    #[test]
    fn json_tags() {
        let v = AperiodicityVerdict::EventuallyPeriodic { preperiod: 0, period: 2 };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"EventuallyPeriodic","preperiod":0,"period":2}"#);
    }
}
