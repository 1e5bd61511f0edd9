use std::fmt;

use crate::error::{Error, Result};
use crate::subst::word::{Alphabet, LetterId, Word};

/// A non-erasing substitution: every letter maps to a non-empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::Invalid(format!(
                "{} images for an alphabet of {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::Invalid(format!("image of '{}' is empty", alphabet.symbols()[i])));
            }
            if img.letters().iter().any(|&l| l as usize >= alphabet.len()) {
                return Err(Error::Invalid("image letter outside the alphabet".into()));
            }
        }
        Ok(Substitution { alphabet, images })
    }

    /// Builds from `(letter, image)` pairs; the alphabet follows the pair order.
    pub fn from_rules(rules: &[(char, &str)]) -> Result<Self> {
        let alphabet = Alphabet::new(rules.iter().map(|r| r.0).collect())?;
        let images = rules
            .iter()
            .map(|(_, img)| Word::parse(&alphabet, img))
            .collect::<Result<Vec<_>>>()?;
        Substitution::new(alphabet, images)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Alphabet size.
    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn image(&self, l: LetterId) -> &Word {
        &self.images[l as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::with_capacity(w.len() * 2);
        for &l in w.letters() {
            out.extend_from_slice(self.images[l as usize].letters());
        }
        Word::new(out)
    }

    /// `σ^m(w)`, materialized.
    pub fn iterate(&self, w: &Word, m: usize) -> Word {
        let mut cur = w.clone();
        for _ in 0..m {
            cur = self.apply(&cur);
        }
        cur
    }

    /// `σ^m(l)` for a single letter.
    pub fn iterate_letter(&self, l: LetterId, m: usize) -> Word {
        self.iterate(&Word::new(vec![l]), m)
    }

    /// The substitution `σ^p` with materialized images.
    pub fn power(&self, p: usize) -> Substitution {
        let images = self.alphabet.ids().map(|l| self.iterate_letter(l, p)).collect();
        Substitution { alphabet: self.alphabet.clone(), images }
    }

    /// Renders in the rule DSL, one rule per line.
    pub fn to_dsl(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, img) in self.alphabet.ids().zip(&self.images) {
            writeln!(f, "{} -> {}", self.alphabet.symbol(l), img.render(&self.alphabet))?;
        }
        Ok(())
    }
}

/// Substitutions used throughout the docs and tests.
pub mod catalog {
    use super::Substitution;

    fn build(rules: &[(char, &str)]) -> Substitution {
        Substitution::from_rules(rules).expect("catalog rules are valid")
    }

    /// a → ab, b → a.
    pub fn fibonacci() -> Substitution {
        build(&[('a', "ab"), ('b', "a")])
    }

    /// x → xyzy, y → xy, z → zy: aperiodic, yet y sits at every odd position.
    pub fn xyz() -> Substitution {
        build(&[('x', "xyzy"), ('y', "xy"), ('z', "zy")])
    }

    /// a → ab, b → ab, whose fixed word is (ab)^∞.
    pub fn period_two() -> Substitution {
        build(&[('a', "ab"), ('b', "ab")])
    }

    /// a → ab, b → ba.
    pub fn thue_morse() -> Substitution {
        build(&[('a', "ab"), ('b', "ba")])
    }

    /// r → rstt, s → rsttr, t → rstr: Fibonacci level-3n supertile pairs.
    pub fn fibonacci_pairs() -> Substitution {
        build(&[('r', "rstt"), ('s', "rsttr"), ('t', "rstr")])
    }
}
