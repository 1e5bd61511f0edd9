use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`].
pub type LetterId = u8;

/// Ordered set of single-character letters; the order fixes matrix indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: Vec<char>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Invalid("alphabet is empty".into()));
        }
        if letters.len() > LetterId::MAX as usize + 1 {
            return Err(Error::TooLarge { requested: letters.len(), limit: LetterId::MAX as usize + 1 });
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::Invalid(format!("duplicate letter '{c}'")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn symbol(&self, id: LetterId) -> char {
        self.letters[id as usize]
    }

    pub fn id(&self, c: char) -> Option<LetterId> {
        self.letters.iter().position(|&x| x == c).map(|i| i as LetterId)
    }

    pub fn require(&self, c: char) -> Result<LetterId> {
        self.id(c).ok_or(Error::UnknownLetter(c))
    }

    pub fn symbols(&self) -> &[char] {
        &self.letters
    }

    pub fn ids(&self) -> impl Iterator<Item = LetterId> {
        (0..self.letters.len()).map(|i| i as LetterId)
    }
}

/// Finite word stored as letter indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<LetterId>,
}

impl Word {
    pub fn new(letters: Vec<LetterId>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        text.chars().map(|c| alphabet.require(c)).collect::<Result<Vec<_>>>().map(Word::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<LetterId> {
        self.letters
    }

    pub fn push(&mut self, l: LetterId) {
        self.letters.push(l);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn count(&self, l: LetterId) -> usize {
        self.letters.iter().filter(|&&x| x == l).count()
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::new(self.letters[..n.min(self.len())].to_vec())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.letters.iter().map(|&l| alphabet.symbol(l)).collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alphabet }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.render(self.alphabet))
    }
}

impl std::ops::Index<usize> for Word {
    type Output = LetterId;
    fn index(&self, i: usize) -> &LetterId {
        &self.letters[i]
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<I: IntoIterator<Item = LetterId>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}
