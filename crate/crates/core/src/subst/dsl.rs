//! Reader for the rule language.
//!
//! ```text
//! # Fibonacci
//! a -> ab
//! b -> a
//! ```
//!
//! One rule per line, `<letter> -> <image>`. Letters are single characters
//! from `[A-Za-z0-9]`, images are contiguous, `#` comments run to the end
//! of the line and blank lines are skipped. The alphabet is the set of
//! left-hand sides in order of appearance.

use crate::error::{Error, ParseErrorKind, Result};
use crate::subst::substitution::Substitution;
use crate::subst::word::{Alphabet, Word};

fn is_letter(c: char) -> bool {
    c.is_ascii_alphanumeric()
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, column, kind }
}

struct Rule {
    line: usize,
    letter: char,
    image: Vec<(usize, char)>,
}

fn parse_line(line_no: usize, raw: &str) -> Result<Option<Rule>> {
    let content = raw.split('#').next().unwrap_or("");
    // (1-based column, char)
    let chars: Vec<(usize, char)> = content.chars().enumerate().map(|(i, c)| (i + 1, c)).collect();
    let non_ws: Vec<&(usize, char)> = chars.iter().filter(|(_, c)| !c.is_whitespace()).collect();
    if non_ws.is_empty() {
        return Ok(None);
    }
    let arrow = chars.windows(2).position(|w| w[0].1 == '-' && w[1].1 == '>');
    let Some(arrow) = arrow else {
        return Err(err(line_no, non_ws[0].0, ParseErrorKind::Syntax("expected '->'".into())));
    };
    let lhs: Vec<&(usize, char)> = chars[..arrow].iter().filter(|(_, c)| !c.is_whitespace()).collect();
    let letter = match lhs.as_slice() {
        [] => {
            return Err(err(line_no, chars[arrow].0, ParseErrorKind::Syntax("missing letter before '->'".into())));
        }
        [(col, c)] => {
            if !is_letter(*c) {
                return Err(err(line_no, *col, ParseErrorKind::Syntax(format!("'{c}' is not a letter"))));
            }
            *c
        }
        [_, (col, _), ..] => {
            return Err(err(
                line_no,
                *col,
                ParseErrorKind::Syntax("letters are single characters".into()),
            ));
        }
    };
    let rhs = &chars[arrow + 2..];
    let image: Vec<(usize, char)> = rhs.iter().copied().filter(|(_, c)| !c.is_whitespace()).collect();
    if image.is_empty() {
        return Err(err(line_no, chars[arrow].0 + 2, ParseErrorKind::EmptyImage));
    }
    let (first, last) = (image[0].0, image[image.len() - 1].0);
    if last - first + 1 != image.len() {
        let gap = rhs.iter().find(|(col, c)| *col > first && *col < last && c.is_whitespace()).map_or(first, |x| x.0);
        return Err(err(line_no, gap, ParseErrorKind::Syntax("image must be a contiguous word".into())));
    }
    if let Some((col, c)) = image.iter().find(|(_, c)| !is_letter(*c)) {
        return Err(err(line_no, *col, ParseErrorKind::Syntax(format!("'{c}' is not a letter"))));
    }
    Ok(Some(Rule { line: line_no, letter, image }))
}

/// Parses rule text into a [`Substitution`].
pub fn parse_substitution(text: &str) -> Result<Substitution> {
    let mut rules: Vec<Rule> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if let Some(rule) = parse_line(i + 1, raw)? {
            if rules.iter().any(|r| r.letter == rule.letter) {
                let col = raw.find(rule.letter).map_or(1, |b| raw[..b].chars().count() + 1);
                return Err(err(rule.line, col, ParseErrorKind::DuplicateRule));
            }
            rules.push(rule);
        }
    }
    if rules.is_empty() {
        return Err(err(1, 1, ParseErrorKind::Syntax("no rules".into())));
    }
    let alphabet = Alphabet::new(rules.iter().map(|r| r.letter).collect())?;
    let mut images = Vec::with_capacity(rules.len());
    for rule in &rules {
        let mut word = Word::empty();
        for &(col, c) in &rule.image {
            let id = alphabet.id(c).ok_or_else(|| err(rule.line, col, ParseErrorKind::UnknownLetterInImage(c)))?;
            word.push(id);
        }
        images.push(word);
    }
    Substitution::new(alphabet, images)
}
