//! Supertiles `A_n = σⁿ(a)`, `B_n = σⁿ(b)` of `a → ab, b → a`, and the
//! pairs `R_n = A_{3n}B_{3n}`, `S_n = A_{3n}A_{3n}`, `T_n = B_{3n}A_{3n}`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::fixed_series::char_series;
use crate::genfun::words::{char_prefix_poly, concat_char};
use crate::poly::ExactPolynomial;
use crate::subst::fixed::{fixed_point_seed, FixedWordStream};
use crate::subst::substitution::{catalog, Substitution};
use crate::subst::word::Word;

/// Largest `n` for which `σⁿ(a)` is expanded.
pub const MAX_SUPERTILE_LEVEL: usize = 40;
/// Largest pair level; degrees grow like `f_{3n+3}`.
pub const MAX_PAIR_LEVEL: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Supertile {
    A,
    B,
}

/// Fibonacci numbers with `f_1 = f_2 = 1`; `fib(0) = 0`.
pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `σⁿ(a)` or `σⁿ(b)`; `|A_n| = f_{n+2}`.
pub fn supertile_word(n: usize, which: Supertile) -> Result<Word> {
    if n > MAX_SUPERTILE_LEVEL {
        return Err(Error::TooLarge { requested: n, limit: MAX_SUPERTILE_LEVEL });
    }
    let s = catalog::fibonacci();
    let letter = match which {
        Supertile::A => 0,
        Supertile::B => 1,
    };
    Ok(s.iterate_letter(letter, n))
}

/// `C_a` restricted to `R_n`, `S_n`, `T_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupertilePolys {
    pub level: usize,
    pub r: ExactPolynomial,
    pub s: ExactPolynomial,
    pub t: ExactPolynomial,
    pub len_r: u64,
    pub len_s: u64,
    pub len_t: u64,
}

impl SupertilePolys {
    pub fn polys(&self) -> [&ExactPolynomial; 3] {
        [&self.r, &self.s, &self.t]
    }

    pub fn lengths(&self) -> [u64; 3] {
        [self.len_r, self.len_s, self.len_t]
    }
}

/// The explicit words `R_1 = abaababa`, `S_1 = abaababaab`, `T_1 = abaabaab`.
pub fn level_one_words() -> [Word; 3] {
    let a3 = supertile_word(3, Supertile::A).expect("small level");
    let b3 = supertile_word(3, Supertile::B).expect("small level");
    [a3.concat(&b3), a3.concat(&a3), b3.concat(&a3)]
}

fn level_one() -> SupertilePolys {
    let [r, s, t] = level_one_words().map(|w| char_prefix_poly(&w, 0));
    SupertilePolys { level: 1, r, s, t, len_r: fib(6), len_s: 2 * fib(5), len_t: fib(6) }
}

fn concat_all(blocks: &[(&ExactPolynomial, u64)]) -> Result<ExactPolynomial> {
    let mut acc = ExactPolynomial::zero();
    let mut offset = 0u64;
    for &(p, len) in blocks {
        acc = concat_char(&acc, p, offset as usize)?;
        offset += len;
    }
    Ok(acc)
}

/// Level `n + 1` from level `n`: `R' = RSTT`, `S' = RSTTR`, `T' = RSTR`.
fn next_level(p: &SupertilePolys) -> Result<SupertilePolys> {
    let (r, s, t) = ((&p.r, p.len_r), (&p.s, p.len_s), (&p.t, p.len_t));
    let n = p.level + 1;
    let out = SupertilePolys {
        level: n,
        r: concat_all(&[r, s, t, t])?,
        s: concat_all(&[r, s, t, t, r])?,
        t: concat_all(&[r, s, t, r])?,
        len_r: fib(3 * n + 3),
        len_s: 2 * fib(3 * n + 2),
        len_t: fib(3 * n + 3),
    };
    debug_assert_eq!(out.len_r, p.len_r + p.len_s + 2 * p.len_t);
    debug_assert_eq!(out.len_s, out.len_r + p.len_r);
    debug_assert_eq!(out.len_t, p.len_r * 2 + p.len_s + p.len_t);
    Ok(out)
}

/// Pair polynomials of level `n`, built by recursion from level 1.
pub fn pair_polynomials(n: usize) -> Result<SupertilePolys> {
    if n == 0 {
        return Err(Error::Invalid("pair level starts at 1".into()));
    }
    if n > MAX_PAIR_LEVEL {
        return Err(Error::TooLarge { requested: n, limit: MAX_PAIR_LEVEL });
    }
    let mut p = level_one();
    while p.level < n {
        p = next_level(&p)?;
    }
    Ok(p)
}

/// `r → rstt, s → rsttr, t → rstr`: the Fibonacci word read in pairs of
/// level-`3n` supertiles.
pub fn induced_three_letter_substitution() -> Substitution {
    catalog::fibonacci_pairs()
}

/// Outcome of splitting a prefix of the Fibonacci word into `R_n`, `S_n`,
/// `T_n` blocks along the fixed word of the induced substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub level: usize,
    pub terms: usize,
    /// Blocks needed to cover the prefix.
    pub blocks: usize,
    pub offsets_even: bool,
    pub matches: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.offsets_even && self.matches
    }
}

/// Compares `C_a` mod `X^{terms}` with the block-by-block reconstruction.
pub fn verify_decomposition(n: usize, terms: usize) -> Result<DecompositionReport> {
    let polys = pair_polynomials(n)?;
    let blocks: Vec<Vec<bool>> = polys
        .polys()
        .iter()
        .zip(polys.lengths())
        .map(|(p, len)| (0..len as usize).map(|i| p.coeff(i).is_one()).collect())
        .collect();
    let pairs = induced_three_letter_substitution();
    let seed = fixed_point_seed(&pairs)?;
    let mut built = Vec::with_capacity(terms + blocks[1].len());
    let (mut count, mut offsets_even) = (0, true);
    for l in FixedWordStream::new(&pairs, seed) {
        if built.len() >= terms {
            break;
        }
        offsets_even &= built.len() % 2 == 0;
        built.extend_from_slice(&blocks[l as usize]);
        count += 1;
    }
    built.truncate(terms);
    let fib = catalog::fibonacci();
    let direct = char_series(&fib, fixed_point_seed(&fib)?, 0, terms.saturating_sub(1));
    let matches = terms == 0 || direct.coefficients().iter().zip(&built).all(|(c, &b)| c.is_one() == b);
    Ok(DecompositionReport { level: n, terms, blocks: count, offsets_even, matches })
}
