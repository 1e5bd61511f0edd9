//! Lower bounds `α̂_n` such that `C_a(X) > 0` on `(α̂_n, 1)`.
//!
//! The Fibonacci word splits into blocks `R_n`, `S_n`, `T_n` starting at even
//! offsets, so `C_a(x)` is a sum of `x^{2k}·C_{a,B}(x)` terms. If all three
//! block polynomials are positive on `(α, 0)` then so is `C_a`; on `[0, 1)`
//! it is at least 1.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibonacci::supertiles::pair_polynomials;
use crate::poly::ExactPolynomial;
use crate::rational::{self, Rational};
use crate::realroots::{certify_positive, isolate_max_root, ExclusionCertificate, RootBracket};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairBlock {
    R,
    S,
    T,
}

impl PairBlock {
    pub const ALL: [PairBlock; 3] = [PairBlock::R, PairBlock::S, PairBlock::T];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityBound {
    pub level: usize,
    /// `C_{a,B_n} > 0` on `(alpha_hat, 0)` for every block `B`.
    #[serde(with = "crate::rational::serde_exact")]
    pub alpha_hat: Rational,
    pub binding: PairBlock,
    /// Bracket of the binding root; `alpha_hat` is its upper end.
    pub bracket: RootBracket,
    /// One certificate per block on `(alpha_hat, 0)`, in R, S, T order.
    pub certs: Vec<ExclusionCertificate>,
    /// Blocks with no root in `(−1, 0)`, each with a certificate there.
    pub root_free: Vec<(PairBlock, ExclusionCertificate)>,
}

impl PositivityBound {
    /// Re-checks every certificate against freshly computed polynomials.
    pub fn verify(&self) -> Result<bool> {
        let polys = pair_polynomials(self.level)?;
        let ps = polys.polys();
        let idx = |b: PairBlock| PairBlock::ALL.iter().position(|&x| x == b).expect("listed");
        let covers = |c: &ExclusionCertificate| c.left <= self.alpha_hat && c.right == rational::int(0);
        Ok(self.certs.len() == 3
            && self.certs.iter().zip(ps).all(|(c, p)| covers(c) && c.verify(p))
            && self.root_free.iter().all(|(b, c)| c.left == rational::int(-1) && c.verify(ps[idx(*b)])))
    }
}

/// Default bracket width for `α̂_n`.
pub fn default_tolerance() -> Rational {
    rational::ratio(1, 100_000_000)
}

fn largest_negative_root(p: &ExactPolynomial, eps: &Rational) -> Result<Option<RootBracket>> {
    match isolate_max_root(p, &rational::int(-1), &rational::int(0), eps) {
        Ok(b) => Ok(Some(b)),
        Err(Error::NoRoot) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Brackets the largest root in `(−1, 0)` of the three level-`n` block
/// polynomials and certifies positivity of all three to its right.
pub fn positivity_bound(n: usize, eps: &Rational) -> Result<PositivityBound> {
    let polys = pair_polynomials(n)?;
    let ps = polys.polys();
    let brackets: Vec<Option<RootBracket>> =
        ps.par_iter().map(|p| largest_negative_root(p, eps)).collect::<Result<_>>()?;
    let (bi, bracket) = brackets
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.as_ref().map(|b| (i, b)))
        .max_by(|x, y| x.1.upper.cmp(&y.1.upper))
        .ok_or(Error::NoRootInInterval)?;
    let alpha_hat = bracket.upper.clone();
    let zero = rational::int(0);
    let certs: Vec<ExclusionCertificate> =
        ps.par_iter().map(|p| certify_positive(p, &alpha_hat, &zero)).collect::<Result<_>>()?;
    let root_free = brackets
        .iter()
        .zip(PairBlock::ALL)
        .zip(ps)
        .filter(|((b, _), _)| b.is_none())
        .map(|((_, block), p)| Ok((block, certify_positive(p, &rational::int(-1), &zero)?)))
        .collect::<Result<_>>()?;
    Ok(PositivityBound { level: n, alpha_hat, binding: PairBlock::ALL[bi], bracket: bracket.clone(), certs, root_free })
}

/// `α̂_{n+1} ≤ α̂_n + ε` for consecutive levels.
pub fn is_monotone(bounds: &[PositivityBound], eps: &Rational) -> bool {
    bounds.windows(2).all(|w| w[1].level == w[0].level + 1 && w[1].alpha_hat <= &w[0].alpha_hat + eps)
}
