//! Polynomials of `σ^m(a_j)` built level by level from those of level
//! `m − 1`, with block lengths and letter counts read off matrix powers.

use std::collections::HashMap;

use crate::error::Result;
use crate::genfun::words::{concat_char_into, concat_pos_into};
use crate::poly::ExactPolynomial;
use crate::subst::matrix::{substitution_matrix, SubstitutionMatrix};
use crate::subst::substitution::Substitution;
use crate::subst::word::LetterId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Char,
    Pos,
}

/// Memoized recursion for one substitution.
///
/// For each `(kind, target)` only the two most recent levels are kept,
/// since level `m` needs nothing older than `m − 1`. Asking for a level
/// below the cached ones restarts from level 0.
#[derive(Clone, Debug)]
pub struct RecursivePolys {
    s: Substitution,
    matrix: SubstitutionMatrix,
    /// `powers[m] = A^m`, grown on demand.
    powers: Vec<SubstitutionMatrix>,
    /// `(kind, target) → (level, polynomials indexed by source letter)`.
    memo: HashMap<(Kind, LetterId), Vec<(usize, Vec<ExactPolynomial>)>>,
}

impl RecursivePolys {
    pub fn new(s: &Substitution) -> Self {
        let matrix = substitution_matrix(s);
        let powers = vec![SubstitutionMatrix::identity(s.size())];
        RecursivePolys { s: s.clone(), matrix, powers, memo: HashMap::new() }
    }

    fn power(&mut self, m: usize) -> Result<&SubstitutionMatrix> {
        while self.powers.len() <= m {
            let next = self.powers.last().expect("identity is always present").mul(&self.matrix)?;
            self.powers.push(next);
        }
        Ok(&self.powers[m])
    }

    /// `|σ^m(a_j)|`.
    pub fn length(&mut self, j: LetterId, m: usize) -> Result<u64> {
        Ok(self.power(m)?.row_sums()?[j as usize])
    }

    /// Occurrences of `a_i` in `σ^m(a_j)`.
    pub fn count(&mut self, i: LetterId, j: LetterId, m: usize) -> Result<u64> {
        Ok(self.power(m)?.get(j as usize, i as usize))
    }

    /// `C_{a_i, σ^m(a_j)}`.
    pub fn char_poly(&mut self, i: LetterId, j: LetterId, m: usize) -> Result<ExactPolynomial> {
        Ok(self.level(Kind::Char, i, m)?[j as usize].clone())
    }

    /// `P_{a_i, σ^m(a_j)}`.
    pub fn pos_poly(&mut self, i: LetterId, j: LetterId, m: usize) -> Result<ExactPolynomial> {
        Ok(self.level(Kind::Pos, i, m)?[j as usize].clone())
    }

    /// `C_{a_i, σ^m(a_j)}` for every source `a_j`, borrowed from the cache.
    pub fn char_polys_at(&mut self, i: LetterId, m: usize) -> Result<&[ExactPolynomial]> {
        self.level(Kind::Char, i, m)
    }

    /// `P_{a_i, σ^m(a_j)}` for every source `a_j`, borrowed from the cache.
    pub fn pos_polys_at(&mut self, i: LetterId, m: usize) -> Result<&[ExactPolynomial]> {
        self.level(Kind::Pos, i, m)
    }

    /// Drops every cached polynomial.
    pub fn clear(&mut self) {
        self.memo.clear();
    }

    fn base(&self, kind: Kind, i: LetterId) -> Vec<ExactPolynomial> {
        self.s
            .alphabet()
            .ids()
            .map(|j| match (kind, i == j) {
                (Kind::Char, true) => ExactPolynomial::one(),
                // The single occurrence sits at position 0: 0·X.
                _ => ExactPolynomial::zero(),
            })
            .collect()
    }

    fn level(&mut self, kind: Kind, i: LetterId, m: usize) -> Result<&[ExactPolynomial]> {
        let key = (kind, i);
        let mut cached = self.memo.remove(&key).unwrap_or_default();
        cached.retain(|(lvl, _)| *lvl <= m);
        let (mut lvl, mut polys) = match cached.pop() {
            Some(top) => top,
            None => (0, self.base(kind, i)),
        };
        let mut prev = cached.pop();
        while lvl < m {
            let next = self.step(kind, i, lvl, &polys)?;
            prev = Some((lvl, polys));
            lvl += 1;
            polys = next;
        }
        let mut keep: Vec<_> = prev.into_iter().filter(|(l, _)| l + 1 == m).collect();
        keep.push((m, polys));
        self.memo.insert(key, keep);
        Ok(&self.memo[&key].last().expect("just inserted").1)
    }

    /// Level `lvl + 1` from level `lvl`: concatenate along `σ(a_j) = b_1 … b_l`.
    fn step(&mut self, kind: Kind, i: LetterId, lvl: usize, polys: &[ExactPolynomial]) -> Result<Vec<ExactPolynomial>> {
        let lens = self.power(lvl)?.row_sums()?;
        let counts: Vec<u64> = (0..self.s.size()).map(|b| self.powers[lvl].get(b, i as usize)).collect();
        let mut out = Vec::with_capacity(self.s.size());
        for j in self.s.alphabet().ids() {
            let mut acc = ExactPolynomial::zero();
            let (mut len, mut cnt) = (0usize, 0usize);
            for &b in self.s.image(j).letters() {
                let b = b as usize;
                match kind {
                    Kind::Char => concat_char_into(&mut acc, &polys[b], len)?,
                    Kind::Pos => concat_pos_into(&mut acc, &polys[b], len, cnt, counts[b] as usize)?,
                }
                len += lens[b] as usize;
                cnt += counts[b] as usize;
            }
            out.push(acc);
        }
        Ok(out)
    }
}
