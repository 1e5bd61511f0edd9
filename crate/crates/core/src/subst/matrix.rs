use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subst::substitution::Substitution;

/// Square matrix of non-negative integers; entry `(i, j)` counts letter `j`
/// in the image of letter `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubstitutionMatrix {
    rows: Vec<Vec<u64>>,
}

impl SubstitutionMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Invalid("matrix must be square and non-empty".into()));
        }
        Ok(SubstitutionMatrix { rows })
    }

    pub fn identity(k: usize) -> Self {
        let rows = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
        SubstitutionMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Row sums: `|σ(a_i)|` for the matrix of `σ`.
    pub fn row_sums(&self) -> Result<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| r.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).ok_or(Error::Overflow("row sum")))
            .collect()
    }

    pub fn mul(&self, other: &SubstitutionMatrix) -> Result<SubstitutionMatrix> {
        let k = self.size();
        let mut rows = vec![vec![0u64; k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0u64;
                for l in 0..k {
                    let t = self.rows[i][l].checked_mul(other.rows[l][j]).ok_or(Error::Overflow("matrix product"))?;
                    acc = acc.checked_add(t).ok_or(Error::Overflow("matrix product"))?;
                }
                rows[i][j] = acc;
            }
        }
        Ok(SubstitutionMatrix { rows })
    }

    pub fn pow(&self, m: u32) -> Result<SubstitutionMatrix> {
        let mut acc = SubstitutionMatrix::identity(self.size());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_positive(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&x| x > 0))
    }

    /// Smallest `m ≤ (k−1)·k + 1` with `A^m > 0`, found on the boolean
    /// support so entries never grow.
    pub fn is_primitive(&self) -> Option<usize> {
        let k = self.size();
        let support: Vec<Vec<bool>> = self.rows.iter().map(|r| r.iter().map(|&x| x > 0).collect()).collect();
        let mut cur = support.clone();
        let bound = (k - 1) * k + 1;
        for m in 1..=bound {
            if cur.iter().all(|r| r.iter().all(|&b| b)) {
                return Some(m);
            }
            let mut next = vec![vec![false; k]; k];
            for i in 0..k {
                for l in (0..k).filter(|&l| cur[i][l]) {
                    for j in 0..k {
                        next[i][j] |= support[l][j];
                    }
                }
            }
            cur = next;
        }
        None
    }
}

impl fmt::Display for SubstitutionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn substitution_matrix(s: &Substitution) -> SubstitutionMatrix {
    let k = s.size();
    let rows = s
        .alphabet()
        .ids()
        .map(|i| {
            let mut row = vec![0u64; k];
            for &l in s.image(i).letters() {
                row[l as usize] += 1;
            }
            row
        })
        .collect();
    SubstitutionMatrix { rows }
}

/// Primitivity power of `s`, or [`Error::NotPrimitive`].
pub fn require_primitive(s: &Substitution) -> Result<usize> {
    substitution_matrix(s).is_primitive().ok_or(Error::NotPrimitive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subst::substitution::catalog;

    fn m(rows: &[&[u64]]) -> SubstitutionMatrix {
        SubstitutionMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn corpus_matrices() {
        assert_eq!(substitution_matrix(&catalog::fibonacci()), m(&[&[1, 1], &[1, 0]]));
        assert_eq!(substitution_matrix(&catalog::xyz()), m(&[&[1, 2, 1], &[1, 1, 0], &[0, 1, 1]]));
        let id = Substitution::from_rules(&[('a', "a")]).unwrap();
        assert_eq!(substitution_matrix(&id), m(&[&[1]]));
        assert_eq!(substitution_matrix(&catalog::fibonacci_pairs()), m(&[&[1, 1, 2], &[2, 1, 2], &[2, 1, 1]]));
    }

    #[test]
    fn primitivity_witnesses() {
        assert_eq!(substitution_matrix(&catalog::fibonacci()).is_primitive(), Some(2));
        assert_eq!(substitution_matrix(&catalog::fibonacci_pairs()).is_primitive(), Some(1));
        let reducible = Substitution::from_rules(&[('a', "ab"), ('b', "b")]).unwrap();
        assert_eq!(substitution_matrix(&reducible).is_primitive(), None);
        assert_eq!(m(&[&[1]]).is_primitive(), Some(1));
        // Wielandt's extremal matrix reaches the bound exactly.
        let w = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
        assert_eq!(w.is_primitive(), Some(5));
    }

    #[test]
    fn powers_and_overflow() {
        let a = m(&[&[1, 1], &[1, 0]]);
        assert_eq!(a.pow(2).unwrap(), m(&[&[2, 1], &[1, 1]]));
        assert_eq!(a.pow(0).unwrap(), SubstitutionMatrix::identity(2));
        assert!(matches!(a.pow(200), Err(Error::Overflow(_))));
    }

    #[test]
    fn display_is_nested_lists() {
        assert_eq!(m(&[&[1, 1], &[1, 0]]).to_string(), "[[1,1],[1,0]]");
    }
}
