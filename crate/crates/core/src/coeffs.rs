//! Dense exact coefficient storage with a machine-integer fast path.
//!
//! Characteristic and position polynomials of long words have tens of
//! millions of small integer coefficients, so vectors stay in `i64` form
//! until an operation leaves the integers or overflows, at which point the
//! whole vector is promoted to `BigRational`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) enum CoeffVec {
    Int(Vec<i64>),
    Rat(Vec<Rational>),
}

fn as_small(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

impl CoeffVec {
    pub fn zeros(n: usize) -> Self {
        CoeffVec::Int(vec![0; n])
    }

    pub fn from_rationals(v: Vec<Rational>) -> Self {
        let small: Option<Vec<i64>> = v.iter().map(as_small).collect();
        match small {
            Some(ints) => CoeffVec::Int(ints),
            None => CoeffVec::Rat(v),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            CoeffVec::Int(v) => v.len(),
            CoeffVec::Rat(v) => v.len(),
        }
    }

    pub fn get(&self, i: usize) -> Rational {
        match self {
            CoeffVec::Int(v) => v.get(i).map_or_else(Rational::zero, |&x| Rational::from_integer(BigInt::from(x))),
            CoeffVec::Rat(v) => v.get(i).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        match self {
            CoeffVec::Int(v) => v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect(),
            CoeffVec::Rat(v) => v.clone(),
        }
    }

    pub fn as_ints(&self) -> Option<&[i64]> {
        match self {
            CoeffVec::Int(v) => Some(v),
            CoeffVec::Rat(_) => None,
        }
    }

    fn promote(&mut self) -> &mut Vec<Rational> {
        if let CoeffVec::Int(v) = self {
            *self = CoeffVec::Rat(v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect());
        }
        match self {
            CoeffVec::Rat(v) => v,
            CoeffVec::Int(_) => unreachable!(),
        }
    }

    pub fn resize(&mut self, n: usize) {
        match self {
            CoeffVec::Int(v) => v.resize(n, 0),
            CoeffVec::Rat(v) => v.resize(n, Rational::zero()),
        }
    }

    /// Drops trailing zeros.
    pub fn trim(&mut self) {
        match self {
            CoeffVec::Int(v) => {
                while v.last() == Some(&0) {
                    v.pop();
                }
            }
            CoeffVec::Rat(v) => {
                while v.last().is_some_and(Zero::is_zero) {
                    v.pop();
                }
            }
        }
    }

    pub fn set(&mut self, i: usize, q: Rational) {
        if i >= self.len() {
            self.resize(i + 1);
        }
        match (&mut *self, as_small(&q)) {
            (CoeffVec::Int(v), Some(x)) => v[i] = x,
            _ => self.promote()[i] = q,
        }
    }

    /// `self[i + shift] += scale * other[i]`, growing `self` as needed.
    pub fn add_scaled_shifted(&mut self, other: &CoeffVec, scale: &Rational, shift: usize) {
        let need = other.len() + shift;
        if self.len() < need {
            self.resize(need);
        }
        let mut start = 0;
        if let (CoeffVec::Int(dst), CoeffVec::Int(src), Some(k)) = (&mut *self, other, as_small(scale)) {
            while start < src.len() {
                let term = src[start].checked_mul(k).and_then(|t| dst[start + shift].checked_add(t));
                match term {
                    Some(x) => dst[start + shift] = x,
                    None => break,
                }
                start += 1;
            }
            if start == src.len() {
                return;
            }
        }
        let dst = self.promote();
        for i in start..other.len() {
            let c = other.get(i);
            if !c.is_zero() {
                dst[i + shift] += c * scale;
            }
        }
    }

    pub fn scaled(&self, scale: &Rational) -> CoeffVec {
        let mut out = CoeffVec::zeros(self.len());
        out.add_scaled_shifted(self, scale, 0);
        out
    }

    pub fn neg(&self) -> CoeffVec {
        match self {
            CoeffVec::Int(v) => {
                if v.iter().all(|&x| x != i64::MIN) {
                    CoeffVec::Int(v.iter().map(|&x| -x).collect())
                } else {
                    CoeffVec::Rat(self.to_rationals().into_iter().map(|q| -q).collect())
                }
            }
            CoeffVec::Rat(v) => CoeffVec::Rat(v.iter().map(|q| -q.clone()).collect()),
        }
    }

    /// Full (untruncated) product.
    pub fn mul(&self, other: &CoeffVec) -> CoeffVec {
        if self.len() == 0 || other.len() == 0 {
            return CoeffVec::Int(Vec::new());
        }
        let n = self.len() + other.len() - 1;
        self.mul_truncated(other, n)
    }

    /// Product keeping the first `n` coefficients.
    pub fn mul_truncated(&self, other: &CoeffVec, n: usize) -> CoeffVec {
        if let (CoeffVec::Int(a), CoeffVec::Int(b)) = (self, other) {
            if let Some(v) = mul_small(a, b, n) {
                return CoeffVec::Int(v);
            }
        }
        let a = self.to_rationals();
        let b = other.to_rationals();
        let mut out = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        CoeffVec::from_rationals(out)
    }

}

fn mul_small(a: &[i64], b: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut acc = vec![0i128; n];
    for (i, &x) in a.iter().enumerate().take(n) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            acc[i + j] = acc[i + j].checked_add(x as i128 * y as i128)?;
        }
    }
    acc.into_iter().map(|x| i64::try_from(x).ok()).collect()
}

impl PartialEq for CoeffVec {
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        match (self, other) {
            (CoeffVec::Int(a), CoeffVec::Int(b)) => a == b,
            _ => (0..self.len()).all(|i| self.get(i) == other.get(i)),
        }
    }
}

impl Eq for CoeffVec {}
