//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::CoeffVec;
use crate::rational::{self, Rational};

/// Polynomial with exact rational coefficients, constant term first.
///
/// Trailing coefficients are never zero, so the zero polynomial has no
/// coefficients and degree −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: CoeffVec,
}

impl ExactPolynomial {
    pub(crate) fn from_coeff_vec(mut coeffs: CoeffVec) -> Self {
        coeffs.trim();
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: CoeffVec::Int(Vec::new()) }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeff_vec(CoeffVec::Int(c.to_vec()))
    }

    /// Takes ownership of machine-integer coefficients without copying.
    pub fn from_int_vec(c: Vec<i64>) -> Self {
        Self::from_coeff_vec(CoeffVec::Int(c))
    }

    pub fn from_rationals(c: Vec<Rational>) -> Self {
        Self::from_coeff_vec(CoeffVec::from_rationals(c))
    }

    /// `c · X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = CoeffVec::zeros(k + 1);
        v.set(k, c);
        Self::from_coeff_vec(v)
    }

    /// `X + X^2 + … + X^n`.
    pub fn geometric_block(n: usize) -> Self {
        let mut v = vec![1i64; n + 1];
        v[0] = 0;
        Self::from_ints(&v)
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 0
    }

    /// Number of stored coefficients (`degree + 1`).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Rational {
        match self.coeffs.len() {
            0 => Rational::zero(),
            n => self.coeffs.get(n - 1),
        }
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        self.coeffs.to_rationals()
    }

    /// Coefficients as machine integers, when they all are.
    pub fn small_coefficients(&self) -> Option<&[i64]> {
        self.coeffs.as_ints()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeff_vec(self.coeffs.scaled(c))
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = CoeffVec::zeros(0);
        v.add_scaled_shifted(&self.coeffs, &Rational::one(), k);
        Self::from_coeff_vec(v)
    }

    /// `self + c · X^k · other`, in place.
    pub fn add_scaled_shifted(&mut self, other: &ExactPolynomial, c: &Rational, k: usize) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        self.coeffs.add_scaled_shifted(&other.coeffs, c, k);
        self.coeffs.trim();
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for i in (0..self.len()).rev() {
            acc = acc * x + self.coeff(i);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for i in (0..self.len()).rev() {
            acc = acc * x + rational::to_f64(&self.coeff(i));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.len() <= 1 {
            return Self::zero();
        }
        let v = (1..self.len())
            .map(|i| self.coeff(i) * Rational::from_integer(BigInt::from(i)))
            .collect();
        Self::from_rationals(v)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Euclidean division over the rationals; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ExactPolynomial) -> (ExactPolynomial, ExactPolynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coefficients();
        let d = divisor.coefficients();
        let dn = d.len() - 1;
        let lead_inv = Rational::one() / &d[dn];
        if rem.len() <= dn {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dn);
        (Self::from_rationals(quot), Self::from_rationals(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &ExactPolynomial) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer polynomial with coprime coefficients and the same sign as
    /// `self` at every point (the scale factor is positive).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let coeffs = self.coefficients();
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() || g.is_one() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::from_rationals(c.iter().cloned().map(Rational::from_integer).collect())
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &Rational::one(), 0);
        out
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &-Rational::one(), 0);
        out
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        ExactPolynomial::from_coeff_vec(self.coeffs.mul(&rhs.coeffs))
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::from_coeff_vec(self.coeffs.neg())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..self.len() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Wire form shared with truncated series: `{"order": N, "coefficients": [..]}`.
#[derive(Serialize, Deserialize)]
struct CoefficientsJson {
    order: i64,
    #[serde(with = "crate::rational::serde_exact_vec")]
    coefficients: Vec<Rational>,
}

impl Serialize for ExactPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoefficientsJson { order: self.degree() as i64, coefficients: self.coefficients() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CoefficientsJson::deserialize(d)?;
        if raw.order != raw.coefficients.len() as i64 - 1 {
            return Err(serde::de::Error::custom("order does not match coefficient count"));
        }
        Ok(ExactPolynomial::from_rationals(raw.coefficients))
    }
}
