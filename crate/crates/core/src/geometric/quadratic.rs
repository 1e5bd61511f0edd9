//! Exact arithmetic in real quadratic fields `Q(√D)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `a + b√D` with rational `a`, `b` and square-free `D ≥ 1`.
///
/// Rational values have `b = 0` and combine with any radicand. `D = 1`
/// never carries a surd part: it is folded into `a`.
#[derive(Clone, Debug)]
pub struct QuadraticReal {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Largest square factor removed: `n = s²·D` with `D` square-free.
pub fn square_free_decomposition(n: u64) -> (u64, u64) {
    let (mut s, mut d, mut rest) = (1u64, 1u64, n);
    let mut p = 2u64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            s *= p;
        }
        if rest % p == 0 {
            rest /= p;
            d *= p;
        }
        p += 1;
    }
    (s, d * rest)
}

fn is_square_free(n: u64) -> bool {
    n >= 1 && square_free_decomposition(n).0 == 1
}

impl QuadraticReal {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::Invalid(format!("radicand {d} is not a square-free positive integer")));
        }
        Ok(Self::raw(a, b, d))
    }

    fn raw(a: Rational, b: Rational, d: u64) -> Self {
        if d == 1 {
            return QuadraticReal { a: a + b, b: Rational::zero(), d: 1 };
        }
        QuadraticReal { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticReal { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(rational::int(n))
    }

    /// `√n` for a positive integer, reduced to `s√D`.
    pub fn sqrt_of(n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::from_int(0));
        }
        let (s, d) = square_free_decomposition(n);
        Ok(Self::raw(Rational::zero(), rational::int(s as i64), d))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Radicand; 1 for rational values.
    pub fn radicand(&self) -> u64 {
        if self.b.is_zero() {
            1
        } else {
            self.d
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.radicand(), other.radicand()) {
            (1, d) | (d, 1) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::IncompatibleRadicands(d, e)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::raw(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dd = rational::int(d as i64);
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::raw(a, b, d))
    }

    /// `a − b√D`.
    pub fn conjugate(&self) -> Self {
        Self::raw(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a² − b²D`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * rational::int(self.radicand() as i64)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        let num = self.checked_mul(&other.conjugate())?;
        let n = other.norm();
        Ok(Self::raw(num.a / &n, num.b / &n, num.d))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::raw(&self.a * q, &self.b * q, self.d)
    }

    /// Exact sign, from the signs of `a`, `b` and a comparison of `a²`
    /// with `b²D`.
    pub fn signum(&self) -> i32 {
        let sa = rational::sign(&self.a);
        let sb = rational::sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * rational::int(self.radicand() as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.a) + rational::to_f64(&self.b) * (self.radicand() as f64).sqrt()
    }

    /// `floor(|self| · 10^digits)`, exactly.
    fn scaled_floor_abs(&self, digits: usize) -> BigInt {
        let v = if self.signum() < 0 { -self } else { self.clone() };
        let scale = num_traits::pow(BigInt::from(10), digits);
        // Estimate from an integer square root, then correct exactly.
        let bq = v.b.abs() * Rational::from_integer(scale.clone());
        let b2d = &bq * &bq * rational::int(v.radicand() as i64);
        let root = (b2d.numer() / b2d.denom()).sqrt();
        let surd = if v.b.is_negative() { -root } else { root };
        let mut n = (&v.a * Rational::from_integer(scale.clone())).floor().to_integer() + surd;
        let at = |n: &BigInt| Self::rational(Rational::new(n.clone(), scale.clone()));
        while (&v - &at(&n)).signum() < 0 {
            n -= 1;
        }
        while (&v - &at(&(&n + 1))).signum() >= 0 {
            n += 1;
        }
        n
    }

    /// Decimal expansion truncated toward zero after `digits` digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let q = Rational::new(self.scaled_floor_abs(digits), num_traits::pow(BigInt::from(10), digits));
        let body = rational::to_decimal(&q, digits);
        if self.signum() < 0 && !q.is_zero() {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl PartialEq for QuadraticReal {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadraticReal {}

impl PartialOrd for QuadraticReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadraticReal {
            type Output = QuadraticReal;
            /// Panics on values over different radicands.
            fn $method(self, rhs: &QuadraticReal) -> QuadraticReal {
                self.$checked(rhs).expect("operands share a radicand")
            }
        }

        impl $trait for QuadraticReal {
            type Output = QuadraticReal;
            fn $method(self, rhs: QuadraticReal) -> QuadraticReal {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &QuadraticReal {
    type Output = QuadraticReal;
    fn neg(self) -> QuadraticReal {
        QuadraticReal { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl Neg for QuadraticReal {
    type Output = QuadraticReal;
    fn neg(self) -> QuadraticReal {
        -&self
    }
}

impl Zero for QuadraticReal {
    fn zero() -> Self {
        Self::from_int(0)
    }

    fn is_zero(&self) -> bool {
        QuadraticReal::is_zero(self)
    }
}

impl One for QuadraticReal {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl fmt::Display for QuadraticReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.abs().is_one() {
            format!("√{}", self.d)
        } else {
            format!("{}*√{}", self.b.abs(), self.d)
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{surd}"),
            (true, true) => write!(f, "-{surd}"),
            (false, neg) => write!(f, "{} {} {surd}", self.a, if neg { "-" } else { "+" }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuadraticJson {
    #[serde(with = "crate::rational::serde_exact")]
    a: Rational,
    #[serde(with = "crate::rational::serde_exact")]
    b: Rational,
    #[serde(rename = "D")]
    d: u64,
}

impl Serialize for QuadraticReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadraticJson { a: self.a.clone(), b: self.b.clone(), d: self.radicand() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QuadraticJson::deserialize(d)?;
        QuadraticReal::new(raw.a, raw.b, raw.d).map_err(serde::de::Error::custom)
    }
}
