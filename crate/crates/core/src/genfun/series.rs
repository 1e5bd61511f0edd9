use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// The coefficients `c_0 … c_N` of a formal power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list: a truncation has order ≥ 0.
    pub fn new(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coefficients }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(c: I) -> Self {
        Self::new(c.into_iter().map(rational::int).collect())
    }

    pub fn zeros(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.coefficients
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coefficients[n]
    }

    /// Coefficientwise sum; orders must agree.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.order() != other.order() {
            return Err(Error::Invalid(format!("orders {} and {} differ", self.order(), other.order())));
        }
        Ok(Self::new(self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,value\n");
        for (i, c) in self.coefficients.iter().enumerate() {
            let _ = writeln!(out, "{i},{}", rational::to_exact_string(c));
        }
        out
    }
}

/// `(1 − X)^m · ts`, truncated at the same order.
pub fn difference_transform(ts: &TruncatedSeries, m: usize) -> TruncatedSeries {
    let mut c = ts.coefficients.clone();
    for _ in 0..m {
        for i in (1..c.len()).rev() {
            let prev = c[i - 1].clone();
            c[i] -= prev;
        }
    }
    TruncatedSeries::new(c)
}

/// `ts / (1 − X)`: running sums of the coefficients.
pub fn summatory_transform(ts: &TruncatedSeries) -> TruncatedSeries {
    let mut c = ts.coefficients.clone();
    for i in 1..c.len() {
        let prev = c[i - 1].clone();
        c[i] += prev;
    }
    TruncatedSeries::new(c)
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    #[serde(with = "crate::rational::serde_exact_vec")]
    coefficients: Vec<Rational>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson { order: self.order(), coefficients: self.coefficients.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(d)?;
        if raw.coefficients.len() != raw.order + 1 {
            return Err(serde::de::Error::custom("order does not match coefficient count"));
        }
        Ok(TruncatedSeries { coefficients: raw.coefficients })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_odd_numbers() {
        let p = TruncatedSeries::from_ints([0, 1, 3, 5, 7, 9]);
        assert_eq!(difference_transform(&p, 1), TruncatedSeries::from_ints([0, 1, 2, 2, 2, 2]));
        assert_eq!(difference_transform(&p, 0), p);
        assert_eq!(difference_transform(&p, 2), TruncatedSeries::from_ints([0, 1, 0, -1, 0, 0]).add(&TruncatedSeries::from_ints([0, 0, 1, 1, 0, 0])).unwrap());
    }

    #[test]
    fn summatory_inverts_difference() {
        let ones = TruncatedSeries::from_ints([1; 5]);
        assert_eq!(summatory_transform(&ones), TruncatedSeries::from_ints([1, 2, 3, 4, 5]));
        let p = TruncatedSeries::from_ints([4, -1, 7, 0, 2]);
        let mut back = difference_transform(&p, 3);
        for _ in 0..3 {
            back = summatory_transform(&back);
        }
        assert_eq!(back, p);
    }

    #[test]
    fn json_and_csv() {
        let s = TruncatedSeries::new(vec![rational::ratio(1, 2), rational::int(-3)]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"order":1,"coefficients":["1/2","-3"]}"#);
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&j).unwrap(), s);
        assert_eq!(s.to_csv(), "index,value\n0,1/2\n1,-3\n");
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":3,"coefficients":["1"]}"#).is_err());
    }
}
