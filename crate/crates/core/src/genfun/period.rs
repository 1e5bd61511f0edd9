//! Eventual periodicity and the rational forms it certifies.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::rational::Rational;

/// `c_{n+d} = c_n` for every checked `n ≥ preperiod`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodWitness {
    pub preperiod: usize,
    pub period: usize,
}

impl PeriodWitness {
    /// Whether the witness holds on all of `seq`.
    pub fn holds_on<T: PartialEq>(&self, seq: &[T]) -> bool {
        let d = self.period;
        d >= 1 && (self.preperiod..seq.len().saturating_sub(d)).all(|n| seq[n + d] == seq[n])
    }
}

/// Smallest period `d ≤ max_period`, then smallest preperiod `N ≤ max_preperiod`,
/// such that `seq[n + d] = seq[n]` for all `N ≤ n < len − d`.
///
/// Requires `len ≥ max_preperiod + 10·max_period`, so every reported witness
/// is confirmed over at least ten periods past its preperiod.
pub fn detect_period<T: PartialEq>(seq: &[T], max_preperiod: usize, max_period: usize) -> Result<Option<PeriodWitness>> {
    let need = max_preperiod + 10 * max_period;
    if seq.len() < need || max_period == 0 {
        return Err(Error::InsufficientData { have: seq.len(), need: need.max(10) });
    }
    for d in 1..=max_period {
        // Preperiod = one past the last mismatch.
        let preperiod = (0..seq.len() - d).rev().find(|&n| seq[n + d] != seq[n]).map_or(0, |n| n + 1);
        if preperiod <= max_preperiod {
            return Ok(Some(PeriodWitness { preperiod, period: d }));
        }
    }
    Ok(None)
}

/// `numerator / ((1 − X^period) · (1 − X)^summation_order)`.
///
/// Characteristic series use `summation_order = 0`; position series, which
/// are summatory images of eventually periodic gap sequences, use 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalForm {
    #[serde(with = "numerator_json")]
    pub numerator: ExactPolynomial,
    pub period_d: usize,
    #[serde(default)]
    pub summation_order: usize,
}

mod numerator_json {
    use serde::{Deserializer, Serializer};

    use crate::poly::ExactPolynomial;
    use crate::rational::Rational;

    pub fn serialize<S: Serializer>(p: &ExactPolynomial, s: S) -> Result<S::Ok, S::Error> {
        crate::rational::serde_exact_vec::serialize(&p.coefficients(), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactPolynomial, D::Error> {
        let v: Vec<Rational> = crate::rational::serde_exact_vec::deserialize(d)?;
        Ok(ExactPolynomial::from_rationals(v))
    }
}

impl RationalForm {
    /// First `n` series coefficients.
    pub fn expand(&self, n: usize) -> Vec<Rational> {
        let mut c: Vec<Rational> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        let d = self.period_d;
        for i in d..n {
            let prev = c[i - d].clone();
            c[i] += prev;
        }
        for _ in 0..self.summation_order {
            for i in 1..n {
                let prev = c[i - 1].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// The same series multiplied by `1/(1 − X)`.
    pub fn summed(&self) -> RationalForm {
        RationalForm { summation_order: self.summation_order + 1, ..self.clone() }
    }

    /// Denominator as a polynomial.
    pub fn denominator(&self) -> ExactPolynomial {
        let mut den = ExactPolynomial::one();
        den.add_scaled_shifted(&ExactPolynomial::one(), &-Rational::one(), self.period_d);
        let one_minus_x = ExactPolynomial::from_ints(&[1, -1]);
        for _ in 0..self.summation_order {
            den = &den * &one_minus_x;
        }
        den
    }
}

impl fmt::Display for RationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        let simple = self.numerator.coefficients().iter().filter(|c| !c.is_zero()).count() <= 1;
        let num = if simple { num } else { format!("({num})") };
        let pow = |e: usize, base: &str| if e == 1 { format!("({base})") } else { format!("({base})^{e}") };
        let xd = if self.period_d == 1 { "X".to_string() } else { format!("X^{}", self.period_d) };
        let den = if self.period_d == 1 {
            pow(self.summation_order + 1, "1 - X")
        } else if self.summation_order == 0 {
            format!("(1 - {xd})")
        } else {
            format!("(1 - {xd})*{}", pow(self.summation_order, "1 - X"))
        };
        write!(f, "{num}/{den}")
    }
}

/// Builds `P = P₁(1 − X^d) + X^N P₂` from a witness, where `P₁` is the
/// preperiodic part and `P₂` one period block, and re-expands it against
/// every coefficient of `coeffs`.
pub fn rational_form_from_witness(coeffs: &[Rational], witness: PeriodWitness) -> Result<RationalForm> {
    let PeriodWitness { preperiod: n0, period: d } = witness;
    let invalid = Error::WitnessInvalid { preperiod: n0, period: d };
    if d == 0 || coeffs.len() < n0 + d || !witness.holds_on(coeffs) {
        return Err(invalid);
    }
    let p1 = ExactPolynomial::from_rationals(coeffs[..n0].to_vec());
    let p2 = ExactPolynomial::from_rationals(coeffs[n0..n0 + d].to_vec());
    let mut p = p1.clone();
    p.add_scaled_shifted(&p1, &-Rational::one(), d);
    p.add_scaled_shifted(&p2, &Rational::one(), n0);
    let form = RationalForm { numerator: p, period_d: d, summation_order: 0 };
    if form.expand(coeffs.len()) != coeffs {
        return Err(invalid);
    }
    Ok(form)
}
