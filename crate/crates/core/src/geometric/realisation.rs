//! Tile lengths, left endpoints of the tiling of the half-line, the series
//! `G(X) = Σ t_n X^n`, and the two-letter classification.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::period::{rational_form_from_witness, PeriodWitness, RationalForm};
use crate::genfun::verdict::PeriodBounds;
use crate::geometric::quadratic::{square_free_decomposition, QuadraticReal};
use crate::poly::ExactPolynomial;
use crate::rational::{self, Rational};
use crate::subst::fixed::{FixedPointSeed, FixedWordStream};
use crate::subst::matrix::substitution_matrix;
use crate::subst::pf::pf_data;
use crate::subst::substitution::Substitution;
use crate::subst::verdict::{aperiodicity_verdict, AperiodicityVerdict};

/// Tile length per letter, in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthAssignment {
    pub lengths: Vec<QuadraticReal>,
    /// The eigenvalue the lengths were solved for.
    pub lambda: QuadraticReal,
    /// Set when `λ_PF` has degree above 2 and a rational approximation of
    /// it was used; `residual` then bounds `max_j |(ℓA − λ̂ℓ)_j|`.
    pub approximate: bool,
    #[serde(with = "crate::rational::serde_exact_option")]
    pub residual: Option<Rational>,
}

fn quadratic_root(min_poly: &ExactPolynomial) -> Result<QuadraticReal> {
    // X² + c1·X + c0, monic with integer coefficients.
    let c1 = min_poly.coeff(1);
    let c0 = min_poly.coeff(0);
    let disc = &c1 * &c1 - rational::int(4) * &c0;
    let disc: u64 = num_traits::ToPrimitive::to_u64(&disc.to_integer()).ok_or(Error::Overflow("discriminant"))?;
    let (s, d) = square_free_decomposition(disc);
    let half = rational::ratio(1, 2);
    QuadraticReal::new(-&c1 * &half, rational::int(s as i64) * half, d)
}

/// Solves `ℓ (A − λI) = 0` with `ℓ_k = 1` by elimination over `Q(√D)`.
fn left_kernel(rows: &[Vec<u64>], lambda: &QuadraticReal) -> Result<Vec<QuadraticReal>> {
    let k = rows.len();
    let entry = |i: usize, j: usize| {
        let a = QuadraticReal::from_int(rows[i][j] as i64);
        if i == j {
            &a - lambda
        } else {
            a
        }
    };
    // Equation j: Σ_{i<k−1} ℓ_i M_ij = −M_{k−1, j}.
    let mut eqs: Vec<Vec<QuadraticReal>> = (0..k)
        .map(|j| {
            let mut row: Vec<QuadraticReal> = (0..k - 1).map(|i| entry(i, j)).collect();
            row.push(-entry(k - 1, j));
            row
        })
        .collect();
    let n = k - 1;
    for col in 0..n {
        let pivot = (col..k).find(|&r| !eqs[r][col].is_zero()).ok_or_else(|| Error::Invalid("eigenvector is not unique".into()))?;
        eqs.swap(col, pivot);
        let inv = &QuadraticReal::one() / &eqs[col][col];
        let prow: Vec<QuadraticReal> = eqs[col].iter().map(|x| x * &inv).collect();
        eqs[col] = prow.clone();
        for (r, row) in eqs.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    let mut out: Vec<QuadraticReal> = (0..n).map(|i| eqs[i][n].clone()).collect();
    out.push(QuadraticReal::one());
    Ok(out)
}

/// Left PF eigenvector, normalized so the last letter has length 1.
pub fn natural_lengths(s: &Substitution) -> Result<LengthAssignment> {
    let m = substitution_matrix(s);
    let pf = pf_data(&m)?;
    let (lambda, approximate) = match (pf.is_rational, pf.min_poly.degree()) {
        (true, _) => (QuadraticReal::rational(pf.value.clone().expect("rational PF value")), false),
        (false, 2) => (quadratic_root(&pf.min_poly)?, false),
        _ => {
            let mid = (&pf.enclosure.lower + &pf.enclosure.upper) / rational::int(2);
            (QuadraticReal::rational(mid), true)
        }
    };
    let lengths = left_kernel(m.rows(), &lambda)?;
    if lengths.iter().any(|l| !l.is_positive()) {
        return Err(Error::NonPositiveLength);
    }
    let residual = if approximate {
        let k = lengths.len();
        let mut worst = Rational::zero();
        for j in 0..k {
            let mut r = -(&lengths[j] * &lambda);
            for (i, l) in lengths.iter().enumerate() {
                r = &r + &l.scale(&rational::int(m.get(i, j) as i64));
            }
            let abs = if r.signum() < 0 { -r } else { r };
            worst = worst.max(abs.a().clone());
        }
        Some(worst)
    } else {
        None
    };
    Ok(LengthAssignment { lengths, lambda, approximate, residual })
}

fn check_positive(lengths: &[QuadraticReal], s: &Substitution) -> Result<()> {
    if lengths.len() != s.size() {
        return Err(Error::Invalid(format!("{} lengths for {} letters", lengths.len(), s.size())));
    }
    if lengths.iter().any(|l| !l.is_positive()) {
        return Err(Error::NonPositiveLength);
    }
    Ok(())
}

/// `t_0 = 0`, `t_{n+1} = t_n + |I_{w_n}|`, for `n ≤ order`.
pub fn endpoint_sequence(s: &Substitution, seed: FixedPointSeed, lengths: &[QuadraticReal], order: usize) -> Result<Vec<QuadraticReal>> {
    check_positive(lengths, s)?;
    let mut out = Vec::with_capacity(order + 1);
    let mut t = QuadraticReal::zero();
    out.push(t.clone());
    for l in FixedWordStream::new(s, seed).take(order) {
        t = t.checked_add(&lengths[l as usize])?;
        out.push(t.clone());
    }
    Ok(out)
}

/// Endpoints as CSV rows: index, exact value, 50-digit decimal.
pub fn endpoints_csv(endpoints: &[QuadraticReal]) -> String {
    let mut out = String::from("index,exact,decimal\n");
    for (i, t) in endpoints.iter().enumerate() {
        out.push_str(&format!("{i},{t},{}\n", t.to_decimal(50)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricSeries {
    /// `t_0 … t_N`.
    pub coefficients: Vec<QuadraticReal>,
    /// `(1 − X)·G = X·C_g` held at every coefficient.
    pub identity_holds: bool,
}

pub fn geometric_series(s: &Substitution, seed: FixedPointSeed, lengths: &[QuadraticReal], order: usize) -> Result<GeometricSeries> {
    let coefficients = endpoint_sequence(s, seed, lengths, order)?;
    let weights: Vec<&QuadraticReal> = FixedWordStream::new(s, seed).take(order).map(|l| &lengths[l as usize]).collect();
    let identity_holds = coefficients[0].is_zero()
        && (1..=order).all(|n| (&coefficients[n] - &coefficients[n - 1]) == *weights[n - 1]);
    Ok(GeometricSeries { coefficients, identity_holds })
}

/// `C_g = difference · C_{a_1} + base / (1 − X)` for two letters, with
/// `difference = g(a_1) − g(a_2)` and `base = g(a_2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLetterReduction {
    pub difference: QuadraticReal,
    pub base: QuadraticReal,
    pub verified_terms: usize,
}

pub fn reduce_two_letter(s: &Substitution, seed: FixedPointSeed, lengths: &[QuadraticReal]) -> Result<TwoLetterReduction> {
    const TERMS: usize = 1000;
    if s.size() != 2 || lengths.len() != 2 {
        return Err(Error::WrongAlphabetSize(s.size()));
    }
    let difference = lengths[0].checked_sub(&lengths[1])?;
    let base = lengths[1].clone();
    for l in FixedWordStream::new(s, seed).take(TERMS) {
        let rhs = if l == 0 { &difference + &base } else { base.clone() };
        if rhs != lengths[l as usize] {
            return Err(Error::Invalid("two-letter reduction failed".into()));
        }
    }
    Ok(TwoLetterReduction { difference, base, verified_terms: TERMS })
}

/// Which arm of the two-letter dichotomy holds for `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum TwoLetterClass {
    /// `G = length · X/(1 − X)²`.
    #[serde(rename = "a")]
    EqualLengths { length: QuadraticReal },
    /// `G = difference · X·P/((1 − X)(1 − X^d)) + base · X/(1 − X)²`.
    #[serde(rename = "b")]
    EventuallyPeriodic {
        difference: QuadraticReal,
        base: QuadraticReal,
        /// `P / (1 − X^d)` is the characteristic series of the first letter.
        form: RationalForm,
        witness: PeriodWitness,
        verified_terms: usize,
    },
    /// `G` is transcendental over `Q(X)`.
    #[serde(rename = "c")]
    Transcendental,
    #[serde(rename = "inconclusive")]
    Inconclusive { max_preperiod: usize, max_period: usize },
}

pub fn classify_two_letter(s: &Substitution, seed: FixedPointSeed, lengths: &[QuadraticReal], bounds: PeriodBounds) -> Result<TwoLetterClass> {
    let red = reduce_two_letter(s, seed, lengths)?;
    check_positive(lengths, s)?;
    if red.difference.is_zero() {
        return Ok(TwoLetterClass::EqualLengths { length: red.base });
    }
    match aperiodicity_verdict(s, bounds.max_preperiod, bounds.max_period)? {
        AperiodicityVerdict::AperiodicByIrrationalPF => Ok(TwoLetterClass::Transcendental),
        AperiodicityVerdict::InconclusiveUpTo { .. } => {
            Ok(TwoLetterClass::Inconclusive { max_preperiod: bounds.max_preperiod, max_period: bounds.max_period })
        }
        AperiodicityVerdict::EventuallyPeriodic { preperiod, period } => {
            let witness = PeriodWitness { preperiod, period };
            let n = bounds.prefix_len();
            let indicator: Vec<Rational> =
                FixedWordStream::new(s, seed).take(n).map(|l| rational::int(i64::from(l == 0))).collect();
            let form = rational_form_from_witness(&indicator, witness)?;
            // Check G coefficientwise against the endpoints.
            let shifted = RationalForm { numerator: form.numerator.shift(1), period_d: form.period_d, summation_order: 1 };
            let r = shifted.expand(n + 1);
            let t = endpoint_sequence(s, seed, lengths, n)?;
            for (k, tk) in t.iter().enumerate() {
                let g = &red.difference.scale(&r[k]) + &red.base.scale(&rational::int(k as i64));
                if &g != tk {
                    return Err(Error::WitnessInvalid { preperiod, period });
                }
            }
            Ok(TwoLetterClass::EventuallyPeriodic {
                difference: red.difference,
                base: red.base,
                form,
                witness,
                verified_terms: n + 1,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::subst::fixed::fixed_point_seed;
    use crate::subst::substitution::catalog;

    fn tau() -> QuadraticReal {
        QuadraticReal::new(ratio(1, 2), ratio(1, 2), 5).unwrap()
    }

    fn q(n: i64) -> QuadraticReal {
        QuadraticReal::from_int(n)
    }

    #[test]
    fn natural_lengths_of_corpus() {
        let fib = natural_lengths(&catalog::fibonacci()).unwrap();
        assert_eq!(fib.lengths, vec![tau(), q(1)]);
        assert!(!fib.approximate);
        let p2 = natural_lengths(&catalog::period_two()).unwrap();
        assert_eq!(p2.lengths, vec![q(1), q(1)]);
        let single = natural_lengths(&Substitution::from_rules(&[('a', "aa")]).unwrap()).unwrap();
        assert_eq!(single.lengths, vec![q(1)]);
    }

    #[test]
    fn lengths_are_left_eigenvectors() {
        for s in [catalog::fibonacci(), catalog::xyz(), catalog::fibonacci_pairs(), catalog::thue_morse()] {
            let la = natural_lengths(&s).unwrap();
            let m = substitution_matrix(&s);
            for j in 0..s.size() {
                let mut lhs = QuadraticReal::zero();
                for (i, l) in la.lengths.iter().enumerate() {
                    lhs = &lhs + &l.scale(&int(m.get(i, j) as i64));
                }
                assert_eq!(lhs, &la.lengths[j] * &la.lambda);
            }
        }
    }

    #[test]
    fn cubic_eigenvalue_is_flagged() {
        // a -> abc, b -> a, c -> b: X³ − X² − X − 1 (tribonacci).
        let s = Substitution::from_rules(&[('a', "abc"), ('b', "a"), ('c', "b")]).unwrap();
        let la = natural_lengths(&s).unwrap();
        assert!(la.approximate);
        assert!(la.residual.unwrap() < ratio(1, 1_000_000_000));
        assert!((la.lengths[0].to_f64() - 1.839286755214161).abs() < 1e-9);
    }

    #[test]
    fn fibonacci_endpoints() {
        let s = catalog::fibonacci();
        let seed = fixed_point_seed(&s).unwrap();
        let t = endpoint_sequence(&s, seed, &[tau(), q(1)], 4).unwrap();
        assert_eq!(t, vec![q(0), tau(), &tau() + &q(1), &tau().scale(&int(2)) + &q(1), &tau().scale(&int(3)) + &q(1)]);
        let g = geometric_series(&s, seed, &[tau(), q(1)], 100).unwrap();
        assert!(g.identity_holds);
        assert!(endpoint_sequence(&s, seed, &[q(0), q(1)], 4).is_err());
    }

    #[test]
    fn endpoints_with_unit_and_periodic_lengths() {
        let s = catalog::thue_morse();
        let seed = fixed_point_seed(&s).unwrap();
        let t = endpoint_sequence(&s, seed, &[q(1), q(1)], 5).unwrap();
        assert_eq!(t, (0..6).map(q).collect::<Vec<_>>());
        let s = catalog::period_two();
        let seed = fixed_point_seed(&s).unwrap();
        let t = endpoint_sequence(&s, seed, &[q(2), q(1)], 4).unwrap();
        assert_eq!(t, [0, 2, 3, 5, 6].map(q).to_vec());
    }

    #[test]
    fn csv_has_fifty_digits() {
        let csv = endpoints_csv(&[q(0), tau()]);
        assert_eq!(csv.lines().nth(2).unwrap(), "1,1/2 + 1/2*√5,1.61803398874989484820458683436563811772030917980576");
    }

    #[test]
    fn two_letter_reduction() {
        let s = catalog::fibonacci();
        let seed = fixed_point_seed(&s).unwrap();
        let r = reduce_two_letter(&s, seed, &[tau(), q(1)]).unwrap();
        assert_eq!((r.difference, r.base), (&tau() - &q(1), q(1)));
        let r = reduce_two_letter(&s, seed, &[q(3), q(3)]).unwrap();
        assert_eq!((r.difference, r.base), (q(0), q(3)));
        let r = reduce_two_letter(&s, seed, &[q(2), q(1)]).unwrap();
        assert_eq!((r.difference, r.base), (q(1), q(1)));
        let xyz = catalog::xyz();
        assert_eq!(
            reduce_two_letter(&xyz, fixed_point_seed(&xyz).unwrap(), &[q(1), q(1), q(1)]),
            Err(Error::WrongAlphabetSize(3))
        );
    }

    #[test]
    fn classification() {
        let b = PeriodBounds::default();
        let fib = catalog::fibonacci();
        let seed = fixed_point_seed(&fib).unwrap();
        assert_eq!(classify_two_letter(&fib, seed, &[tau(), q(1)], b).unwrap(), TwoLetterClass::Transcendental);
        assert_eq!(classify_two_letter(&fib, seed, &[q(1), q(1)], b).unwrap(), TwoLetterClass::EqualLengths { length: q(1) });
        let p2 = catalog::period_two();
        let seed = fixed_point_seed(&p2).unwrap();
        match classify_two_letter(&p2, seed, &[q(2), q(1)], b).unwrap() {
            TwoLetterClass::EventuallyPeriodic { form, witness, difference, base, .. } => {
                assert_eq!(witness, PeriodWitness { preperiod: 0, period: 2 });
                assert_eq!(form.numerator, ExactPolynomial::one());
                assert_eq!((difference, base), (q(1), q(1)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let tm = catalog::thue_morse();
        let seed = fixed_point_seed(&tm).unwrap();
        assert!(matches!(classify_two_letter(&tm, seed, &[q(2), q(1)], b).unwrap(), TwoLetterClass::Inconclusive { .. }));
    }
}
