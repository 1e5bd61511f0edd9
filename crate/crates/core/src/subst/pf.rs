//! Characteristic polynomial, minimal polynomial of the Perron–Frobenius
//! eigenvalue, and an exact rational enclosure of it.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::rational::{self, Rational};
use crate::realroots::{self, RootBracket};
use crate::subst::matrix::SubstitutionMatrix;

/// Enclosures are refined to width `2^-ENCLOSURE_BITS` (below `10^-12`).
pub const ENCLOSURE_BITS: u32 = 41;

/// Subset search for factors is skipped above this degree.
const MAX_FACTOR_SEARCH_DEGREE: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfData {
    pub char_poly: ExactPolynomial,
    pub min_poly: ExactPolynomial,
    /// `lower < λ_PF < upper`; the minimal polynomial has opposite signs at
    /// the two ends.
    pub enclosure: RootBracket,
    pub is_rational: bool,
    /// Exact value when `is_rational`.
    #[serde(with = "crate::rational::serde_exact_option", default)]
    pub value: Option<Rational>,
    pub primitivity_witness: Option<usize>,
}

impl PfData {
    pub fn approx(&self) -> f64 {
        rational::to_f64(&((&self.enclosure.lower + &self.enclosure.upper) / rational::int(2)))
    }
}

/// `det(X·I − A)` by the Faddeev–LeVerrier recurrence; every division is exact.
pub fn char_poly(m: &SubstitutionMatrix) -> ExactPolynomial {
    let k = m.size();
    let a: Vec<Vec<BigInt>> = m.rows().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    // c[i] is the coefficient of X^i.
    let mut c = vec![BigInt::zero(); k + 1];
    c[k] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); k]; k];
    for step in 1..=k {
        // M_step = A·M_{step-1} + c_{k-step+1}·I
        let mut next = matmul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[k - step + 1];
        }
        mk = next;
        let am = matmul(&a, &mk);
        let trace: BigInt = (0..k).map(|i| am[i][i].clone()).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(step));
        debug_assert!(r.is_zero());
        c[k - step] = q;
    }
    ExactPolynomial::from_bigints(&c)
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = a.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

/// Square-free part, made monic (and integral, since the input is monic).
fn square_free(p: &ExactPolynomial) -> ExactPolynomial {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

fn integer_roots(p: &ExactPolynomial, bound: &BigInt) -> Vec<BigInt> {
    let c0 = p.coeff(0);
    let mut out = Vec::new();
    let mut r = -bound.clone();
    while &r <= bound {
        let q = Rational::from_integer(r.clone());
        let divides = r.is_zero() || (c0.numer() % &r).is_zero();
        if divides && p.eval(&q).is_zero() {
            out.push(r.clone());
        }
        r += 1;
    }
    out
}

/// Numerical roots of a polynomial with real coefficients by Aberth iteration.
fn numeric_roots(p: &ExactPolynomial) -> Vec<Complex64> {
    let coeffs: Vec<f64> = p.coefficients().iter().map(rational::to_f64).collect();
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(1.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in monic[..n].iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| Complex64::from_polar(radius * 0.9, 0.4 + 2.0 * std::f64::consts::PI * i as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    z
}

fn round_to_integer_poly(roots: &[Complex64]) -> Option<ExactPolynomial> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= ci * r;
        }
        c = next;
    }
    let mut ints = Vec::with_capacity(c.len());
    for ci in &c {
        let re = ci.re.round();
        if (ci.re - re).abs() > 1e-6 * (1.0 + ci.re.abs()) || ci.im.abs() > 1e-6 * (1.0 + ci.norm()) {
            return None;
        }
        ints.push(BigInt::from(re.to_i64()?));
    }
    Some(ExactPolynomial::from_bigints(&ints))
}

fn combinations(n: usize, r: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == r {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            if go(i + 1, n, r, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, r, &mut Vec::new(), f)
}

/// Smallest-degree rational factor of the square-free monic `p` vanishing
/// at the root approximated by `target`.
fn factor_containing(p: &ExactPolynomial, target: f64) -> ExactPolynomial {
    let n = p.degree() as usize;
    if n <= 3 || n > MAX_FACTOR_SEARCH_DEGREE {
        return p.clone();
    }
    let roots = numeric_roots(p);
    let pick = (0..n)
        .min_by(|&i, &j| {
            let di = (roots[i] - Complex64::new(target, 0.0)).norm();
            let dj = (roots[j] - Complex64::new(target, 0.0)).norm();
            di.total_cmp(&dj)
        })
        .expect("positive degree");
    let others: Vec<usize> = (0..n).filter(|&i| i != pick).collect();
    for extra in 1..n - 1 {
        let mut found = None;
        combinations(others.len(), extra, &mut |idx| {
            let mut chosen = vec![roots[pick]];
            chosen.extend(idx.iter().map(|&i| roots[others[i]]));
            if let Some(f) = round_to_integer_poly(&chosen) {
                let (_, r) = p.div_rem(&f);
                if r.is_zero() {
                    found = Some(f);
                    return true;
                }
            }
            false
        });
        if let Some(f) = found {
            return f;
        }
    }
    p.clone()
}

/// PF data of a primitive matrix.
pub fn pf_data(m: &SubstitutionMatrix) -> Result<PfData> {
    let witness = m.is_primitive().ok_or(Error::NotPrimitive)?;
    let cp = char_poly(m);
    // Every eigenvalue is bounded by the largest row sum.
    let bound = BigInt::from(m.row_sums()?.into_iter().max().unwrap_or(1));
    let top = Rational::from_integer(&bound + 1);
    let eps = rational::dyadic(BigInt::one(), ENCLOSURE_BITS);
    let sqf = square_free(&cp);
    let int_roots = integer_roots(&sqf, &bound);
    let mut rest = sqf.clone();
    for r in &int_roots {
        rest = rest.div_rem(&ExactPolynomial::from_bigints(&[-r.clone(), BigInt::one()])).0;
    }
    let largest_int = int_roots.iter().max().cloned();
    let floor = match &largest_int {
        Some(r) => Rational::from_integer(r.clone()),
        None => Rational::from_integer(-&bound - 1),
    };
    let rest_dominates = rest.degree() > 0 && realroots::count_roots(&rest, &floor, &top)? > 0;
    if !rest_dominates {
        let lambda = largest_int.ok_or(Error::NoRoot)?;
        let value = Rational::from_integer(lambda.clone());
        let min_poly = ExactPolynomial::from_bigints(&[-lambda, BigInt::one()]);
        return Ok(PfData {
            char_poly: cp,
            min_poly,
            enclosure: RootBracket { lower: &value - &eps, upper: &value + &eps },
            is_rational: true,
            value: Some(value),
            primitivity_witness: Some(witness),
        });
    }
    let rough = realroots::isolate_max_root(&rest, &floor, &top, &rational::ratio(1, 1 << 20))?;
    let min_poly = factor_containing(&rest, rational::to_f64(&rough.upper));
    let enclosure = realroots::isolate_max_root(&min_poly, &rough.lower, &rough.upper, &eps)?;
    Ok(PfData {
        char_poly: cp,
        min_poly,
        enclosure,
        is_rational: false,
        value: None,
        primitivity_witness: Some(witness),
    })
}

/// Sign of `p` at `x`, for checking enclosures.
pub fn sign_at(p: &ExactPolynomial, x: &Rational) -> i32 {
    let v = p.eval(x);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subst::matrix::substitution_matrix;
    use crate::subst::substitution::{catalog, Substitution};

    fn pf(s: &Substitution) -> PfData {
        pf_data(&substitution_matrix(s)).unwrap()
    }

    fn check_enclosure(d: &PfData) {
        assert!(d.enclosure.width() <= rational::ratio(1, 1_000_000_000_000));
        assert_eq!(sign_at(&d.min_poly, &d.enclosure.lower) * sign_at(&d.min_poly, &d.enclosure.upper), -1);
    }

    #[test]
    fn fibonacci_golden_ratio() {
        let d = pf(&catalog::fibonacci());
        assert_eq!(d.char_poly, ExactPolynomial::from_ints(&[-1, -1, 1]));
        assert_eq!(d.min_poly, ExactPolynomial::from_ints(&[-1, -1, 1]));
        assert!(!d.is_rational);
        assert!(d.enclosure.lower > rational::parse_rational("1.618033").unwrap());
        assert!(d.enclosure.upper < rational::parse_rational("1.618034").unwrap());
        check_enclosure(&d);
    }

    #[test]
    fn xyz_and_pairs() {
        let d = pf(&catalog::xyz());
        // det(XI - A) = X(X^2 - 3X + 1)
        assert_eq!(d.char_poly, ExactPolynomial::from_ints(&[0, 1, -3, 1]));
        assert_eq!(d.min_poly, ExactPolynomial::from_ints(&[1, -3, 1]));
        assert!((d.approx() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        check_enclosure(&d);

        let d = pf(&catalog::fibonacci_pairs());
        assert_eq!(d.min_poly, ExactPolynomial::from_ints(&[-1, -4, 1]));
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((d.approx() - tau.powi(3)).abs() < 1e-12);
        check_enclosure(&d);
    }

    #[test]
    fn rational_eigenvalues() {
        let d = pf(&catalog::thue_morse());
        assert!(d.is_rational);
        assert_eq!(d.value, Some(rational::int(2)));
        assert_eq!(d.min_poly, ExactPolynomial::from_ints(&[-2, 1]));
        check_enclosure(&d);
        let d = pf(&Substitution::from_rules(&[('a', "a")]).unwrap());
        assert_eq!(d.value, Some(rational::int(1)));
    }

    #[test]
    fn quartic_factor_search() {
        // a -> ab, b -> c, c -> d, d -> a: char poly X^4 - X^3 - 1, irreducible.
        let s = Substitution::from_rules(&[('a', "ab"), ('b', "c"), ('c', "d"), ('d', "a")]).unwrap();
        let d = pf(&s);
        assert_eq!(d.min_poly, ExactPolynomial::from_ints(&[-1, 0, 0, -1, 1]));
        check_enclosure(&d);
        // Block-diagonal-like product: Fibonacci on a,b and the same on c,d
        // linked weakly; the PF factor must be found by the subset search.
        let s = Substitution::from_rules(&[('a', "abc"), ('b', "a"), ('c', "cda"), ('d', "c")]).unwrap();
        let d = pf(&s);
        let (_, r) = d.char_poly.div_rem(&d.min_poly);
        assert!(r.is_zero());
        assert!(d.min_poly.degree() <= d.char_poly.degree());
        check_enclosure(&d);
    }

    #[test]
    fn not_primitive() {
        let s = Substitution::from_rules(&[('a', "ab"), ('b', "b")]).unwrap();
        assert_eq!(pf_data(&substitution_matrix(&s)), Err(Error::NotPrimitive));
    }
}
