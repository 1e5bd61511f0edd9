//! Exact real-root counting and isolation with Sturm chains.
//!
//! Chains are kept as primitive integer polynomials: every member is a
//! positive multiple of the textbook member `p_{i+1} = -rem(p_{i-1}, p_i)`,
//! so sign variations are unchanged while coefficient growth stays bounded
//! by content stripping. Points are evaluated with homogeneous integer
//! Horner schemes, which for dyadic points reduce to shifts.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::rational::{self, Rational};

type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = p
        .iter()
        .filter(|c| !c.is_zero())
        .min_by_key(|c| c.bits())
        .map_or_else(BigInt::zero, |c| c.abs());
    for c in p {
        if c.is_zero() {
            continue;
        }
        // a remainder test is far cheaper than a big gcd when g | c
        if !g.is_zero() && (c % &g).is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(p: &mut IntPoly) {
    let g = content(p);
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
}

fn derivative(p: &[BigInt]) -> IntPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Next chain member: a positive multiple of `-rem(a, b)`.
fn sturm_step(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let delta = a.len() - b.len();
    let mut r: IntPoly = a.to_vec();
    for k in (0..=delta).rev() {
        let top = r[db + k].clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        if !top.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &top * bj;
            }
        }
        r.pop();
    }
    trim(&mut r);
    // r = lc^(delta+1) * rem(a, b)
    let multiplier_negative = lc.is_negative() && (delta + 1) % 2 == 1;
    if !multiplier_negative {
        for c in r.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    make_primitive(&mut r);
    r
}

fn exact_quotient(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let pa = ExactPolynomial::from_bigints(a);
    let pb = ExactPolynomial::from_bigints(b);
    let (q, r) = pa.div_rem(&pb);
    debug_assert!(r.is_zero());
    q.primitive_integer()
}

fn signum(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Sign of `p(x)` for an integer polynomial.
fn sign_at(p: &[BigInt], x: &Rational) -> i32 {
    if p.is_empty() {
        return 0;
    }
    let num = x.numer();
    let den = x.denom();
    let n = p.len() - 1;
    // q^n p(u/q) = sum c_i u^i q^(n-i); q > 0 so the sign is preserved.
    let shift = if (den & (den - BigInt::one())).is_zero() { Some(den.bits() - 1) } else { None };
    let mut acc = p[n].clone();
    match shift {
        Some(k) => {
            for i in (0..n).rev() {
                acc *= num;
                if !p[i].is_zero() {
                    acc += &p[i] << (k as usize * (n - i));
                }
            }
        }
        None => {
            let mut den_pow = BigInt::one();
            for i in (0..n).rev() {
                den_pow *= den;
                acc *= num;
                if !p[i].is_zero() {
                    acc += &p[i] * &den_pow;
                }
            }
        }
    }
    signum(&acc)
}

/// Divides out every factor `(den·X − num)` vanishing at `x`.
fn deflate(p: &[BigInt], x: &Rational) -> (IntPoly, usize) {
    let mut q = p.to_vec();
    let mut mult = 0;
    let linear = vec![-x.numer().clone(), x.denom().clone()];
    while q.len() > 1 && sign_at(&q, x) == 0 {
        q = exact_quotient(&q, &linear);
        mult += 1;
    }
    (q, mult)
}

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    members: Vec<IntPoly>,
    removed_square_factor: bool,
}

impl SturmChain {
    fn from_integer(p: IntPoly) -> Self {
        let mut chain = Self::raw(p.clone());
        let last = chain.last().expect("nonempty chain");
        if last.len() > 1 {
            // gcd(p, p') is non-constant: rebuild on the square-free part
            let sf = exact_quotient(&p, last);
            let mut rebuilt = Self::raw(sf);
            debug_assert_eq!(rebuilt.last().map(Vec::len), Some(1));
            std::mem::swap(&mut chain, &mut rebuilt);
            return SturmChain { members: chain, removed_square_factor: true };
        }
        SturmChain { members: chain, removed_square_factor: false }
    }

    fn raw(mut p0: IntPoly) -> Vec<IntPoly> {
        make_primitive(&mut p0);
        if p0.len() <= 1 {
            return vec![p0];
        }
        let mut p1 = derivative(&p0);
        make_primitive(&mut p1);
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].len() <= 1 {
                break;
            }
            let next = sturm_step(&chain[n - 2], &chain[n - 1]);
            if next.is_empty() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Chain members as rational polynomials (positive multiples of the
    /// textbook chain).
    pub fn members(&self) -> Vec<ExactPolynomial> {
        self.members.iter().map(|m| ExactPolynomial::from_bigints(m)).collect()
    }

    /// True when the input had repeated factors that were divided out.
    pub fn removed_square_factor(&self) -> bool {
        self.removed_square_factor
    }

    pub fn square_free_part(&self) -> ExactPolynomial {
        ExactPolynomial::from_bigints(&self.members[0])
    }

    pub fn sign_sequence(&self, x: &Rational) -> Vec<i32> {
        self.members.iter().map(|m| sign_at(m, x)).collect()
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for m in &self.members {
            let s = sign_at(m, x);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Distinct real roots in `(l, r]`. Valid even when `l` or `r` is a
    /// root, because the chain is built on a square-free polynomial.
    fn count_half_open(&self, l: &Rational, r: &Rational) -> usize {
        self.variations(l).saturating_sub(self.variations(r))
    }
}

pub fn sturm_chain(p: &ExactPolynomial) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SturmChain::from_integer(p.primitive_integer()))
}

/// Number of distinct real roots of `p` in `(l, r]`.
///
/// Fails with [`Error::EndpointIsRoot`] when `p(l) = 0`; callers shrink the
/// endpoint with [`shrink_left`].
pub fn count_roots(p: &ExactPolynomial, l: &Rational, r: &Rational) -> Result<usize> {
    if l >= r {
        return Err(Error::InvalidInterval(l.clone(), r.clone()));
    }
    let chain = sturm_chain(p)?;
    if sign_at(&chain.members[0], l) == 0 {
        return Err(Error::EndpointIsRoot(l.clone()));
    }
    Ok(chain.count_half_open(l, r))
}

/// Moves `l` right by steps of `2^-64` until `p(l) != 0`.
pub fn shrink_left(p: &ExactPolynomial, l: &Rational, r: &Rational) -> Result<Rational> {
    let step = rational::dyadic(BigInt::one(), 64);
    let ints = p.primitive_integer();
    let mut x = l.clone();
    while sign_at(&ints, &x) == 0 {
        x += &step;
        if &x >= r {
            return Err(Error::InvalidInterval(x, r.clone()));
        }
    }
    Ok(x)
}

/// Rational bracket `(lower, upper]` holding exactly the largest root of
/// interest: the root satisfies `lower < root <= upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBracket {
    #[serde(with = "crate::rational::serde_exact")]
    pub lower: Rational,
    #[serde(with = "crate::rational::serde_exact")]
    pub upper: Rational,
}

impl RootBracket {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower < x && x <= &self.upper
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Brackets the largest root of `p` in `(l, r]` to width `eps` by bisection
/// on exact Sturm counts.
pub fn isolate_max_root(p: &ExactPolynomial, l: &Rational, r: &Rational, eps: &Rational) -> Result<RootBracket> {
    if l >= r {
        return Err(Error::InvalidInterval(l.clone(), r.clone()));
    }
    if !eps.is_positive() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    let (q, _) = deflate(&p.primitive_integer(), l);
    if q.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::from_integer(q);
    isolate_with_chain(&chain, l, r, eps)
}

fn isolate_with_chain(chain: &SturmChain, l: &Rational, r: &Rational, eps: &Rational) -> Result<RootBracket> {
    if chain.count_half_open(l, r) == 0 {
        return Err(Error::NoRoot);
    }
    let mut lo = l.clone();
    let mut hi = r.clone();
    let v_hi = chain.variations(&hi);
    while &(&hi - &lo) > eps {
        let mid = midpoint(&lo, &hi);
        let v_mid = chain.variations(&mid);
        if v_mid > v_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootBracket { lower: lo, upper: hi })
}

/// Exact-arithmetic proof that a polynomial is strictly positive on an
/// open interval.
///
/// The Sturm data refer to `p / ((X - l)^left_multiplicity (X - r)^right_multiplicity)`,
/// whose root count on `(l, r]` is zero; the sample point fixes the sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionCertificate {
    pub polynomial_hash: String,
    pub degree: isize,
    #[serde(with = "crate::rational::serde_exact")]
    pub left: Rational,
    #[serde(with = "crate::rational::serde_exact")]
    pub right: Rational,
    pub left_multiplicity: usize,
    pub right_multiplicity: usize,
    pub variations_left: usize,
    pub variations_right: usize,
    pub root_count_in_interval: usize,
    #[serde(with = "crate::rational::serde_exact")]
    pub sample_point: Rational,
    pub sign_at_sample: String,
}

/// FNV-1a over the canonical coefficient strings.
pub fn polynomial_hash(p: &ExactPolynomial) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in p.coefficients() {
        for b in rational::to_exact_string(&c).bytes().chain(std::iter::once(b',')) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

impl ExclusionCertificate {
    /// Re-derives every field from `p` and checks it.
    pub fn verify(&self, p: &ExactPolynomial) -> bool {
        if polynomial_hash(p) != self.polynomial_hash || p.degree() != self.degree {
            return false;
        }
        if self.left >= self.right || !(self.left < self.sample_point && self.sample_point < self.right) {
            return false;
        }
        let (q, ml) = deflate(&p.primitive_integer(), &self.left);
        let (q, mr) = deflate(&q, &self.right);
        if ml != self.left_multiplicity || mr != self.right_multiplicity {
            return false;
        }
        let chain = SturmChain::from_integer(q);
        let vl = chain.variations(&self.left);
        let vr = chain.variations(&self.right);
        vl == self.variations_left
            && vr == self.variations_right
            && vl == vr
            && self.root_count_in_interval == 0
            && p.eval(&self.sample_point).is_positive()
            && self.sign_at_sample == "+"
    }
}

/// Certifies `p > 0` on the open interval `(l, r)`.
pub fn certify_positive(p: &ExactPolynomial, l: &Rational, r: &Rational) -> Result<ExclusionCertificate> {
    if l >= r {
        return Err(Error::InvalidInterval(l.clone(), r.clone()));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, ml) = deflate(&p.primitive_integer(), l);
    let (q, mr) = deflate(&q, r);
    let chain = SturmChain::from_integer(q);
    let vl = chain.variations(l);
    let vr = chain.variations(r);
    if vl != vr {
        let bracket = isolate_with_chain(&chain, l, r, &(r - l))?;
        return Err(Error::RootPresent(bracket.lower, bracket.upper));
    }
    let sample = midpoint(l, r);
    if !p.eval(&sample).is_positive() {
        return Err(Error::NotPositive(sample));
    }
    Ok(ExclusionCertificate {
        polynomial_hash: polynomial_hash(p),
        degree: p.degree(),
        left: l.clone(),
        right: r.clone(),
        left_multiplicity: ml,
        right_multiplicity: mr,
        variations_left: vl,
        variations_right: vr,
        root_count_in_interval: 0,
        sample_point: sample,
        sign_at_sample: "+".into(),
    })
}
