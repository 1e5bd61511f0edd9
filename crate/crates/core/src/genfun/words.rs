//! Characteristic and position polynomials of finite words, and how they
//! combine under concatenation.

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::rational::{self, Rational};
use crate::subst::word::{LetterId, Word};

/// `Σ 1_a(w_n) X^n`.
pub fn char_prefix_poly(w: &Word, letter: LetterId) -> ExactPolynomial {
    ExactPolynomial::from_int_vec(w.letters().iter().map(|&l| i64::from(l == letter)).collect())
}

/// 0-based positions of `letter` in `w`.
pub fn positions(w: &[LetterId], letter: LetterId) -> Vec<u64> {
    w.iter().enumerate().filter(|(_, &l)| l == letter).map(|(i, _)| i as u64).collect()
}

/// `Σ_{n≥1} p(n) X^n` with `p(n)` the position of the `n`-th occurrence.
pub fn position_prefix_poly(w: &Word, letter: LetterId) -> ExactPolynomial {
    let pos = positions(w.letters(), letter);
    let mut c = Vec::with_capacity(pos.len() + 1);
    c.push(0);
    c.extend(pos.into_iter().map(|p| p as i64));
    ExactPolynomial::from_int_vec(c)
}

/// `C_{uv} = C_u + X^{|u|} C_v`.
pub fn concat_char(cu: &ExactPolynomial, cv: &ExactPolynomial, len_u: usize) -> Result<ExactPolynomial> {
    let mut out = cu.clone();
    concat_char_into(&mut out, cv, len_u)?;
    Ok(out)
}

/// In-place form of [`concat_char`].
pub fn concat_char_into(acc: &mut ExactPolynomial, cv: &ExactPolynomial, len_u: usize) -> Result<()> {
    if acc.degree() >= len_u as isize {
        return Err(Error::DegreeOverflow { degree: acc.degree(), len: len_u });
    }
    acc.add_scaled_shifted(cv, &Rational::one(), len_u);
    Ok(())
}

/// `P_{uv} = P_u + X^{c_u} P_v + |u| · X^{c_u} (X + … + X^{c_v})`, where
/// `c_u`, `c_v` count the letter in `u` and `v`.
///
/// A polynomial's degree never exceeds its count; it falls short only when
/// the letter occurs just once, at position 0, and the polynomial is zero.
pub fn concat_pos(
    pu: &ExactPolynomial,
    pv: &ExactPolynomial,
    len_u: usize,
    count_u: usize,
    count_v: usize,
) -> Result<ExactPolynomial> {
    let mut out = pu.clone();
    concat_pos_into(&mut out, pv, len_u, count_u, count_v)?;
    Ok(out)
}

/// In-place form of [`concat_pos`].
pub fn concat_pos_into(
    acc: &mut ExactPolynomial,
    pv: &ExactPolynomial,
    len_u: usize,
    count_u: usize,
    count_v: usize,
) -> Result<()> {
    for (p, count) in [(&*acc, count_u), (pv, count_v)] {
        if p.degree() > count as isize {
            return Err(Error::CountMismatch { degree: p.degree(), count });
        }
    }
    acc.add_scaled_shifted(pv, &Rational::one(), count_u);
    if count_v > 0 && len_u > 0 {
        acc.add_scaled_shifted(&ExactPolynomial::geometric_block(count_v), &rational::int(len_u as i64), count_u);
    }
    Ok(())
}
