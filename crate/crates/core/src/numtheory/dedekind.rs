//! Dedekind sums `s(q, p)`.
//!
//! Three independent evaluations are provided: the defining sawtooth sum
//! (linear in `p`), Hickerson's negative continued fraction formula, and the
//! reciprocity recursion (logarithmic in `p`). All of them reduce `q` modulo
//! `p` first and take `s(0, 1) = 0`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{gcd, mod_inverse, neg_cont_frac};
use crate::{Error, Rational, Result};

fn check(q: i64, p: i64) -> Result<i64> {
    if p < 1 {
        return Err(Error::LensOrder(p));
    }
    let g = gcd(p, q);
    if g != 1 {
        return Err(Error::NotCoprime { a: q, b: p, gcd: g });
    }
    Ok(q.rem_euclid(p))
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `sum_{k=1}^{p-1} ((k/p)) ((kq/p))` with the sawtooth
/// `((x)) = x - floor(x) - 1/2` off the integers and `0` on them.
///
/// For `0 < k < p` both sawtooth values have denominator `2p`, so the sum is
/// accumulated as one integer over `4p^2`.
pub fn dedekind_direct(q: i64, p: i64) -> Result<Rational> {
    let q = check(q, p)? as i128;
    let p = p as i128;
    let mut acc: i128 = 0;
    for k in 1..p {
        let m = k * q % p;
        if m != 0 {
            let term = (2 * k - p)
                .checked_mul(2 * m - p)
                .ok_or(Error::Overflow("dedekind_direct"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("dedekind_direct"))?;
        }
    }
    Ok(ratio(acc, 4 * p * p))
}

/// Hickerson: `12 s(q,p) = sum m_i + (q + q*)/p - 3n` where
/// `p/q = [m_n, ..., m_1]` is the negative continued fraction.
pub fn dedekind_hickerson(q: i64, p: i64) -> Result<Rational> {
    let q = check(q, p)?;
    if p == 1 {
        return Ok(Rational::zero());
    }
    let cf = neg_cont_frac(p, q)?;
    let q_star = mod_inverse(q, p)?;
    let n = cf.len() as i128;
    let twelve_s = ratio(cf.term_sum() as i128 - 3 * n, 1) + ratio(q as i128 + q_star as i128, p);
    Ok(twelve_s / ratio(12, 1))
}

/// Reciprocity recursion
/// `s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq))/12`, unrolled into a loop
/// over the Euclidean remainder sequence.
pub fn dedekind_fast(q: i64, p: i64) -> Result<Rational> {
    let q = check(q, p)?;
    let (mut p, mut q) = (BigInt::from(p), BigInt::from(q));
    let mut acc = Rational::zero();
    let mut positive = true;
    while !q.is_zero() {
        // -1/4 + (p^2 + q^2 + 1)/(12pq) = (p^2 + q^2 + 1 - 3pq)/(12pq)
        let term = Rational::new(
            &p * &p + &q * &q + 1 - BigInt::from(3) * &p * &q,
            BigInt::from(12) * &p * &q,
        );
        if positive {
            acc += term;
        } else {
            acc -= term;
        }
        positive = !positive;
        let rem = &p % &q;
        p = std::mem::replace(&mut q, rem);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DedekindMethod {
    Direct,
    Hickerson,
    Fast,
}

/// `s(q, p)` together with its arguments, `q` reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DedekindSum {
    pub value: Rational,
    pub p: i64,
    pub q: i64,
}

impl DedekindSum {
    /// `12 p s(q, p)`, always an integer.
    pub fn scaled(&self) -> BigInt {
        let scaled = &self.value * Rational::from_integer(BigInt::from(12) * self.p);
        debug_assert!(scaled.is_integer());
        scaled.to_integer()
    }
}

pub fn dedekind(q: i64, p: i64, method: DedekindMethod) -> Result<DedekindSum> {
    let value = match method {
        DedekindMethod::Direct => dedekind_direct(q, p)?,
        DedekindMethod::Hickerson => dedekind_hickerson(q, p)?,
        DedekindMethod::Fast => dedekind_fast(q, p)?,
    };
    Ok(DedekindSum {
        value,
        p,
        q: q.rem_euclid(p),
    })
}
