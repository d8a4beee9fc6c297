use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LensSpace;
use crate::Rational;

/// Ohtsuki's series `τ(L(p,q)) = sum_n λ_n h^n`, `h = t - 1`, truncated
/// after `h^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TauSeries {
    pub p: i64,
    pub q: i64,
    pub lambda: Vec<Rational>,
}

impl TauSeries {
    pub fn order(&self) -> usize {
        self.lambda.len() - 1
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `t^alpha = sum_k binom(alpha, k) h^k` up to `h^len-1`.
fn binomial_series(alpha: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for k in 0..len {
        out.push(term.clone());
        term = term * (alpha - int(k as i64)) / int(k as i64 + 1);
    }
    out
}

fn truncated_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `t^{a} - t^{-a}` with its vanishing constant term dropped, i.e. divided by `h`.
fn odd_difference_over_h(a: &Rational, len: usize) -> Vec<Rational> {
    let plus = binomial_series(a, len + 1);
    let minus = binomial_series(&-a, len + 1);
    debug_assert!((&plus[0] - &minus[0]).is_zero());
    plus.into_iter().zip(minus).skip(1).map(|(x, y)| x - y).collect()
}

/// Expands `t^{-3s(q,p)} (t^{1/2p} - t^{-1/2p}) / (t^{1/2} - t^{-1/2})`
/// exactly through `h^order`.
///
/// Both differences vanish at `t = 1`; one factor of `h` is cancelled before
/// the series division, after which the divisor has constant term `1`.
pub fn tau_series(lens: &LensSpace, order: usize) -> TauSeries {
    let len = order + 1;
    let p = lens.p();
    let framing = binomial_series(&(lens.dedekind() * int(-3)), len);
    let half_over_p = Rational::new(BigInt::one(), BigInt::from(2 * p));
    let num = truncated_mul(&framing, &odd_difference_over_h(&half_over_p, len), len);
    let den = odd_difference_over_h(&Rational::new(1.into(), 2.into()), len);

    let mut lambda: Vec<Rational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num[k].clone();
        for (j, l) in lambda.iter().enumerate() {
            acc -= l * &den[k - j];
        }
        lambda.push(acc / &den[0]);
    }
    TauSeries {
        p,
        q: lens.q(),
        lambda,
    }
}
