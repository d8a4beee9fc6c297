use num_bigint::BigInt;
use num_traits::Zero;

use super::gcd;
use crate::{Error, Rational, Result};

/// Negative (Hirzebruch-Jung) continued fraction
/// `p/q = m_n - 1/(m_{n-1} - 1/(... - 1/m_1))`.
///
/// `terms` is stored outermost first, i.e. `[m_n, ..., m_1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegContFrac {
    pub terms: Vec<i64>,
    pub p: i64,
    pub q: i64,
}

impl NegContFrac {
    /// Number of terms, the `n` in Hickerson's `-3n`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_sum(&self) -> i64 {
        self.terms.iter().sum()
    }

    /// Folds the nested expression back into a rational, innermost term first.
    pub fn evaluate(&self) -> Rational {
        let mut terms = self.terms.iter().rev();
        let Some(&innermost) = terms.next() else {
            return Rational::zero();
        };
        let mut acc = Rational::from_integer(BigInt::from(innermost));
        for &m in terms {
            acc = Rational::from_integer(BigInt::from(m)) - acc.recip();
        }
        acc
    }
}

/// Expands `p/q` with the ceiling recursion `m = ceil(p/q)`,
/// `(p, q) <- (q, m q - p)`, which yields every term `>= 2`.
pub fn neg_cont_frac(p: i64, q: i64) -> Result<NegContFrac> {
    if !(0 < q && q < p) {
        return Err(Error::ContFracRange { p, q });
    }
    let g = gcd(p, q);
    if g != 1 {
        return Err(Error::NotCoprime { a: p, b: q, gcd: g });
    }
    let mut terms = Vec::new();
    let (mut num, mut den) = (p, q);
    while den != 0 {
        let m = (num + den - 1) / den;
        terms.push(m);
        (num, den) = (den, m * den - num);
    }
    Ok(NegContFrac { terms, p, q })
}

impl std::fmt::Display for NegContFrac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}
