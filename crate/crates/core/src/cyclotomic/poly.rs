use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::{Error, Result};

/// The `n`-th cyclotomic polynomial `Φ_n`, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloPolynomial {
    n: u64,
    coeffs: Vec<i64>,
    // nonzero (degree, coefficient) pairs below the leading term
    tail: Vec<(usize, i64)>,
}

impl CycloPolynomial {
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `φ(n)`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub(crate) fn tail(&self) -> &[(usize, i64)] {
        &self.tail
    }
}

/// Sorted divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact quotient of `num` by the monic `den`, both lowest degree first.
fn exact_div(num: &[i64], den: &[i64]) -> Result<Vec<i64>> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        if c == 0 {
            continue;
        }
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            if d != 0 {
                rem[i + j] = d
                    .checked_mul(c)
                    .and_then(|t| rem[i + j].checked_sub(t))
                    .ok_or(Error::Overflow("cyclotomic polynomial"))?;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    Ok(quot)
}

fn compute(n: u64) -> Result<CycloPolynomial> {
    let mut coeffs = vec![0i64; n as usize + 1];
    coeffs[0] = -1;
    coeffs[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        coeffs = exact_div(&coeffs, cyclo_poly(d)?.coeffs())?;
    }
    let deg = coeffs.len() - 1;
    let tail = coeffs[..deg]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    Ok(CycloPolynomial { n, coeffs, tail })
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycloPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycloPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_n`, obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor
/// `d` of `n`. Results are memoized process-wide.
pub fn cyclo_poly(n: u64) -> Result<Arc<CycloPolynomial>> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    if let Some(hit) = cache().read().expect("cache poisoned").get(&n) {
        return Ok(hit.clone());
    }
    // computed outside the lock; concurrent writers insert identical values
    let fresh = Arc::new(compute(n)?);
    Ok(cache()
        .write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(fresh)
        .clone())
}
