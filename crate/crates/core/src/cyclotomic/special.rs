use super::CycloElement;
use crate::numtheory::gcd;
use crate::{Error, Result};

/// The quadratic Gauss sum `sum_{j=0}^{c-1} ζ_c^{j^2}` for odd `c`.
///
/// It equals `ε(c)√c`, with `ε(c) = 1` for `c ≡ 1 (mod 4)` and `ε(c) = i`
/// for `c ≡ 3 (mod 4)`; its square is `c` or `-c` accordingly.
pub fn gauss_eps_sqrt(c: i64) -> Result<CycloElement> {
    if c < 1 || c % 2 == 0 {
        return Err(Error::GaussModulus(c));
    }
    CycloElement::from_terms(c as u64, (0..c).map(|j| ((j * j) % c, 1)), 1)
}

/// `1 / (ζ_n^k - 1)`.
///
/// With `w = ζ_n^k` of order `m > 1`, `(w - 1) * sum_{j<m} j w^j = m`, so the
/// inverse is a plain sum of roots of unity over `m`.
pub fn recip_root_minus_one(n: u64, k: i64) -> Result<CycloElement> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    let order = n as i64 / gcd(n as i64, k);
    if order == 1 {
        return Err(Error::DivisionByZero(n));
    }
    let k = k.rem_euclid(n as i64) as i128;
    CycloElement::from_terms(
        n,
        (0..order).map(|j| ((k * j as i128 % n as i128) as i64, j)),
        order,
    )
}
