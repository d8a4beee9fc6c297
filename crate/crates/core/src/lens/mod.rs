//! Lens spaces and their quantum invariants.
//!
//! [`xi`] evaluates the SO(3) invariant `ξ_r(L(p,q), e_r)` in closed form
//! inside `Q(ζ_{pr})`; [`tau_series`] expands Ohtsuki's `τ(L(p,q))` in
//! powers of `h = t - 1`.

mod tau;
mod xi;

use std::fmt;

pub use tau::{tau_series, TauSeries};
pub use xi::{xi, xi_equal, xi_ratio, xi_with_shift, PrimedInverses, XiCase, XiTrace};

use crate::numtheory::{dedekind_fast, gcd, mod_inverse};
use crate::{Error, Rational, Result};

/// The lens space `L(p, q)` with `gcd(p, q) = 1` and `q` reduced into
/// `[0, p)`. `L(1, 0)` is the 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

/// Validates `(p, q)` and reduces `q` modulo `p`.
pub fn lens_normalize(p: i64, q: i64) -> Result<LensSpace> {
    if p < 1 {
        return Err(Error::LensOrder(p));
    }
    let g = gcd(p, q);
    if g != 1 {
        return Err(Error::NotCoprime { a: p, b: q, gcd: g });
    }
    Ok(LensSpace {
        p,
        q: q.rem_euclid(p),
    })
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        lens_normalize(p, q)
    }

    pub fn sphere() -> Self {
        LensSpace { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `|H_1(L(p,q); Z)| = p`.
    pub fn h1_order(&self) -> i64 {
        self.p
    }

    pub fn is_sphere(&self) -> bool {
        self.p == 1
    }

    /// `q*` in `(0, p)` with `q q* ≡ 1 (mod p)`; absent for the sphere.
    pub fn q_star(&self) -> Option<i64> {
        (self.p > 1).then(|| mod_inverse(self.q, self.p).expect("validated coprime"))
    }

    /// `s(q, p)`.
    pub fn dedekind(&self) -> Rational {
        dedekind_fast(self.q, self.p).expect("validated coprime")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `τ(L(p1,q1)) = τ(L(p2,q2))` iff `p1 = p2` and `s(q1,p1) = s(q2,p2)`.
pub fn tau_equal(a: &LensSpace, b: &LensSpace) -> bool {
    a.p == b.p && a.dedekind() == b.dedekind()
}

/// `L(p,q) ≅ L(p,q')` preserving orientation iff `q' ≡ q^{±1} (mod p)`.
pub fn oriented_homeomorphic(a: &LensSpace, b: &LensSpace) -> bool {
    a.p == b.p && (a.q == b.q || a.q_star() == Some(b.q))
}
