//! Elementary number theory on machine integers.
//!
//! Intermediate products are carried in `i128`, so every operation here is
//! exact for the full `i64` input range; results that would not fit back into
//! an `i64` are reported as [`Error::Overflow`].

mod contfrac;
mod dedekind;

pub use contfrac::{neg_cont_frac, NegContFrac};
pub use dedekind::{
    dedekind, dedekind_direct, dedekind_fast, dedekind_hickerson, DedekindMethod, DedekindSum,
};

use crate::{Error, Result};

fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(|a|, |b|)` and
/// `a*x + b*y = g`.
pub fn egcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quot = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    Ok((
        narrow(old_r, "egcd")?,
        narrow(old_s, "egcd")?,
        narrow(old_t, "egcd")?,
    ))
}

/// `gcd(|a|, |b|)`, with `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

fn coprime_check(a: i64, b: i64) -> Result<()> {
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime { a, b, gcd: g });
    }
    Ok(())
}

/// The inverse of `a` modulo `m`, normalized into `(0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    let (g, x, _) = egcd(a, m).map_err(|_| Error::NotCoprime { a, b: m, gcd: 0 })?;
    if g != 1 {
        return Err(Error::NotCoprime { a, b: m, gcd: g });
    }
    Ok(x.rem_euclid(m))
}

/// A solution of `a_prime * a + b_prime * b = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BezoutPair {
    pub a_prime: i64,
    pub b_prime: i64,
    pub a: i64,
    pub b: i64,
}

impl BezoutPair {
    pub fn holds(&self) -> bool {
        self.a_prime as i128 * self.a as i128 + self.b_prime as i128 * self.b as i128 == 1
    }

    /// The representative `(a' + k b, b' - k a)`, which also solves the
    /// same equation.
    pub fn shifted(&self, k: i64) -> Result<BezoutPair> {
        let a_prime = narrow(self.a_prime as i128 + k as i128 * self.b as i128, "bezout shift")?;
        let b_prime = narrow(self.b_prime as i128 - k as i128 * self.a as i128, "bezout shift")?;
        Ok(BezoutPair {
            a_prime,
            b_prime,
            ..*self
        })
    }
}

/// Canonical Bezout pair for coprime `a >= 1` and `b`: `b_prime` lies in
/// `[0, a)`, and `a_prime` follows.
pub fn bezout_pair(a: i64, b: i64) -> Result<BezoutPair> {
    if a < 1 {
        return Err(Error::ModulusTooSmall(a));
    }
    coprime_check(a, b)?;
    let b_prime = if a == 1 { 0 } else { mod_inverse(b, a)? };
    // a | 1 - b' b by construction
    let a_prime = narrow((1 - b_prime as i128 * b as i128) / a as i128, "bezout_pair")?;
    Ok(BezoutPair {
        a_prime,
        b_prime,
        a,
        b,
    })
}

/// Jacobi symbol `(a | n)` for odd `n >= 1`.
pub fn jacobi(a: i64, n: i64) -> Result<i8> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::JacobiModulus(n));
    }
    let mut n = n as u64;
    let mut a = (a as i128).rem_euclid(n as i128) as u64;
    let mut sign = 1i8;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        (a, n) = (n % a, a);
    }
    Ok(if n == 1 { sign } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn legendre_euler(a: i64, p: i64) -> i8 {
        let a = a.rem_euclid(p);
        if a == 0 {
            return 0;
        }
        let mut acc = 1i64;
        for _ in 0..(p - 1) / 2 {
            acc = acc * a % p;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    }

    fn is_prime(n: i64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn egcd_examples() {
        assert_eq!(egcd(1, 0).unwrap(), (1, 1, 0));
        let (g, x, y) = egcd(25, 11).unwrap();
        assert_eq!(g, 1);
        assert_eq!(25 * x + 11 * y, 1);
        let brute = (1..=15).filter(|d| 25 % d == 0 && 15 % d == 0).max().unwrap();
        assert_eq!(egcd(25, 15).unwrap().0, brute);
        assert_eq!(egcd(0, 0), Err(Error::BothZero));
    }

    #[test]
    fn egcd_signs() {
        for (a, b) in [(-12, 18), (12, -18), (-7, -3), (0, -5)] {
            let (g, x, y) = egcd(a, b).unwrap();
            assert!(g > 0);
            assert_eq!(a * x + b * y, g);
            assert_eq!(g, gcd(a, b));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(11, 25).unwrap(), 16);
        assert_eq!(mod_inverse(6, 25).unwrap(), 21);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(-1, 7).unwrap(), 6);
        assert!(matches!(mod_inverse(5, 25), Err(Error::NotCoprime { .. })));
        assert_eq!(mod_inverse(3, 1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn bezout_examples() {
        let b = bezout_pair(5, 1).unwrap();
        assert_eq!((b.a_prime, b.b_prime), (0, 1));
        let b = bezout_pair(5, 3).unwrap();
        assert_eq!((b.a_prime, b.b_prime), (-1, 2));
        let b = bezout_pair(1, 7).unwrap();
        assert_eq!((b.a_prime, b.b_prime), (1, 0));
        assert!(bezout_pair(6, 4).is_err());
        for k in -3..=3 {
            assert!(bezout_pair(25, 7).unwrap().shifted(k).unwrap().holds());
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(25, 3).unwrap(), 1);
        assert_eq!(jacobi(123, 1).unwrap(), 1);
        assert_eq!(jacobi(2, 15).unwrap(), 1);
        assert_eq!(jacobi(2, 15).unwrap(), legendre_euler(2, 3) * legendre_euler(2, 5));
        assert_eq!(jacobi(6, 15).unwrap(), 0);
        assert!(jacobi(3, 8).is_err());
        assert!(jacobi(3, -3).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in (3..=100).filter(|&p| is_prime(p)) {
            for a in -p..2 * p {
                assert_eq!(jacobi(a, p).unwrap(), legendre_euler(a, p), "({a}|{p})");
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn jacobi_multiplicative(a in -500i64..500, b in -500i64..500, half in 0i64..200) {
            let n = 2 * half + 1;
            proptest::prop_assert_eq!(
                jacobi(a * b, n).unwrap(),
                jacobi(a, n).unwrap() * jacobi(b, n).unwrap()
            );
            proptest::prop_assert_eq!(jacobi(a + n, n).unwrap(), jacobi(a, n).unwrap());
            proptest::prop_assert_eq!(jacobi(a, n).unwrap() == 0, gcd(a, n) > 1);
        }

        #[test]
        fn mod_inverse_is_inverse(a in -10_000i64..10_000, m in 2i64..10_000) {
            match mod_inverse(a, m) {
                Ok(inv) => {
                    proptest::prop_assert!(0 < inv && inv < m);
                    proptest::prop_assert_eq!((inv as i128 * a as i128).rem_euclid(m as i128), 1);
                }
                Err(_) => proptest::prop_assert!(gcd(a, m) != 1),
            }
        }
    }
}
