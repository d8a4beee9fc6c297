//! Closed-form evaluation of `ξ_r(L(p,q), e_r)`.
//!
//! For odd `r >= 3` and `c = gcd(p, r)`:
//!
//! * `c = 1`: `{p}_r e_r^{-12s(q,p)} e_p^{r'(q+q*)} (e_r^{2p'} - e_r^{-2p'}) / (e_r^2 - e_r^{-2})`
//!   with `r r' ≡ 1 (mod p)` and `p p' ≡ 1 (mod r)`;
//! * `c > 1` and `c | q* + η` for a sign `η`:
//!   `(-1)^{(r-1)/2 (c-1)/2} {p/c}_{r/c} {q}_c e_r^{-12s(q,p)}
//!   e_{pc}^{(r/c)'(q+q*-η p* p)} e_{rc}^{-2η(p/c)'} ε(c)√c η / (e_r^{-2} - e_r^2)`
//!   with `(p/c)'(p/c) + (r/c)'(r/c) = 1`;
//! * `c > 1` otherwise: `0`.
//!
//! Here `p* p + q* q = 1` with `0 < q* < p`, `{·}` is the Jacobi symbol and
//! `e_a = e^{2πi/a}`. Every factor lives in `Q(ζ_{pr})`. The roots of unity
//! are collected into a single exponent of `ζ_{pr}`; the remaining factor
//! lives in `Q(ζ_r)` and is embedded once.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::LensSpace;
use crate::cyclotomic::{gauss_eps_sqrt, recip_root_minus_one, CycloElement};
use crate::numtheory::{bezout_pair, gcd, jacobi, mod_inverse, BezoutPair};
use crate::{Error, Rational, Result};

/// Which branch of the closed formula produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XiCase {
    /// `gcd(p, r) = 1`.
    C1,
    /// `c > 1` and `c | q* + η`.
    CGt1Eta,
    /// `c > 1` and `c` divides neither `q* + 1` nor `q* - 1`.
    Zero,
    /// `p = 1`; `ξ_r(S^3) = 1`.
    Sphere,
}

impl XiCase {
    pub fn tag(&self) -> &'static str {
        match self {
            XiCase::C1 => "C1",
            XiCase::CGt1Eta => "C_GT1_ETA",
            XiCase::Zero => "ZERO",
            XiCase::Sphere => "SPHERE",
        }
    }
}

/// The primed inverses used by the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimedInverses {
    /// `c = 1`: `r r' ≡ 1 (mod p)`, `p p' ≡ 1 (mod r)`.
    Inverses { r_prime: i64, p_prime: i64 },
    /// `c > 1`: `a_prime = (p/c)'`, `b_prime = (r/c)'` for `(a, b) = (p/c, r/c)`.
    Bezout(BezoutPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rest {
    /// `(ζ_r^{2p'} - ζ_r^{-2p'}) / (ζ_r^2 - ζ_r^{-2})`
    Quantum { p_prime: i64 },
    /// `G(c) / (ζ_r^{-2} - ζ_r^2)`, `G` the quadratic Gauss sum
    Gauss { c: i64 },
}

/// `value = sign * ζ_{pr}^exponent * rest`, with `rest` in `Q(ζ_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Factors {
    sign: i8,
    exponent: i64,
    kind: Rest,
    rest: CycloElement,
}

/// A `ξ_r` evaluation together with every intermediate quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct XiTrace {
    pub lens: LensSpace,
    pub r: i64,
    pub c: i64,
    pub case: XiCase,
    /// `±1` in the `CGt1Eta` branch, `0` otherwise.
    pub eta: i8,
    pub q_star: Option<i64>,
    pub p_star: Option<i64>,
    pub primed: Option<PrimedInverses>,
    /// `s(q, p)`.
    pub dedekind: Rational,
    pub value: CycloElement,
    pub value_approx: Complex64,
    factors: Option<Factors>,
}

impl XiTrace {
    pub fn conductor(&self) -> u64 {
        self.value.conductor()
    }

    pub fn is_zero(&self) -> bool {
        self.case == XiCase::Zero
    }

    /// `1 / value`, assembled from the inverses of the individual factors.
    pub fn inverse_value(&self) -> Result<CycloElement> {
        let r = self.r;
        match (&self.case, &self.factors) {
            (XiCase::Sphere, _) => CycloElement::one(r as u64),
            (XiCase::Zero, _) | (_, None) => Err(Error::VanishingXi {
                p: self.lens.p(),
                q: self.lens.q(),
                r,
                c: self.c,
            }),
            (_, Some(f)) => {
                let rest_inv = match f.kind {
                    Rest::Quantum { p_prime } => {
                        let den = CycloElement::from_terms(
                            r as u64,
                            [(2 + 2 * p_prime, 1), (2 * p_prime - 2, -1)],
                            1,
                        )?;
                        den.checked_mul(&recip_root_minus_one(r as u64, 4 * p_prime)?)?
                    }
                    Rest::Gauss { c } => {
                        let g = gauss_eps_sqrt(c)?.embed(r as u64)?;
                        let g_sq = if c % 4 == 1 { c } else { -c };
                        let den = CycloElement::from_terms(r as u64, [(-2, 1), (2, -1)], g_sq)?;
                        g.checked_mul(&den)?
                    }
                };
                let inv = rest_inv.embed_rotated(self.conductor(), -f.exponent)?;
                Ok(if f.sign < 0 { -inv } else { inv })
            }
        }
    }
}

fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

fn check_level(r: i64) -> Result<()> {
    if r < 3 || r % 2 == 0 {
        return Err(Error::Level(r));
    }
    Ok(())
}

/// `ξ_r(L(p,q), e_r)`.
pub fn xi(lens: &LensSpace, r: i64) -> Result<XiTrace> {
    xi_with_shift(lens, r, 0)
}

/// `ξ_r` computed with non-canonical representatives of the primed
/// inverses: `r' + k p` and `p' + k r` when `c = 1`, and the Bezout pair
/// `((p/c)' + k (r/c), (r/c)' - k (p/c))` when `c > 1`. The value does not
/// depend on `k`.
pub fn xi_with_shift(lens: &LensSpace, r: i64, shift: i64) -> Result<XiTrace> {
    check_level(r)?;
    let (p, q) = (lens.p(), lens.q());
    let n = p
        .checked_mul(r)
        .ok_or(Error::Overflow("conductor p*r"))?;
    let c = gcd(p, r);
    let dedekind = lens.dedekind();
    let mut trace = XiTrace {
        lens: *lens,
        r,
        c,
        case: XiCase::Sphere,
        eta: 0,
        q_star: None,
        p_star: None,
        primed: None,
        dedekind: dedekind.clone(),
        value: CycloElement::one(r as u64)?,
        value_approx: Complex64::new(1.0, 0.0),
        factors: None,
    };
    if p == 1 {
        return Ok(trace);
    }

    let (wide_p, wide_q, wide_n) = (p as i128, q as i128, n as i128);
    let q_star = mod_inverse(q, p)?;
    let p_star = narrow((1 - q_star as i128 * wide_q) / wide_p, "p*")?;
    trace.q_star = Some(q_star);
    trace.p_star = Some(p_star);

    // e_r^{-12 s} = ζ_{pr}^{-12 p s}
    let twelve_ps = (&dedekind * Rational::from_integer(BigInt::from(12 * p))).to_integer();
    let framing = (-twelve_ps)
        .mod_floor(&BigInt::from(n))
        .to_i128()
        .expect("reduced modulo an i64");

    let factors = if c == 1 {
        let r_prime = narrow(mod_inverse(r, p)? as i128 + shift as i128 * wide_p, "r'")?;
        let p_prime = narrow(mod_inverse(p, r)? as i128 + shift as i128 * r as i128, "p'")?;
        trace.case = XiCase::C1;
        trace.primed = Some(PrimedInverses::Inverses { r_prime, p_prime });

        // e_p^{r'(q+q*)} = ζ_{pr}^{r r'(q+q*)}
        let lens_phase = (r as i128 * r_prime as i128).rem_euclid(wide_n)
            * (wide_q + q_star as i128).rem_euclid(wide_n);
        let exponent = (framing + lens_phase).rem_euclid(wide_n) as i64;
        let num = CycloElement::from_terms(
            r as u64,
            [(2 * p_prime + 2, 1), (2 - 2 * p_prime, -1)],
            1,
        )?;
        let rest = num.checked_mul(&recip_root_minus_one(r as u64, 4)?)?;
        Factors {
            sign: jacobi(p, r)?,
            exponent,
            kind: Rest::Quantum { p_prime },
            rest,
        }
    } else {
        let bezout = bezout_pair(p / c, r / c)?.shifted(shift)?;
        trace.primed = Some(PrimedInverses::Bezout(bezout));
        let eta: i8 = if (q_star - 1) % c == 0 {
            -1
        } else if (q_star + 1) % c == 0 {
            1
        } else {
            trace.case = XiCase::Zero;
            trace.value = CycloElement::zero(n as u64)?;
            trace.value_approx = Complex64::new(0.0, 0.0);
            return Ok(trace);
        };
        trace.case = XiCase::CGt1Eta;
        trace.eta = eta;
        let eta_w = eta as i128;

        // q + q* - η p* p
        let x = wide_q + q_star as i128 - eta_w * p_star as i128 * wide_p;
        // e_{pc}^{(r/c)' x} = ζ_{pr}^{(r/c) (r/c)' x}
        let pc_phase = ((r / c) as i128 * bezout.b_prime as i128).rem_euclid(wide_n)
            * x.rem_euclid(wide_n);
        // e_{rc}^{-2η (p/c)'} = ζ_{pr}^{(p/c) (-2η (p/c)')}
        let rc_phase = ((p / c) as i128 * (-2 * eta_w * bezout.a_prime as i128)).rem_euclid(wide_n);
        let exponent = (framing + pc_phase % wide_n + rc_phase).rem_euclid(wide_n) as i64;

        let quadratic = if ((r - 1) / 2) % 2 == 1 && ((c - 1) / 2) % 2 == 1 {
            -1
        } else {
            1
        };
        let sign = quadratic * jacobi(p / c, r / c)? * jacobi(q, c)? * eta;
        // G(c) / (ζ_r^{-2} - ζ_r^2) = -G(c) ζ_r^2 / (ζ_r^4 - 1)
        let gauss = gauss_eps_sqrt(c)?.embed_rotated(r as u64, 2)?;
        let rest = -gauss.checked_mul(&recip_root_minus_one(r as u64, 4)?)?;
        Factors {
            sign,
            exponent,
            kind: Rest::Gauss { c },
            rest,
        }
    };

    let value = factors.rest.embed_rotated(n as u64, factors.exponent)?;
    trace.value = if factors.sign < 0 { -value } else { value };
    trace.value_approx = trace.value.to_complex();
    trace.factors = Some(factors);
    Ok(trace)
}

fn common_conductor(a: &XiTrace, b: &XiTrace) -> u64 {
    a.conductor().lcm(&b.conductor())
}

/// `ξ_r(a) / ξ_r(b)`, in `Q(ζ_{lcm(p_a, p_b) r})`.
pub fn xi_ratio(a: &LensSpace, b: &LensSpace, r: i64) -> Result<CycloElement> {
    let ta = xi(a, r)?;
    let tb = xi(b, r)?;
    let inv = tb.inverse_value()?;
    let m = common_conductor(&ta, &tb);
    ta.value.embed(m)?.checked_mul(&inv.embed(m)?)
}

/// Exact equality `ξ_r(a) = ξ_r(b)`.
pub fn xi_equal(a: &LensSpace, b: &LensSpace, r: i64) -> Result<bool> {
    let ta = xi(a, r)?;
    let tb = xi(b, r)?;
    if ta.conductor() == tb.conductor() {
        return Ok(ta.value == tb.value);
    }
    let m = common_conductor(&ta, &tb);
    Ok(ta.value.embed(m)? == tb.value.embed(m)?)
}

#[cfg(test)]
mod tests;
