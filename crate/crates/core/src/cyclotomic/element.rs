use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cyclo_poly, CycloPolynomial};
use crate::{Error, Rational, Result};

/// An element of `Q(ζ_n)`, `ζ_n = e^{2πi/n}`, in the power basis
/// `1, ζ_n, ..., ζ_n^{φ(n)-1}`.
///
/// Stored as integer numerators over one positive common denominator, fully
/// reduced, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

fn phi_of(n: u64) -> std::sync::Arc<CycloPolynomial> {
    // every element's conductor had Φ_n built when the element was created
    cyclo_poly(n).expect("cyclotomic polynomial of an existing conductor")
}

/// Numerators indexed by exponent, before reduction modulo `Φ_n`.
pub(crate) enum Lift {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

fn reduce_small(v: &mut [i64], phi: &CycloPolynomial) -> Option<()> {
    let deg = phi.degree();
    for d in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[d]);
        if c == 0 {
            continue;
        }
        let base = d - deg;
        for &(i, f) in phi.tail() {
            v[base + i] = v[base + i].checked_sub(c.checked_mul(f)?)?;
        }
    }
    Some(())
}

fn reduce_big(v: &mut [BigInt], phi: &CycloPolynomial) {
    let deg = phi.degree();
    for d in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[d]);
        if c.is_zero() {
            continue;
        }
        let base = d - deg;
        for &(i, f) in phi.tail() {
            v[base + i] -= &c * f;
        }
    }
}

impl Lift {
    pub(crate) fn zeros(n: u64) -> Lift {
        Lift::Small(vec![0; n as usize])
    }

    /// Adds `coeff` at `exponent mod n`.
    pub(crate) fn add_term(&mut self, exponent: i64, coeff: i64) {
        match self {
            Lift::Small(v) => {
                let idx = exponent.rem_euclid(v.len() as i64) as usize;
                match v[idx].checked_add(coeff) {
                    Some(x) => v[idx] = x,
                    None => {
                        self.promote();
                        self.add_term(exponent, coeff);
                    }
                }
            }
            Lift::Big(v) => {
                let idx = exponent.rem_euclid(v.len() as i64) as usize;
                v[idx] += coeff;
            }
        }
    }

    fn promote(&mut self) {
        if let Lift::Small(v) = self {
            *self = Lift::Big(v.iter().map(|&x| BigInt::from(x)).collect());
        }
    }

    pub(crate) fn into_element(self, n: u64, den: BigInt) -> Result<CycloElement> {
        let phi = cyclo_poly(n)?;
        let deg = phi.degree();
        let mut num = match self {
            Lift::Small(mut v) => {
                let backup = v.clone();
                if reduce_small(&mut v, &phi).is_some() {
                    v.into_iter().take(deg).map(BigInt::from).collect()
                } else {
                    let mut big: Vec<BigInt> = backup.into_iter().map(BigInt::from).collect();
                    reduce_big(&mut big, &phi);
                    big
                }
            }
            Lift::Big(mut v) => {
                reduce_big(&mut v, &phi);
                v
            }
        };
        num.truncate(deg);
        num.resize(deg, BigInt::zero());
        Ok(CycloElement::normalized(n, num, den))
    }
}

fn lcm_denominator<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

impl CycloElement {
    fn normalized(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.iter().all(Zero::is_zero) {
            return CycloElement {
                n,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -std::mem::take(c));
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        CycloElement { n, num, den }
    }

    pub fn zero(n: u64) -> Result<Self> {
        Self::from_rational(n, &Rational::zero())
    }

    pub fn one(n: u64) -> Result<Self> {
        Self::from_rational(n, &Rational::one())
    }

    pub fn from_rational(n: u64, value: &Rational) -> Result<Self> {
        let deg = cyclo_poly(n)?.degree();
        let mut num = vec![BigInt::zero(); deg];
        num[0] = value.numer().clone();
        Ok(Self::normalized(n, num, value.denom().clone()))
    }

    /// `ζ_n^k`, any integer `k`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        let mut lift = Lift::zeros(n);
        lift.add_term(k, 1);
        lift.into_element(n, BigInt::one())
    }

    /// `(1/den) * sum coeff * ζ_n^exponent`.
    pub fn from_terms(
        n: u64,
        terms: impl IntoIterator<Item = (i64, i64)>,
        den: i64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        if den == 0 {
            return Err(Error::DivisionByZero(n));
        }
        let mut lift = Lift::zeros(n);
        for (e, c) in terms {
            lift.add_term(e, c);
        }
        lift.into_element(n, BigInt::from(den))
    }

    /// Element with power-basis coefficients `coeffs`, which must have
    /// exactly `φ(n)` entries.
    pub fn from_coeffs(n: u64, coeffs: &[Rational]) -> Result<Self> {
        let deg = cyclo_poly(n)?.degree();
        if coeffs.len() != deg {
            return Err(Error::CoefficientCount {
                conductor: n,
                expected: deg,
                got: coeffs.len(),
            });
        }
        Self::from_polynomial(n, coeffs)
    }

    /// The image of the rational polynomial `sum c_j x^j` at `x = ζ_n`.
    pub fn from_polynomial(n: u64, coeffs: &[Rational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        let den = lcm_denominator(coeffs.iter());
        let mut lift = vec![BigInt::zero(); n as usize];
        for (j, c) in coeffs.iter().enumerate() {
            lift[j % n as usize] += c.numer() * (&den / c.denom());
        }
        Lift::Big(lift).into_element(n, den)
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `φ(n)`, the number of basis coefficients.
    pub fn degree(&self) -> usize {
        self.num.len()
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn coeff(&self, j: usize) -> Rational {
        Rational::new(self.num[j].clone(), self.den.clone())
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, Rational::new(c.clone(), self.den.clone())))
    }

    /// Largest absolute numerator over the common denominator.
    pub fn height(&self) -> Rational {
        let top = self.num.iter().map(|c| c.abs()).max().unwrap_or_default();
        Rational::new(top, self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeff(0))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ConductorMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: i8) -> Result<Self> {
        self.same_field(other)?;
        let den = self.den.lcm(&other.den);
        let (fa, fb) = (&den / &self.den, &den / &other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                if sign > 0 {
                    a * &fa + b * &fb
                } else {
                    a * &fa - b * &fb
                }
            })
            .collect();
        Ok(Self::normalized(self.n, num, den))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.n as usize;
        let den = &self.den * &other.den;
        let small = |v: &[BigInt]| v.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>();
        if let (Some(a), Some(b)) = (small(&self.num), small(&other.num)) {
            if let Some(lift) = convolve_small(&a, &b, n) {
                return Lift::Small(lift).into_element(self.n, den);
            }
        }
        let mut lift = vec![BigInt::zero(); n];
        for (i, a) in self.num.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.num.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                lift[(i + j) % n] += a * b;
            }
        }
        Lift::Big(lift).into_element(self.n, den)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * factor.numer()).collect();
        Self::normalized(self.n, num, &self.den * factor.denom())
    }

    /// `self * ζ_n^k`.
    pub fn mul_root(&self, k: i64) -> Self {
        self.embed_rotated(self.n, k).expect("same conductor")
    }

    /// Sends the basis element `ζ_n^j` to `ζ_target^{map(j)}` and reduces.
    fn permute(&self, map: impl Fn(usize) -> i64, target: u64) -> Result<Self> {
        let mut lift = match self.num.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>() {
            Some(v) => {
                let mut lift = Lift::zeros(target);
                for (j, c) in v.into_iter().enumerate().filter(|(_, c)| *c != 0) {
                    lift.add_term(map(j), c);
                }
                lift
            }
            None => Lift::Big(vec![BigInt::zero(); target as usize]),
        };
        if let Lift::Big(v) = &mut lift {
            for (j, c) in self.num.iter().enumerate() {
                v[map(j).rem_euclid(target as i64) as usize] += c;
            }
        }
        lift.into_element(target, self.den.clone())
    }

    /// Image under `ζ_n -> ζ_m^{m/n}`; requires `n | m`.
    pub fn embed(&self, m: u64) -> Result<Self> {
        self.embed_rotated(m, 0)
    }

    /// `embed(m)` followed by multiplication with `ζ_m^k`, in one reduction.
    pub fn embed_rotated(&self, m: u64, k: i64) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.n) {
            return Err(Error::EmbedConductor {
                from: self.n,
                to: m,
            });
        }
        let step = (m / self.n) as i64;
        let k = k.rem_euclid(m as i64);
        self.permute(|j| j as i64 * step + k, m)
    }

    /// Image under the automorphism `ζ_n -> ζ_n^{-1}` (complex conjugation).
    pub fn conjugate(&self) -> Self {
        self.permute(|j| -(j as i64), self.n).expect("same conductor")
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Φ_n` over `Q`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.n));
        }
        let phi = phi_of(self.n);
        let mut r0: Vec<Rational> = phi
            .coeffs()
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let mut r1 = trimmed(self.num.iter().map(|c| Rational::from_integer(c.clone())).collect());
        let mut s0: Vec<Rational> = vec![];
        let mut s1 = vec![Rational::one()];
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            if rem.is_empty() {
                // Φ_n is irreducible, so a nonzero element shares no factor with it
                unreachable!("nonconstant common factor with the cyclotomic polynomial");
            }
            let next = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next);
        }
        // r1 = [g] with g = s1 * (integer numerators); rescale by den / g
        let factor = Rational::from_integer(self.den.clone()) / &r1[0];
        let coeffs: Vec<Rational> = s1.into_iter().map(|c| c * &factor).collect();
        Self::from_polynomial(self.n, &coeffs)
    }

    /// Numeric value at `ζ_n = e^{2πi/n}` in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let den_f = self.den.to_f64().filter(|d| d.is_finite());
        let n = self.n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let value = match (c.to_f64().filter(|x| x.is_finite()), den_f) {
                (Some(x), Some(d)) => x / d,
                _ => Rational::new(c.clone(), self.den.clone())
                    .to_f64()
                    .unwrap_or(f64::NAN),
            };
            let angle = std::f64::consts::TAU * (j as f64 / n);
            acc += Complex64::from_polar(value, angle);
        }
        acc
    }
}

fn convolve_small(a: &[i64], b: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut out = vec![0i64; n];
    for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
            let mut k = i + j;
            if k >= n {
                k -= n;
            }
            out[k] = out[k].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

fn trimmed(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], trimmed(rem));
    }
    let lead = &b[db];
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        if rem[i + db].is_zero() {
            continue;
        }
        let c = &rem[i + db] / lead;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trimmed(quot), trimmed(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        -&self
    }
}

// Operator forms panic on a conductor mismatch; use the checked_* methods
// when the conductors are not known to agree.
macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycloElement> for &CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: &CycloElement) -> CycloElement {
                self.$checked(rhs).expect("conductor mismatch")
            }
        }
        impl $trait<CycloElement> for CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: CycloElement) -> CycloElement {
                (&self).$checked(&rhs).expect("conductor mismatch")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{mag}*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
