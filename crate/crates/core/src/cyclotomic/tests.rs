use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::{Error, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn z(n: u64, k: i64) -> CycloElement {
    root_of_unity(n, k).unwrap()
}

fn int(n: u64, v: i64) -> CycloElement {
    CycloElement::from_rational(n, &q(v, 1)).unwrap()
}

/// Evaluates coefficients against independently formed powers of `e^{2πi/n}`.
fn direct_eval(x: &CycloElement) -> Complex64 {
    let root = Complex64::from_polar(1.0, std::f64::consts::TAU / x.conductor() as f64);
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let c: f64 = num_traits::ToPrimitive::to_f64(c).unwrap();
            root.powu(j as u32) * c
        })
        .sum()
}

#[test]
fn roots_of_unity() {
    assert!(z(7, 0).is_one());
    assert_eq!(z(4, 2), int(4, -1));
    assert!((z(3, 1) * z(3, 2)).is_one());
    assert_eq!(z(12, -1), z(12, 11));
    assert_eq!(z(5, 2) * z(5, 4), z(5, 1));
    assert_eq!(z(3, 1) + z(3, 2), int(3, -1));
    assert_eq!(z(1, 5), int(1, 1));
}

#[test]
fn additive_identity_and_mismatch() {
    let x = z(9, 4) + int(9, 3);
    assert_eq!(&x + &CycloElement::zero(9).unwrap(), x);
    assert_eq!(&x - &x, CycloElement::zero(9).unwrap());
    assert_eq!(x.checked_add(&z(5, 1)), Err(Error::ConductorMismatch(9, 5)));
    assert_eq!(x.checked_mul(&z(5, 1)), Err(Error::ConductorMismatch(9, 5)));
}

#[test]
fn phi_vanishes_at_zeta() {
    for n in 1..=200u64 {
        let phi = cyclo_poly(n).unwrap();
        let mut acc = CycloElement::zero(n).unwrap();
        for (k, &c) in phi.coeffs().iter().enumerate() {
            if c != 0 {
                acc = &acc + &z(n, k as i64).scale(&q(c, 1));
            }
        }
        assert!(acc.is_zero(), "Φ_{n}(ζ_{n}) != 0");
        assert!(z(n, n as i64).is_one());
    }
}

#[test]
fn inverse_examples() {
    assert!(int(5, 1).inverse().unwrap().is_one());
    for n in [3u64, 5, 8, 12, 15] {
        assert_eq!(z(n, 1).inverse().unwrap(), z(n, n as i64 - 1));
    }
    let d = z(3, 2) - z(3, -2);
    assert!((d.inverse().unwrap() * d).is_one());
    assert_eq!(int(6, 4).inverse().unwrap(), CycloElement::from_rational(6, &q(1, 4)).unwrap());
    assert_eq!(
        CycloElement::zero(7).unwrap().inverse(),
        Err(Error::DivisionByZero(7))
    );
}

#[test]
fn inverse_of_dense_elements() {
    for n in [7u64, 9, 16, 21, 25, 36] {
        let x = CycloElement::from_terms(n, (0..n as i64).map(|j| (j * j + 1, j % 5 - 2)), 3).unwrap();
        if x.is_zero() {
            continue;
        }
        assert!((x.inverse().unwrap() * x).is_one(), "n = {n}");
    }
}

#[test]
fn recip_root_minus_one_matches_euclid() {
    for n in [3u64, 5, 7, 9, 15, 20, 21, 33, 45] {
        for k in 1..n as i64 {
            let direct = (z(n, k) - int(n, 1)).inverse().unwrap();
            assert_eq!(recip_root_minus_one(n, k).unwrap(), direct, "n = {n}, k = {k}");
        }
    }
    assert_eq!(recip_root_minus_one(6, 12), Err(Error::DivisionByZero(6)));
}

#[test]
fn embed_examples() {
    assert_eq!(z(2, 1).embed(6).unwrap(), int(6, -1));
    assert_eq!(z(2, 1).embed(6).unwrap(), z(6, 3));
    assert!(int(1, 1).embed(35).unwrap().is_one());
    assert_eq!(z(5, 1).embed(25).unwrap(), z(25, 5));
    assert_eq!(
        z(5, 1).embed(12),
        Err(Error::EmbedConductor { from: 5, to: 12 })
    );
}

#[test]
fn gauss_sums() {
    assert!(gauss_eps_sqrt(1).unwrap().is_one());
    assert_eq!(gauss_eps_sqrt(3).unwrap(), z(3, 1) - z(3, 2));
    assert_eq!(
        gauss_eps_sqrt(5).unwrap(),
        int(5, 1) + z(5, 1).scale(&q(2, 1)) + z(5, 4).scale(&q(2, 1))
    );
    let g5 = gauss_eps_sqrt(5).unwrap().to_complex();
    assert!((g5.re - 5f64.sqrt()).abs() < 1e-9 && g5.im.abs() < 1e-9);
    let g3 = gauss_eps_sqrt(3).unwrap().to_complex();
    assert!(g3.re.abs() < 1e-12 && (g3.im - 3f64.sqrt()).abs() < 1e-12);
    assert_eq!(gauss_eps_sqrt(4), Err(Error::GaussModulus(4)));
    assert_eq!(gauss_eps_sqrt(-3), Err(Error::GaussModulus(-3)));
}

#[test]
fn gauss_square_sign_table() {
    for c in (1..=99i64).step_by(2) {
        let g = gauss_eps_sqrt(c).unwrap();
        let expected = if c % 4 == 1 { c } else { -c };
        assert_eq!(&g * &g, int(c as u64, expected), "c = {c}");
    }
}

#[test]
fn to_complex_examples() {
    let one = int(9, 1).to_complex();
    assert_eq!((one.re, one.im), (1.0, 0.0));
    let i = z(4, 1).to_complex();
    assert!(i.re.abs() < 1e-12 && (i.im - 1.0).abs() < 1e-12);
}

#[test]
fn to_complex_matches_direct_powers() {
    let mut seed = 0x2545_f491_4f6c_dd1du64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for n in [1u64, 2, 17, 60, 97, 128, 210, 255, 331, 400] {
        let deg = euler_phi(n) as usize;
        let coeffs: Vec<Rational> = (0..deg)
            .map(|_| q((next() % 2001) as i64 - 1000, 1 + (next() % 7) as i64))
            .collect();
        let x = CycloElement::from_coeffs(n, &coeffs).unwrap();
        assert!((x.to_complex() - direct_eval(&x)).norm() < 1e-9, "n = {n}");
    }
}

#[test]
fn conjugate_is_complex_conjugate() {
    let x = gauss_eps_sqrt(7).unwrap() + z(7, 2).scale(&q(3, 5));
    let lhs = x.conjugate().to_complex();
    let rhs = x.to_complex().conj();
    assert!((lhs - rhs).norm() < 1e-12);
    assert_eq!(x.conjugate().conjugate(), x);
}

#[test]
fn from_coeffs_checks_length() {
    assert_eq!(
        CycloElement::from_coeffs(5, &[q(1, 1)]),
        Err(Error::CoefficientCount { conductor: 5, expected: 4, got: 1 })
    );
    let x = CycloElement::from_coeffs(5, &[q(1, 2), q(0, 1), q(-2, 3), q(0, 1)]).unwrap();
    assert_eq!(x.coeff(2), q(-2, 3));
    assert_eq!(x.terms().count(), 2);
    assert_eq!(x.to_string(), "1/2 - 2/3*z^2");
    assert_eq!(CycloElement::zero(5).unwrap().to_string(), "0");
}

#[test]
fn large_coefficients_take_the_bigint_path() {
    let big = q(i64::MAX, 1);
    let x = z(15, 3).scale(&big) + z(15, 11).scale(&big);
    let y = &x * &x;
    let expected = (&z(15, 6) + &z(15, 22)).scale(&(&big * &big))
        + z(15, 14).scale(&(&big * &big * q(2, 1)));
    assert_eq!(y, expected);
    assert_eq!(x.mul_root(4), z(15, 7).scale(&big) + z(15, 15).scale(&big));
}

fn element(max_n: u64) -> impl Strategy<Value = CycloElement> {
    (1..=max_n).prop_flat_map(|n| {
        let deg = euler_phi(n) as usize;
        prop::collection::vec((-20i64..=20, 1i64..=6), deg).prop_map(move |cs| {
            let coeffs: Vec<Rational> = cs.into_iter().map(|(a, b)| q(a, b)).collect();
            CycloElement::from_coeffs(n, &coeffs).unwrap()
        })
    })
}

fn triple(max_n: u64) -> impl Strategy<Value = (CycloElement, CycloElement, CycloElement)> {
    (1..=max_n).prop_flat_map(|n| {
        let deg = euler_phi(n) as usize;
        let one = move || {
            prop::collection::vec((-20i64..=20, 1i64..=6), deg).prop_map(move |cs| {
                let coeffs: Vec<Rational> = cs.into_iter().map(|(a, b)| q(a, b)).collect();
                CycloElement::from_coeffs(n, &coeffs).unwrap()
            })
        };
        (one(), one(), one())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws((a, b, c) in triple(60)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn multiplication_matches_numerics((a, b, _c) in triple(60)) {
        let exact = (&a * &b).to_complex();
        let approx = a.to_complex() * b.to_complex();
        prop_assert!((exact - approx).norm() < 1e-6 * (1.0 + approx.norm()));
    }

    #[test]
    fn embed_is_homomorphism((a, b, _c) in triple(30), factor in 1u64..5) {
        let m = a.conductor() * factor;
        let ea = a.embed(m).unwrap();
        let eb = b.embed(m).unwrap();
        prop_assert_eq!((&a * &b).embed(m).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).embed(m).unwrap(), &ea + &eb);
        prop_assert!((ea.to_complex() - a.to_complex()).norm() < 1e-8);
    }

    #[test]
    fn inverse_roundtrip(a in element(24)) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a.inverse().unwrap() * &a).is_one());
    }

    #[test]
    fn scale_and_zero(a in element(40)) {
        prop_assert!(a.scale(&Rational::zero()).is_zero());
        prop_assert_eq!(a.scale(&Rational::one()), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }
}
