use num_complex::Complex64;

use super::*;
use crate::cyclotomic::root_of_unity;
use crate::numtheory::dedekind_direct;

fn l(p: i64, q: i64) -> LensSpace {
    LensSpace::new(p, q).unwrap()
}

fn e(a: i64, x: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * x / a as f64)
}

/// The closed formula evaluated directly in floating point, sharing nothing
/// with the exact path beyond the integer helpers.
fn xi_float(p: i64, q: i64, r: i64) -> Complex64 {
    if p == 1 {
        return Complex64::new(1.0, 0.0);
    }
    let s: f64 = num_traits::ToPrimitive::to_f64(&dedekind_direct(q, p).unwrap()).unwrap();
    let c = gcd(p, r);
    let qs = mod_inverse(q, p).unwrap();
    let ps = (1 - qs * q) / p;
    if c == 1 {
        let rp = mod_inverse(r, p).unwrap() as f64;
        let pp = mod_inverse(p, r).unwrap() as f64;
        let jac = jacobi(p, r).unwrap() as f64;
        return e(r, -12.0 * s)
            * e(p, rp * (q + qs) as f64)
            * (e(r, 2.0 * pp) - e(r, -2.0 * pp))
            / (e(r, 2.0) - e(r, -2.0))
            * jac;
    }
    let eta = [1i64, -1].into_iter().find(|eta| (qs + eta) % c == 0);
    let Some(eta) = eta else {
        return Complex64::new(0.0, 0.0);
    };
    let (pc, rc) = (p / c, r / c);
    // (p/c)' (p/c) + (r/c)' (r/c) = 1 by brute force
    let (pcp, rcp) = (0..pc.max(1))
        .find_map(|b| ((1 - b * rc) % pc == 0).then(|| ((1 - b * rc) / pc, b)))
        .unwrap();
    let sign = if ((r - 1) / 2 * ((c - 1) / 2)) % 2 == 0 { 1.0 } else { -1.0 };
    let gauss: Complex64 = (0..c).map(|j| e(c, (j * j) as f64)).sum();
    sign * jacobi(pc, rc).unwrap() as f64
        * jacobi(q, c).unwrap() as f64
        * e(r, -12.0 * s)
        * e(p * c, (rcp * (q + qs - eta * ps * p)) as f64)
        * e(r * c, (-2 * eta * pcp) as f64)
        * gauss
        * eta as f64
        / (e(r, -2.0) - e(r, 2.0))
}

#[test]
fn matches_float_formula() {
    for p in 1..=30 {
        for q in (0..p).filter(|&q| gcd(p, q) == 1) {
            for r in (3..=31).step_by(2) {
                let t = xi(&l(p, q), r).unwrap();
                let f = xi_float(p, q, r);
                assert!(
                    (t.value_approx - f).norm() < 1e-8,
                    "L({p},{q}) r={r}: {} vs {f}",
                    t.value_approx
                );
            }
        }
    }
}

#[test]
fn zero_case_for_multiples_of_25() {
    for r in [25, 75, 125, 175] {
        let t = xi(&l(25, 6), r).unwrap();
        assert_eq!(t.case, XiCase::Zero);
        assert!(t.value.is_zero());
        assert_eq!(t.eta, 0);
        assert_eq!(t.c, 25);
    }
}

#[test]
fn trace_for_r_15() {
    let t = xi(&l(25, 6), 15).unwrap();
    assert_eq!(t.case, XiCase::CGt1Eta);
    assert_eq!(t.c, 5);
    assert_eq!(t.eta, -1);
    assert_eq!(t.q_star, Some(21));
    assert_eq!(t.p_star, Some(-5));
    assert_eq!(t.conductor(), 375);
    let Some(PrimedInverses::Bezout(b)) = t.primed else {
        panic!("expected a Bezout pair");
    };
    assert_eq!((b.a, b.b), (5, 3));
    assert!(b.holds());
}

#[test]
fn sphere_is_one() {
    let t = xi(&LensSpace::sphere(), 7).unwrap();
    assert_eq!(t.case, XiCase::Sphere);
    assert!(t.value.is_one());
    assert_eq!(t.q_star, None);
    assert!(t.inverse_value().unwrap().is_one());
}

#[test]
fn c1_branch_equal_for_theorem_pair() {
    assert!(xi_equal(&l(25, 6), &l(25, 11), 3).unwrap());
    assert!(xi_equal(&l(25, 6), &l(25, 11), 7).unwrap());
    assert!(!xi_equal(&l(25, 6), &l(25, 11), 5).unwrap());
    assert!(xi_equal(&l(25, 6), &l(25, 11), 75).unwrap());
}

#[test]
fn level_validation() {
    assert_eq!(xi(&l(5, 2), 4).unwrap_err(), Error::Level(4));
    assert_eq!(xi(&l(5, 2), 1).unwrap_err(), Error::Level(1));
    assert_eq!(xi(&l(5, 2), -3).unwrap_err(), Error::Level(-3));
}

#[test]
fn ratio_examples() {
    let (a, b) = (l(25, 11), l(25, 6));
    assert!(xi_ratio(&a, &b, 3).unwrap().is_one());
    assert!(xi_ratio(&a, &a, 15).unwrap().is_one());
    // with p* p + q* q = 1 the ratio at r = 5 is e_125^{-50} = ζ_5^{-2}
    let ratio = xi_ratio(&a, &b, 5).unwrap();
    assert_eq!(ratio, root_of_unity(125, -50).unwrap());
    assert_eq!(ratio, root_of_unity(5, 3).unwrap().embed(125).unwrap());
    assert!(matches!(
        xi_ratio(&a, &b, 25),
        Err(Error::VanishingXi { p: 25, q: 6, r: 25, c: 25 })
    ));
}

#[test]
fn factor_inverse_matches_euclid() {
    for (p, q, r) in [(3, 1, 3), (3, 2, 5), (4, 1, 3), (5, 2, 3), (5, 1, 5), (9, 2, 3), (6, 5, 3), (7, 3, 5)] {
        let t = xi(&l(p, q), r).unwrap();
        if t.is_zero() {
            continue;
        }
        assert_eq!(t.inverse_value().unwrap(), t.value.inverse().unwrap(), "L({p},{q}) r={r}");
    }
}

#[test]
fn ratio_across_orders() {
    let (a, b) = (l(3, 1), l(5, 2));
    let ratio = xi_ratio(&a, &b, 7).unwrap();
    assert_eq!(ratio.conductor(), 105);
    let expected = xi(&a, 7).unwrap().value_approx / xi(&b, 7).unwrap().value_approx;
    assert!((ratio.to_complex() - expected).norm() < 1e-9);
    assert!(!xi_equal(&a, &b, 7).unwrap());
    assert!(xi_equal(&LensSpace::sphere(), &LensSpace::sphere(), 9).unwrap());
}

#[test]
fn representative_independence_small() {
    for p in 2..=30 {
        for q in (1..p).filter(|&q| gcd(p, q) == 1) {
            for r in (3..=15).step_by(2) {
                let base = xi(&l(p, q), r).unwrap();
                for k in [-2, -1, 1, 2] {
                    let shifted = xi_with_shift(&l(p, q), r, k).unwrap();
                    assert_eq!(shifted.value, base.value, "L({p},{q}) r={r} k={k}");
                }
            }
        }
    }
}

#[test]
fn quantum_quotient_is_real() {
    for (p, q, r) in [(2, 1, 3), (7, 3, 5), (11, 4, 9), (25, 6, 3), (25, 11, 13), (8, 3, 21)] {
        let t = xi(&l(p, q), r).unwrap();
        let f = t.factors.as_ref().unwrap();
        assert!(matches!(f.kind, Rest::Quantum { .. }));
        assert_eq!(f.rest.conjugate(), f.rest, "L({p},{q}) r={r}");
    }
}

#[test]
fn orientation_reversal_conjugates() {
    for p in 2..=40 {
        for q in (1..p).filter(|&q| gcd(p, q) == 1) {
            for r in (3..=21).step_by(2) {
                let a = xi(&l(p, q), r).unwrap().value;
                let b = xi(&l(p, p - q), r).unwrap().value;
                assert_eq!(b, a.conjugate(), "L({p},{q}) r={r}");
            }
        }
    }
}

#[test]
fn inverse_homeomorphism_small() {
    for p in 2..=30 {
        for q in (1..p).filter(|&q| gcd(p, q) == 1) {
            let qs = mod_inverse(q, p).unwrap();
            for r in (3..=15).step_by(2) {
                assert_eq!(
                    xi(&l(p, q), r).unwrap().value,
                    xi(&l(p, qs), r).unwrap().value,
                    "L({p},{q}) r={r}"
                );
            }
        }
    }
}
