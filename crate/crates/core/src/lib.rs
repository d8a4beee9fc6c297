//! Exact quantum invariants of lens spaces.
//!
//! The crate computes, with exact arithmetic throughout:
//!
//! * Dedekind sums `s(q, p)` by three independent routes ([`numtheory`]),
//! * elements of cyclotomic fields `Q(ζ_n)` in canonical power-basis form
//!   ([`cyclotomic`]),
//! * the SO(3) invariants `ξ_r(L(p,q), e^{2πi/r})` of lens spaces and
//!   Ohtsuki's power series `τ(L(p,q))` ([`lens`]),
//! * searches for lens spaces that `τ` cannot tell apart but some `ξ_r`
//!   can ([`search`]).
//!
//! ```
//! use lens_invariants::lens::{xi_equal, tau_equal, LensSpace};
//!
//! let a = LensSpace::new(25, 6).unwrap();
//! let b = LensSpace::new(25, 11).unwrap();
//! assert!(tau_equal(&a, &b));
//! assert!(xi_equal(&a, &b, 7).unwrap());
//! assert!(!xi_equal(&a, &b, 5).unwrap());
//! ```

pub mod cyclotomic;
pub mod error;
pub mod lens;
pub mod numtheory;
pub mod search;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision exact rational number.
pub type Rational = num_rational::BigRational;
