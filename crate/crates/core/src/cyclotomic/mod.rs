//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Elements are kept in canonical form: power basis modulo `Φ_n` with fully
//! reduced rational coefficients. Arithmetic between different conductors
//! is not implicit; embed both operands into a common field first.

mod element;
mod poly;
mod special;

pub use element::CycloElement;
pub use poly::{cyclo_poly, divisors, euler_phi, CycloPolynomial};
pub use special::{gauss_eps_sqrt, recip_root_minus_one};

/// `ζ_n^k` in canonical form.
pub fn root_of_unity(n: u64, k: i64) -> crate::Result<CycloElement> {
    CycloElement::root_of_unity(n, k)
}

#[cfg(test)]
mod tests;
