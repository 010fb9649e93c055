//! Exact integer, rational and polynomial arithmetic.

mod factor;
mod fq;
mod hensel;
mod linalg;
mod modp;
mod poly;
mod resultant;

use thiserror::Error;

pub use factor::{factorize, is_prime_u64, p_adic_valuation, FactoredInteger};
pub use fq::{FqElem, ResidueField};
pub use hensel::{ext_gcd, factor_monic_over_z, hensel_lift, is_irreducible_over_q};
pub use linalg::{char_poly, char_poly_int_matrix, char_poly_mod_2_64, det_bareiss, to_u64_wrapping};
pub use modp::{reduce, ModPoly};
pub use poly::{IntPoly, RatPoly};
pub use resultant::{poly_discriminant, poly_discriminant_sylvester, resultant, resultant_sylvester};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime factor {0} does not fit in 64 bits")]
    PrimeTooLarge(String),
    #[error("polynomial is not square-free (discriminant is zero)")]
    NotSquareFree,
    #[error("polynomial must have degree at least one")]
    DegreeTooSmall,
}
