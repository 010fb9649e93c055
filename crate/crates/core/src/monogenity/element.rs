use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{char_poly, poly_discriminant};
use crate::field::FieldElement;
use crate::octic::index_of_f;

use super::MonogenityError;

/// An element with its exact index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCandidate {
    pub element: FieldElement,
    /// Coordinates in the integral basis, when the candidate came from a search.
    pub coordinates: Option<[i64; 8]>,
    pub index: BigInt,
}

/// `(Z_K : Z[theta])` for an integral `theta` of `Q(m^(1/8))`.
pub fn element_index(theta: &FieldElement) -> Result<BigInt, MonogenityError> {
    let d_k = index_of_f(theta.m())?.d_k.to_integer();
    element_index_with(theta, &d_k)
}

/// [`element_index`] with a known field discriminant.
pub fn element_index_with(theta: &FieldElement, d_k: &BigInt) -> Result<BigInt, MonogenityError> {
    if theta.is_rational() {
        return Err(MonogenityError::NotPrimitive);
    }
    let chi = char_poly(theta).to_int_poly().ok_or(MonogenityError::NotIntegral)?;
    let disc = match poly_discriminant(&chi) {
        Ok(d) => d,
        Err(_) => return Err(MonogenityError::NotPrimitive),
    };
    debug_assert!(!disc.is_zero());
    let (q, r) = (disc.abs() / d_k.abs(), disc.abs() % d_k.abs());
    let root = q.sqrt();
    if !r.is_zero() || &root * &root != q {
        return Err(MonogenityError::InvariantBreach(format!(
            "disc(theta) / d_K = {disc} / {d_k} is not a perfect square"
        )));
    }
    Ok(root)
}
