//! Newton polygons of integer polynomials with respect to a prime `p` and a
//! monic polynomial `phi`, their residual polynomials, and the index and
//! splitting information they carry.

mod expansion;
mod ore;
mod polygon;
mod residual;
mod second_order;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{p_adic_valuation, IntPoly};

pub use expansion::{phi_expand, PhiExpansion};
pub use ore::{
    common_index_divisor_test, dedekind_divides_index, is_p_regular, ore_index_and_splitting,
    OreOutcome, RegularityFailure, SplittingEntry, SplittingReport,
};
pub use polygon::{polygon_index, principal_polygon, PolygonSide, PrincipalPolygon};
pub use residual::{residual_polynomial, ResidualPoly};
pub use second_order::{second_order_polygon, SecondOrderData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("phi must be monic of degree at least one")]
    NonMonicPhi,
    #[error("phi is not irreducible modulo {0}")]
    PhiReducible(u64),
    #[error("phi does not divide f modulo {0}")]
    PhiDoesNotDivide(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("f is not irreducible over Q")]
    ReducibleF,
    #[error("second-order polygons need a base polynomial of degree one")]
    BaseDegree,
    #[error("invalid second-order data: {0}")]
    InvalidData(String),
}

/// `nu_p(c)` for nonzero `c`; `None` for zero.
pub(crate) fn valuation(c: &BigInt, p: u64) -> Option<i64> {
    if c.is_zero() {
        None
    } else {
        Some(p_adic_valuation(c, p).expect("nonzero") as i64)
    }
}

/// Gauss valuation: minimum over the coefficients; `None` for zero.
pub(crate) fn gauss_valuation(f: &IntPoly, p: u64) -> Option<i64> {
    f.coeffs().iter().filter_map(|c| valuation(c, p)).min()
}
