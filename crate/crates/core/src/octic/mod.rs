//! Data specific to `f(x) = x^8 - m`: parameter reduction, the
//! decomposition `m = a1 a2^2 ... a7^7`, case classification, the explicit
//! integral basis and the index of `f`.

mod basis;
mod case;
mod decomposition;
mod index;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::ArithError;

pub use basis::{integral_basis, integral_basis_variant, BasisElement, BasisVariant, IntegralBasis};
pub use case::{classify_case, CaseId};
pub use decomposition::{
    is_irreducible_pure_octic, reduce_parameter, squarefree_decompose, Decomposition, Reduction,
};
pub use index::{index_of_f, power_basis_at_alpha, IndexReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OcticError {
    #[error("m = {0} is not allowed: |m| must be at least 2")]
    TooSmall(BigInt),
    #[error("m = {0} is not reduced: some p^8 divides it")]
    NotReduced(BigInt),
    #[error("x^8 - ({0}) is reducible over Q")]
    Reducible(BigInt),
    #[error("index bookkeeping disagrees for m = {m}: {detail}")]
    IndexMismatch { m: BigInt, detail: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}
