//! Monogenity: element indices, non-monogenity conditions, pure-power
//! generators, splitting of 2 and a bounded generator search.

mod conditions;
mod element;
mod search;
mod splitting;
mod verdict;

use num_bigint::BigInt;
use thiserror::Error;

use crate::octic::OcticError;

pub use conditions::{necessary_condition_index, non_monogenic_tests, pure_power_case, NonMonogenicReason, PurePower};
pub use element::{element_index, element_index_with, GeneratorCandidate};
pub use search::{search_generator, SearchOutcome, DEFAULT_SEARCH_BOUND};
pub use splitting::{splitting_at_2, SplittingSource};
pub use verdict::{monogenic_verdict, monogenic_verdict_with_bound, Reason, Verdict, VerdictTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonogenityError {
    #[error("element generates a proper subfield")]
    NotPrimitive,
    #[error("element is not an algebraic integer")]
    NotIntegral,
    #[error("divisibility condition needs v2(m) odd or m = 3 mod 4; got m = {0}")]
    NotApplicable(BigInt),
    #[error("splitting of 2 is not covered for m = {0}")]
    Unsupported(BigInt),
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
    #[error(transparent)]
    Octic(#[from] OcticError),
}
