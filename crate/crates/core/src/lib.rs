//! Pure octic fields `Q(alpha)`, `alpha^8 = m`.

pub mod arith;
pub mod cli;
pub mod field;
pub mod monogenity;
pub mod newton;
pub mod octic;
pub mod oracle;
