//! Independent oracle checks on the integral basis.
//!
//!     cargo run --example verify -- 41

use num_bigint::BigInt;
use pure_octic::octic::{integral_basis_variant, BasisVariant};
use pure_octic::oracle::{verify_basis, verify_given_basis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: BigInt = std::env::args().nth(1).unwrap_or_else(|| "41".into()).parse()?;
    println!("{}", verify_basis(&m)?);
    // the rows as printed, for comparison
    let printed = verify_given_basis(&integral_basis_variant(&m, BasisVariant::Table)?)?;
    let failed: Vec<&str> = printed.failures().iter().map(|c| c.name).collect();
    println!("printed row: {}", if failed.is_empty() { "ok".to_string() } else { failed.join(", ") });
    Ok(())
}
