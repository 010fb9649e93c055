//! Integral basis of a pure octic field.
//!
//!     cargo run --example basis -- 272

use num_bigint::BigInt;
use pure_octic::octic::{classify_case, integral_basis, reduce_parameter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: BigInt = std::env::args().nth(1).unwrap_or_else(|| "272".into()).parse()?;
    let m = reduce_parameter(&m)?.reduced;
    println!("m = {m}, case {}", classify_case(&m));
    let basis = integral_basis(&m)?;
    for (k, w) in basis.elements().iter().enumerate() {
        println!("w{k} = {w}");
    }
    Ok(())
}
