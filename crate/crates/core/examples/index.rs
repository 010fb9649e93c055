//! Index of x^8 - m, the polynomial discriminant and the field discriminant.
//!
//!     cargo run --example index -- -28

use num_bigint::BigInt;
use pure_octic::arith::{poly_discriminant, IntPoly};
use pure_octic::octic::index_of_f;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: BigInt = std::env::args().nth(1).unwrap_or_else(|| "-28".into()).parse()?;
    let r = index_of_f(&m)?;
    println!("case      {}", r.case);
    println!("ind(f)    {} = {}", r.index, r.index.to_integer());
    println!("disc(f)   {}", r.disc_f);
    println!("d_K       {}", r.d_k);
    // disc(f) = ind(f)^2 d_K, cross-checked against a direct resultant
    let direct = poly_discriminant(&IntPoly::pure(8, &m))?;
    assert_eq!(direct, r.disc_f.to_integer());
    println!("resultant check ok");
    Ok(())
}
