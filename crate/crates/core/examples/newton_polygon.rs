//! Principal Newton polygons and residual polynomials of x^8 - m at a prime.
//!
//!     cargo run --example newton_polygon -- 33 2

use num_bigint::BigInt;
use pure_octic::arith::{IntPoly, ModPoly};
use pure_octic::newton::{polygon_index, principal_polygon, residual_polynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: BigInt = args.next().unwrap_or_else(|| "33".into()).parse()?;
    let p: u64 = args.next().unwrap_or_else(|| "2".into()).parse()?;
    let f = IntPoly::pure(8, &m);
    println!("f = {f}, p = {p}");
    for (phi, mult) in ModPoly::from_int_poly(&f, p).factor() {
        let phi = phi.to_int_poly();
        let polygon = principal_polygon(&f, &phi, p)?;
        println!("phi = {phi} (multiplicity {mult})");
        println!("  polygon {polygon}, index contribution {}", polygon_index(&polygon, phi.degree().unwrap()));
        for side in polygon.sides() {
            let r = residual_polynomial(&f, &phi, p, side)?;
            let tag = if r.is_square_free() { "square-free" } else { "repeated factor" };
            println!("  side {side}: residual {r} ({tag})");
        }
    }
    Ok(())
}
