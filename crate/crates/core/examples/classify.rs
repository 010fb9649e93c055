//! Case, square-free decomposition and 2-adic index increment for a range of m.
//!
//!     cargo run --example classify -- -20 40

use num_bigint::BigInt;
use pure_octic::octic::{classify_case, is_irreducible_pure_octic, reduce_parameter, squarefree_decompose};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (lo, hi) = match args[..] {
        [lo, hi] => (lo, hi),
        [m] => (m, m),
        _ => (-20, 40),
    };
    for m in lo..=hi {
        let m = BigInt::from(m);
        let Ok(red) = reduce_parameter(&m) else { continue };
        if red.reduced != m || !is_irreducible_pure_octic(&m) {
            continue;
        }
        let case = classify_case(&m);
        let d = squarefree_decompose(&m)?;
        let a: Vec<String> = d.a_values().iter().map(ToString::to_string).collect();
        println!("{m:>5}  {:<11} +{}  a = [{}]", case.label(), case.two_adic_increment(), a.join(", "));
    }
    Ok(())
}
