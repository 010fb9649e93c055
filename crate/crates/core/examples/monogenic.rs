//! Monogenity verdicts with their reasons and witnesses.
//!
//!     cargo run --release --example monogenic -- 3 5 18 33 50 98 -3

use num_bigint::BigInt;
use pure_octic::monogenity::monogenic_verdict;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ms: Vec<BigInt> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    if ms.is_empty() {
        ms = [3, 5, 18, 33, 50, 98, 272].map(BigInt::from).to_vec();
    }
    for m in ms {
        let v = monogenic_verdict(&m)?;
        println!("m = {m}: {} ({})", v.tag, v.reason);
        if let Some(w) = &v.witness {
            println!("  witness {w}");
        }
    }
    Ok(())
}
