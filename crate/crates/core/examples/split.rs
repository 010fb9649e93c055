//! Factorization of a prime in the ring of integers.
//!
//!     cargo run --example split -- 33

use num_bigint::BigInt;
use pure_octic::arith::IntPoly;
use pure_octic::monogenity::splitting_at_2;
use pure_octic::newton::{common_index_divisor_test, ore_index_and_splitting, OreOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: BigInt = std::env::args().nth(1).unwrap_or_else(|| "33".into()).parse()?;
    match splitting_at_2(&m) {
        Ok((report, source)) => {
            println!("{report} [{source:?}]");
            println!("2 is a common index divisor: {}", common_index_divisor_test(&report));
        }
        Err(e) => println!("p=2: {e}"),
    }
    let f = IntPoly::pure(8, &m);
    for p in [3u64, 5, 7, 11, 13] {
        match ore_index_and_splitting(&f, p)? {
            OreOutcome::Regular { index, report } => println!("{report}, nu_p(ind) = {index}"),
            OreOutcome::Irregular(fail) => println!("p={p}: not regular ({})", fail.detail),
        }
    }
    Ok(())
}
