//! Bounded search for the element of smallest index.
//!
//!     cargo run --release --example search -- 98 2

use num_bigint::BigInt;
use pure_octic::monogenity::{element_index, search_generator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: BigInt = args.next().unwrap_or_else(|| "98".into()).parse()?;
    let bound: u32 = args.next().unwrap_or_else(|| "2".into()).parse()?;
    let out = search_generator(&m, bound)?;
    println!("{} candidates, {} not primitive, {} of index 1", out.examined, out.not_primitive, out.index_one_count);
    if let Some(best) = &out.best {
        println!("minimal index {} at {}", best.index, best.element);
        assert_eq!(element_index(&best.element)?, best.index);
    }
    Ok(())
}
