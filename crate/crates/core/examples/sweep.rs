//! Parallel sweep: verify every basis in a range and tally verdicts.
//!
//!     cargo run --release --example sweep -- -1000 1000

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pure_octic::monogenity::monogenic_verdict_with_bound;
use pure_octic::octic::{classify_case, is_irreducible_pure_octic, reduce_parameter};
use pure_octic::oracle::verify_basis;
use rayon::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lo: i64 = args.next().unwrap_or_else(|| "-300".into()).parse()?;
    let hi: i64 = args.next().unwrap_or_else(|| "300".into()).parse()?;
    let rows: Vec<_> = (lo..=hi)
        .into_par_iter()
        .filter_map(|m| {
            let m = BigInt::from(m);
            let red = reduce_parameter(&m).ok()?;
            (red.reduced == m && is_irreducible_pure_octic(&m)).then_some(m)
        })
        .map(|m| {
            let ok = verify_basis(&m).map(|r| r.overall()).unwrap_or(false);
            let tag = monogenic_verdict_with_bound(&m, 1).map(|v| v.tag.label()).unwrap_or("error");
            (classify_case(&m), tag, ok)
        })
        .collect();
    let mut tally: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for (case, tag, _) in &rows {
        *tally.entry((case.label(), tag)).or_default() += 1;
    }
    for ((case, tag), n) in tally {
        println!("{case:<11} {tag:<18} {n}");
    }
    let bad = rows.iter().filter(|r| !r.2).count();
    println!("{} fields, {bad} verification failures", rows.len());
    Ok(())
}
