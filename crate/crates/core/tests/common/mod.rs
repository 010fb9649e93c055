#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Signed;
use pure_octic::octic::{is_irreducible_pure_octic, reduce_parameter};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Whether `m` is a reduced parameter with `x^8 - m` irreducible.
pub fn admissible(m: &BigInt) -> bool {
    m.abs() > BigInt::from(1)
        && reduce_parameter(m).map(|r| &r.reduced == m).unwrap_or(false)
        && is_irreducible_pure_octic(m)
}

pub fn admissible_range(lo: i64, hi: i64) -> Vec<BigInt> {
    (lo..=hi).map(BigInt::from).filter(admissible).collect()
}

/// Admissible `m = +-2^v * prod p^e` with `p <= 13`, `e <= 7`, from a fixed seed.
pub fn random_parameters(count: usize, seed: u64) -> Vec<BigInt> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut m = BigInt::from(sign) << rng.gen_range(0..8u32);
        for p in [3u32, 5, 7, 11, 13] {
            if rng.gen_bool(0.4) {
                m *= BigInt::from(p).pow(rng.gen_range(1..8));
            }
        }
        if admissible(&m) {
            out.push(m);
        }
    }
    out
}
