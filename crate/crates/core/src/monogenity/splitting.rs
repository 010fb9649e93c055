use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::IntPoly;
use crate::newton::{ore_index_and_splitting, OreOutcome, SplittingReport};

use super::MonogenityError;

/// Where a splitting report came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplittingSource {
    /// Ore's splitting read off a 2-regular principal polygon.
    Ore,
    /// The second- and third-order analysis of `m = 272 mod 512`, which is
    /// not 2-regular at first order.
    CaseAnalysis,
}

/// Prime ideals above 2 in `Q(m^(1/8))`.
pub fn splitting_at_2(m: &BigInt) -> Result<(SplittingReport, SplittingSource), MonogenityError> {
    if m.mod_floor(&BigInt::from(512)) == BigInt::from(272) {
        // a side of slope -3 whose residual polynomial has two roots, then a
        // side that needs a third order and yields one totally ramified prime
        let report = SplittingReport::from_pairs(2, &[(2, 1), (2, 1), (4, 1)], "case analysis at second order");
        return Ok((report, SplittingSource::CaseAnalysis));
    }
    let f = IntPoly::pure(8, m);
    match ore_index_and_splitting(&f, 2) {
        Ok(OreOutcome::Regular { report, .. }) => Ok((report, SplittingSource::Ore)),
        Ok(OreOutcome::Irregular(_)) => Err(MonogenityError::Unsupported(m.clone())),
        Err(e) => Err(MonogenityError::InvariantBreach(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::common_index_divisor_test;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn four_primes_for_33() {
        let (r, src) = splitting_at_2(&b(33)).unwrap();
        assert_eq!(src, SplittingSource::Ore);
        assert_eq!(r.pairs(), vec![(1, 1), (1, 1), (2, 1), (4, 1)]);
        assert!(common_index_divisor_test(&r));
    }

    #[test]
    fn three_primes_for_272() {
        let (r, src) = splitting_at_2(&b(272)).unwrap();
        assert_eq!(src, SplittingSource::CaseAnalysis);
        assert_eq!(r.total_degree(), 8);
        assert!(common_index_divisor_test(&r));
    }

    #[test]
    fn totally_ramified_for_3() {
        let (r, _) = splitting_at_2(&b(3)).unwrap();
        assert_eq!(r.pairs(), vec![(8, 1)]);
    }

    #[test]
    fn irregular_classes_are_unsupported() {
        assert_eq!(splitting_at_2(&b(12)).map(|x| x.1), Err(MonogenityError::Unsupported(b(12))));
    }
}
