use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{is_irreducible_over_q, is_prime_u64, IntPoly, ModPoly};

use super::{polygon_index, principal_polygon, residual_polynomial, NewtonError};

/// One prime ideal above `p`: ramification index, residue degree and where
/// it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingEntry {
    pub e: usize,
    pub f: usize,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    pub p: u64,
    pub entries: Vec<SplittingEntry>,
}

impl SplittingReport {
    pub fn new(p: u64, entries: Vec<SplittingEntry>) -> Self {
        SplittingReport { p, entries }
    }

    /// Builds a report from bare `(e, f)` pairs.
    pub fn from_pairs(p: u64, pairs: &[(usize, usize)], provenance: &str) -> Self {
        let entries = pairs
            .iter()
            .map(|&(e, f)| SplittingEntry { e, f, provenance: provenance.to_string() })
            .collect();
        SplittingReport { p, entries }
    }

    /// `sum e * f`.
    pub fn total_degree(&self) -> usize {
        self.entries.iter().map(|x| x.e * x.f).sum()
    }

    /// `(e, f)` pairs sorted ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.entries.iter().map(|x| (x.e, x.f)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for SplittingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(e, r)| format!("(e={e}, f={r})")).collect();
        write!(f, "p={}: {}", self.p, parts.join(", "))
    }
}

/// Returned instead of an index when some residual polynomial has a
/// repeated factor. `lower_bound` is the sum of the polygon indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityFailure {
    pub p: u64,
    pub lower_bound: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OreOutcome {
    Regular { index: u64, report: SplittingReport },
    Irregular(RegularityFailure),
}

impl OreOutcome {
    pub fn index(&self) -> Option<u64> {
        match self {
            OreOutcome::Regular { index, .. } => Some(*index),
            OreOutcome::Irregular(_) => None,
        }
    }

    pub fn report(&self) -> Option<&SplittingReport> {
        match self {
            OreOutcome::Regular { report, .. } => Some(report),
            OreOutcome::Irregular(_) => None,
        }
    }
}

fn check_f(f: &IntPoly, p: u64) -> Result<(), NewtonError> {
    if !is_prime_u64(p) {
        return Err(NewtonError::NotPrime(p));
    }
    if !is_irreducible_over_q(f) {
        return Err(NewtonError::ReducibleF);
    }
    Ok(())
}

/// Monic lifts of the irreducible factors of `f mod p` with multiplicities.
fn lifted_factors(f: &IntPoly, p: u64) -> Vec<(IntPoly, u32)> {
    ModPoly::from_int_poly(f, p)
        .factor()
        .into_iter()
        .map(|(g, l)| (g.to_int_poly(), l))
        .collect()
}

/// Dedekind's test: whether `p` divides the index of `Z[x]/(f)` in the maximal order.
pub fn dedekind_divides_index(f: &IntPoly, p: u64) -> Result<bool, NewtonError> {
    check_f(f, p)?;
    let factors = lifted_factors(f, p);
    let product = factors.iter().fold(IntPoly::one(), |acc, (g, l)| &acc * &g.pow(*l));
    let m = (f - &product)
        .exact_div_scalar(&BigInt::from(p))
        .expect("f agrees with its factorization mod p");
    let m_bar = ModPoly::from_int_poly(&m, p);
    Ok(factors
        .iter()
        .any(|(g, l)| *l > 1 && ModPoly::from_int_poly(g, p).divides(&m_bar)))
}

/// Whether every residual polynomial of every side of every factor's
/// polygon is square-free.
pub fn is_p_regular(f: &IntPoly, p: u64) -> Result<bool, NewtonError> {
    if !is_prime_u64(p) {
        return Err(NewtonError::NotPrime(p));
    }
    for (phi, _) in lifted_factors(f, p) {
        let polygon = principal_polygon(f, &phi, p)?;
        for side in polygon.sides() {
            if !residual_polynomial(f, &phi, p, side)?.is_square_free() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `nu_p` of the index and the factorization of `p`, when `f` is `p`-regular.
pub fn ore_index_and_splitting(f: &IntPoly, p: u64) -> Result<OreOutcome, NewtonError> {
    check_f(f, p)?;
    let factors = lifted_factors(f, p);
    let n = f.degree().unwrap_or(0);
    if let [(phi, 1)] = &factors[..] {
        if phi.degree() == Some(n) {
            // irreducible mod p (f may equal its own lift, where the polygon is empty)
            let entry = SplittingEntry { e: 1, f: n, provenance: format!("f irreducible mod {p}") };
            return Ok(OreOutcome::Regular { index: 0, report: SplittingReport::new(p, vec![entry]) });
        }
    }
    let mut index = 0;
    let mut entries = Vec::new();
    let mut irregular = Vec::new();
    for (phi, _) in factors {
        let deg_phi = phi.degree().unwrap();
        let polygon = principal_polygon(f, &phi, p)?;
        index += polygon_index(&polygon, deg_phi);
        for (k, side) in polygon.sides().iter().enumerate() {
            let residual = residual_polynomial(f, &phi, p, side)?;
            if !residual.is_square_free() {
                irregular.push(format!("phi={phi}, side {}: residual {residual} is not square-free", k + 1));
                continue;
            }
            for degree in residual.factor_degrees() {
                entries.push(SplittingEntry {
                    e: side.e(),
                    f: deg_phi * degree,
                    provenance: format!("phi={phi}, side {} slope {}, residual factor of degree {degree}", k + 1, side.slope()),
                });
            }
        }
    }
    if irregular.is_empty() {
        let report = SplittingReport::new(p, entries);
        debug_assert_eq!(Some(report.total_degree()), f.degree());
        Ok(OreOutcome::Regular { index, report })
    } else {
        Ok(OreOutcome::Irregular(RegularityFailure { p, lower_bound: index, detail: irregular.join("; ") }))
    }
}

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducible polynomials of degree `f` over `F_p`.
pub(crate) fn irreducible_count(p: u64, f: usize) -> BigInt {
    let total: BigInt = (1..=f)
        .filter(|d| f.is_multiple_of(*d))
        .map(|d| BigInt::from(mobius(d)) * BigInt::from(p).pow((f / d) as u32))
        .sum();
    total / BigInt::from(f)
}

/// Whether the splitting forces `p` to divide every element index: more
/// primes of some residue degree than there are irreducible polynomials of
/// that degree mod `p`.
pub fn common_index_divisor_test(report: &SplittingReport) -> bool {
    let mut by_degree: BTreeMap<usize, u64> = BTreeMap::new();
    for entry in &report.entries {
        *by_degree.entry(entry.f).or_default() += 1;
    }
    by_degree
        .into_iter()
        .any(|(f, count)| BigInt::from(count) > irreducible_count(report.p, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pure(m: i64) -> IntPoly {
        IntPoly::pure(8, &BigInt::from(m))
    }

    #[test]
    fn dedekind_examples() {
        assert!(!dedekind_divides_index(&pure(3), 2).unwrap());
        assert!(dedekind_divides_index(&pure(5), 2).unwrap());
        assert!(!dedekind_divides_index(&pure(2), 2).unwrap());
        assert_eq!(dedekind_divides_index(&pure(16), 2), Err(NewtonError::ReducibleF));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_p_regular(&pure(5), 2).unwrap());
        assert!(!is_p_regular(&pure(4 * 3), 2).unwrap());
        assert!(is_p_regular(&pure(3), 3).unwrap());
    }

    #[test]
    fn ore_for_five() {
        let out = ore_index_and_splitting(&pure(5), 2).unwrap();
        assert_eq!(out.index(), Some(4));
        assert_eq!(out.report().unwrap().pairs(), vec![(4, 2)]);
    }

    #[test]
    fn ore_for_thirty_three() {
        let out = ore_index_and_splitting(&pure(33), 2).unwrap();
        let report = out.report().unwrap();
        assert_eq!(report.pairs(), vec![(1, 1), (1, 1), (2, 1), (4, 1)]);
        assert_eq!(report.total_degree(), 8);
        assert!(common_index_divisor_test(report));
    }

    #[test]
    fn totally_ramified_at_three() {
        let out = ore_index_and_splitting(&pure(3), 3).unwrap();
        assert_eq!(out.index(), Some(0));
        assert_eq!(out.report().unwrap().pairs(), vec![(8, 1)]);
        assert!(!common_index_divisor_test(out.report().unwrap()));
    }

    #[test]
    fn irregular_reports_lower_bound() {
        match ore_index_and_splitting(&pure(12), 2).unwrap() {
            OreOutcome::Irregular(fail) => assert_eq!(fail.lower_bound, 4),
            other => panic!("expected irregular, got {other:?}"),
        }
    }

    #[test]
    fn counts_of_irreducibles() {
        assert_eq!(irreducible_count(2, 1), BigInt::from(2));
        assert_eq!(irreducible_count(2, 2), BigInt::from(1));
        assert_eq!(irreducible_count(2, 4), BigInt::from(3));
        assert_eq!(irreducible_count(3, 2), BigInt::from(3));
        let r = SplittingReport::from_pairs(2, &[(2, 1), (2, 1), (4, 1)], "case data");
        assert!(common_index_divisor_test(&r));
    }
}
