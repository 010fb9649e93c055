use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::field::FieldElement;
use crate::octic::{power_basis_at_alpha, squarefree_decompose, Decomposition};

use super::element::element_index;
use super::verdict::{Reason, Verdict, VerdictTag};
use super::MonogenityError;

/// A condition that rules out a power integral basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonMonogenicReason {
    /// `m = 1 mod 32`: four primes of residue degree 1 above 2.
    OneMod32,
    /// `m = 272 mod 512`: three primes of residue degree 1 above 2.
    M272Mod512,
    /// `v2(m)` odd and `a2 a6 = 2, 6 mod 8`, as published.
    OddValuationA2A6,
    /// `8 a1 a3 a5 a7` divides neither `a2^2 a6^2 - 1` nor `a2^2 a6^2 + 1`.
    IndexDivisibility,
}

impl NonMonogenicReason {
    pub fn code(self) -> &'static str {
        match self {
            NonMonogenicReason::OneMod32 => "m_1_mod_32",
            NonMonogenicReason::M272Mod512 => "m_272_mod_512",
            NonMonogenicReason::OddValuationA2A6 => "odd_v2_a2a6_2_6_mod_8",
            NonMonogenicReason::IndexDivisibility => "index_divisibility",
        }
    }
}

impl fmt::Display for NonMonogenicReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            NonMonogenicReason::OneMod32 => {
                "m = 1 mod 32: 2 splits into four primes of residue degree 1, so 2 divides every element index"
            }
            NonMonogenicReason::M272Mod512 => {
                "m = 272 mod 512: 2 splits into three primes of residue degree 1, so 2 divides every element index"
            }
            NonMonogenicReason::OddValuationA2A6 => "v2(m) is odd and a2*a6 = 2 or 6 mod 8",
            NonMonogenicReason::IndexDivisibility => {
                "8*a1*a3*a5*a7 divides neither a2^2*a6^2 - 1 nor a2^2*a6^2 + 1"
            }
        };
        f.write_str(text)
    }
}

fn two_valuation(m: &BigInt) -> u64 {
    m.trailing_zeros().unwrap_or(0)
}

fn divisibility_applies(m: &BigInt) -> bool {
    two_valuation(m) % 2 == 1 || m.mod_floor(&BigInt::from(4)) == BigInt::from(3)
}

/// Whether `8 a1 a3 a5 a7` divides `a2^2 a6^2 - 1` or `a2^2 a6^2 + 1`.
/// Only defined when `v2(m)` is odd or `m = 3 mod 4`.
pub fn necessary_condition_index(d: &Decomposition) -> Result<bool, MonogenityError> {
    if !divisibility_applies(d.m()) {
        return Err(MonogenityError::NotApplicable(d.m().clone()));
    }
    let divisor = (BigInt::from(8) * d.a(1) * d.a(3) * d.a(5) * d.a(7)).abs();
    let sq = (d.a(2) * d.a(6)).pow(2);
    let minus: BigInt = &sq - 1;
    let plus: BigInt = &sq + 1;
    Ok(minus.is_multiple_of(&divisor) || plus.is_multiple_of(&divisor))
}

/// First condition that rules out monogenity, if any applies.
pub fn non_monogenic_tests(m: &BigInt, d: &Decomposition) -> Option<NonMonogenicReason> {
    if m.mod_floor(&BigInt::from(32)).is_one() {
        return Some(NonMonogenicReason::OneMod32);
    }
    if m.mod_floor(&BigInt::from(512)) == BigInt::from(272) {
        return Some(NonMonogenicReason::M272Mod512);
    }
    let a26 = (d.a(2) * d.a(6)).mod_floor(&BigInt::from(8));
    if two_valuation(m) % 2 == 1 && (a26 == BigInt::from(2) || a26 == BigInt::from(6)) {
        return Some(NonMonogenicReason::OddValuationA2A6);
    }
    if divisibility_applies(m) && necessary_condition_index(d) == Ok(false) {
        return Some(NonMonogenicReason::IndexDivisibility);
    }
    None
}

/// `m = a^u` with `a` square-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurePower {
    pub a: BigInt,
    pub u: u32,
}

impl PurePower {
    pub fn detect(d: &Decomposition) -> Option<PurePower> {
        let nontrivial: Vec<usize> = (1..=7).filter(|&i| !d.a(i).abs().is_one()).collect();
        match nontrivial[..] {
            [u] if u % 2 == 1 => {
                // the sign sits on a1
                let a = if u == 1 { d.a(1).clone() } else { d.a(1) * d.a(u) };
                Some(PurePower { a, u: u as u32 })
            }
            _ => None,
        }
    }

    /// The solution `(x, y)` of `u x - 8 y = 1` with `0 <= x < 8`.
    pub fn exponents(&self) -> (u32, u32) {
        let x = (0..8).find(|x| (self.u * x) % 8 == 1).expect("u is odd");
        (x, (self.u * x - 1) / 8)
    }

    /// `theta = alpha^x / a^y`, a root of `x^8 - a`.
    pub fn witness(&self, m: &BigInt) -> FieldElement {
        let (x, y) = self.exponents();
        FieldElement::alpha_pow(x as usize, m).scale(&BigRational::new(BigInt::one(), self.a.pow(y)))
    }
}

/// Verdict for `m = a^u`, `u` in {1, 3, 5, 7}, `a` square-free; `None` for
/// other `m` and for `u = 1` without a power basis at `alpha`.
pub fn pure_power_case(m: &BigInt) -> Result<Option<Verdict>, MonogenityError> {
    let d = squarefree_decompose(m)?;
    let Some(pp) = PurePower::detect(&d) else { return Ok(None) };
    if pp.a.abs() < BigInt::from(2) {
        return Ok(None);
    }
    if pp.u == 1 {
        if power_basis_at_alpha(m)? {
            return Ok(Some(Verdict::new(m, VerdictTag::PowerBasisAtAlpha, Reason::PowerBasis)
                .with_witness(FieldElement::alpha(m))));
        }
        return Ok(None);
    }
    let (x, y) = pp.exponents();
    let one_mod_four = pp.a.mod_floor(&BigInt::from(4)).is_one();
    if !one_mod_four {
        let theta = pp.witness(m);
        let index = element_index(&theta)?;
        if !index.is_one() {
            return Err(MonogenityError::InvariantBreach(format!("alpha^{x}/a^{y} has index {index} for m = {m}")));
        }
        let reason = Reason::PurePower { a: pp.a.clone(), u: pp.u, x, y };
        return Ok(Some(Verdict::new(m, VerdictTag::Monogenic, reason).with_witness(theta)));
    }
    if pp.a == BigInt::from(-3) {
        return Ok(Some(Verdict::new(m, VerdictTag::Inconclusive, Reason::PurePowerMinusThree { u: pp.u })));
    }
    Ok(Some(Verdict::new(m, VerdictTag::NotMonogenic, Reason::PurePowerOneModFour { a: pp.a.clone(), u: pp.u })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn dec(m: i64) -> Decomposition {
        squarefree_decompose(&b(m)).unwrap()
    }

    #[test]
    fn divisibility_examples() {
        assert!(!necessary_condition_index(&dec(18)).unwrap());
        assert!(necessary_condition_index(&dec(98)).unwrap());
        assert!(necessary_condition_index(&dec(6)).unwrap());
        assert_eq!(necessary_condition_index(&dec(5)), Err(MonogenityError::NotApplicable(b(5))));
    }

    #[test]
    fn non_monogenic_examples() {
        assert_eq!(non_monogenic_tests(&b(33), &dec(33)), Some(NonMonogenicReason::OneMod32));
        assert_eq!(non_monogenic_tests(&b(272), &dec(272)), Some(NonMonogenicReason::M272Mod512));
        assert_eq!(non_monogenic_tests(&b(18), &dec(18)), Some(NonMonogenicReason::IndexDivisibility));
        assert_eq!(non_monogenic_tests(&b(50), &dec(50)), Some(NonMonogenicReason::IndexDivisibility));
        assert_eq!(non_monogenic_tests(&b(98), &dec(98)), None);
    }

    #[test]
    fn exponent_solutions() {
        for (u, x, y) in [(3, 3, 1), (5, 5, 3), (7, 7, 6)] {
            assert_eq!(PurePower { a: b(2), u }.exponents(), (x, y));
        }
    }

    #[test]
    fn pure_power_examples() {
        let v = pure_power_case(&b(8)).unwrap().unwrap();
        assert_eq!(v.tag, VerdictTag::Monogenic);
        assert_eq!(v.witness.unwrap().pow(8), FieldElement::from_integer(2, &b(8)));

        let v = pure_power_case(&b(32)).unwrap().unwrap();
        assert_eq!(v.tag, VerdictTag::Monogenic);

        assert_eq!(pure_power_case(&b(125)).unwrap().unwrap().tag, VerdictTag::NotMonogenic);
        assert_eq!(pure_power_case(&b(-27)).unwrap().unwrap().tag, VerdictTag::Inconclusive);
        assert!(pure_power_case(&b(12)).unwrap().is_none());
    }
}
