use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::field::FieldElement;
use crate::octic::{is_irreducible_pure_octic, power_basis_at_alpha, reduce_parameter, squarefree_decompose, OcticError};

use super::conditions::{non_monogenic_tests, pure_power_case, NonMonogenicReason};
use super::search::{search_generator, SearchOutcome, DEFAULT_SEARCH_BOUND};
use super::MonogenityError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    PowerBasisAtAlpha,
    Monogenic,
    NotMonogenic,
    Inconclusive,
}

impl VerdictTag {
    pub fn label(self) -> &'static str {
        match self {
            VerdictTag::PowerBasisAtAlpha => "PowerBasisAtAlpha",
            VerdictTag::Monogenic => "Monogenic",
            VerdictTag::NotMonogenic => "NotMonogenic",
            VerdictTag::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The condition behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    PowerBasis,
    PurePower { a: BigInt, u: u32, x: u32, y: u32 },
    PurePowerOneModFour { a: BigInt, u: u32 },
    PurePowerMinusThree { u: u32 },
    Condition(NonMonogenicReason),
    SearchWitness { bound: u32 },
    Undecided { bound: u32 },
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::PowerBasis => "power_basis",
            Reason::PurePower { .. } => "pure_power",
            Reason::PurePowerOneModFour { .. } => "pure_power_1_mod_4",
            Reason::PurePowerMinusThree { .. } => "pure_power_minus_3",
            Reason::Condition(c) => c.code(),
            Reason::SearchWitness { .. } => "search_witness",
            Reason::Undecided { .. } => "undecided",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::PowerBasis => write!(f, "m is square-free and m != 1 mod 4, so Z[alpha] is maximal"),
            Reason::PurePower { a, u, x, y } => write!(
                f,
                "m = ({a})^{u} with a square-free, a != 1 mod 4; theta = alpha^{x}/({a})^{y} is a root of x^8 - ({a})"
            ),
            Reason::PurePowerOneModFour { a, u } => {
                write!(f, "m = ({a})^{u} with a square-free and a = 1 mod 4")
            }
            Reason::PurePowerMinusThree { u } => write!(
                f,
                "m = (-3)^{u}: the pure-power criterion excludes a = -3 and no generator is known"
            ),
            Reason::Condition(c) => write!(f, "{c}"),
            Reason::SearchWitness { bound } => write!(f, "index-1 element found in the box |y_k| <= {bound}"),
            Reason::Undecided { bound } => write!(
                f,
                "no criterion applies and the box |y_k| <= {bound} holds no index-1 element"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// The reduced parameter the verdict is about.
    pub m: BigInt,
    pub tag: VerdictTag,
    pub reason: Reason,
    pub witness: Option<FieldElement>,
    pub evidence: Option<SearchOutcome>,
}

impl Verdict {
    pub fn new(m: &BigInt, tag: VerdictTag, reason: Reason) -> Self {
        Verdict { m: m.clone(), tag, reason, witness: None, evidence: None }
    }

    pub fn with_witness(mut self, witness: FieldElement) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_evidence(mut self, evidence: SearchOutcome) -> Self {
        self.evidence = Some(evidence);
        self
    }
}

/// Monogenity verdict for `Q(m^(1/8))` with the default search box.
pub fn monogenic_verdict(m: &BigInt) -> Result<Verdict, MonogenityError> {
    monogenic_verdict_with_bound(m, DEFAULT_SEARCH_BOUND)
}

/// Criteria first, then a bounded search; `Inconclusive` if nothing decides.
pub fn monogenic_verdict_with_bound(m: &BigInt, bound: u32) -> Result<Verdict, MonogenityError> {
    let m = reduce_parameter(m)?.reduced;
    if !is_irreducible_pure_octic(&m) {
        return Err(OcticError::Reducible(m).into());
    }
    if power_basis_at_alpha(&m)? {
        return Ok(Verdict::new(&m, VerdictTag::PowerBasisAtAlpha, Reason::PowerBasis)
            .with_witness(FieldElement::alpha(&m)));
    }
    if let Some(v) = pure_power_case(&m)? {
        return Ok(v);
    }
    let d = squarefree_decompose(&m)?;
    if let Some(reason) = non_monogenic_tests(&m, &d) {
        return Ok(Verdict::new(&m, VerdictTag::NotMonogenic, Reason::Condition(reason)));
    }
    let outcome = search_generator(&m, bound)?;
    if outcome.found_index_one() {
        let witness = outcome.best.as_ref().map(|c| c.element.clone());
        debug_assert!(outcome.best.as_ref().is_some_and(|c| c.index.is_one()));
        let mut v = Verdict::new(&m, VerdictTag::Monogenic, Reason::SearchWitness { bound }).with_evidence(outcome);
        v.witness = witness;
        return Ok(v);
    }
    Ok(Verdict::new(&m, VerdictTag::Inconclusive, Reason::Undecided { bound }).with_evidence(outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn dispatcher_examples() {
        assert_eq!(monogenic_verdict(&b(6)).unwrap().tag, VerdictTag::PowerBasisAtAlpha);
        let v = monogenic_verdict(&b(33)).unwrap();
        assert_eq!(v.tag, VerdictTag::NotMonogenic);
        assert_eq!(v.reason, Reason::Condition(NonMonogenicReason::OneMod32));
        assert_eq!(monogenic_verdict(&b(18)).unwrap().tag, VerdictTag::NotMonogenic);
    }

    #[test]
    fn reducible_is_reported() {
        assert!(matches!(
            monogenic_verdict(&b(16)),
            Err(MonogenityError::Octic(OcticError::Reducible(_)))
        ));
    }

    #[test]
    fn reduction_happens_first() {
        // 2^9 reduces to 2
        let v = monogenic_verdict(&b(512)).unwrap();
        assert_eq!(v.m, b(2));
        assert_eq!(v.tag, VerdictTag::PowerBasisAtAlpha);
    }
}
