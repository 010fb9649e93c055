use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{factorize, p_adic_valuation, FactoredInteger};

use super::{integral_basis, squarefree_decompose, CaseId, OcticError};

/// `ind(f)`, `Delta(f)` and `d_K` for `f = x^8 - m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub m: BigInt,
    pub case: CaseId,
    pub index: FactoredInteger,
    pub disc_f: FactoredInteger,
    pub d_k: FactoredInteger,
    /// `nu_2(ind f) - nu_2(A_2 ... A_7)`.
    pub two_adic_increment: u32,
}

impl IndexReport {
    /// `nu_p(ind f)`.
    pub fn valuation(&self, p: u64) -> u32 {
        self.index.exponent(p)
    }
}

/// `Delta(x^8 - m) = -2^24 m^7`, factored.
pub(crate) fn disc_pure_octic(m: &BigInt) -> Result<FactoredInteger, OcticError> {
    let fm = factorize(m)?;
    let two24 = FactoredInteger::from_parts(1, [(2, 24)]);
    let signed = fm.pow(7).mul(&two24);
    Ok(FactoredInteger::from_parts(-signed.sign(), signed.factors().iter().copied()))
}

/// Index of `Z[alpha]` in the maximal order, the discriminants, and a
/// consistency check of the two ways of getting `nu_2(ind f)`.
pub fn index_of_f(m: &BigInt) -> Result<IndexReport, OcticError> {
    let basis = integral_basis(m)?;
    let d = squarefree_decompose(m)?;
    let case = basis.case();
    let index = factorize(&basis.denominator_product())?;
    let a_product = d.big_a_product();
    let expected_two = p_adic_valuation(&a_product, 2)? + case.two_adic_increment();
    if index.exponent(2) != expected_two {
        return Err(OcticError::IndexMismatch {
            m: m.clone(),
            detail: format!(
                "denominators give nu_2 = {}, case {case} predicts {expected_two}",
                index.exponent(2)
            ),
        });
    }
    let a_fact = factorize(&a_product)?;
    for p in a_fact.primes().chain(index.primes()).filter(|&p| p != 2) {
        if index.exponent(p) != a_fact.exponent(p) {
            return Err(OcticError::IndexMismatch {
                m: m.clone(),
                detail: format!("nu_{p} of the denominators differs from nu_{p}(A_2...A_7)"),
            });
        }
    }
    let disc_f = disc_pure_octic(m)?;
    let d_k = disc_f
        .checked_div(&index.pow(2))
        .ok_or_else(|| OcticError::IndexMismatch { m: m.clone(), detail: "ind(f)^2 does not divide Delta(f)".into() })?;
    Ok(IndexReport { m: m.clone(), case, index, disc_f, d_k, two_adic_increment: case.two_adic_increment() })
}

/// `Z[alpha]` is the maximal order iff `m` is square-free and `m != 1 mod 4`.
pub fn power_basis_at_alpha(m: &BigInt) -> Result<bool, OcticError> {
    let fact = factorize(m)?;
    let square_free = fact.factors().iter().all(|&(_, e)| e == 1);
    Ok(square_free && m.mod_floor(&BigInt::from(4)) != BigInt::from(1))
}
