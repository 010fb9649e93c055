//! Independent checks of a claimed integral basis: integrality via exact
//! characteristic polynomials, closure under multiplication, the trace-form
//! discriminant, and agreement with the polygon and Dedekind computations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{char_poly, char_poly_mod_2_64, det_bareiss, to_u64_wrapping, IntPoly};
use crate::field::{FieldElement, DEGREE};
use crate::newton::{dedekind_divides_index, ore_index_and_splitting, OreOutcome};
use crate::octic::{index_of_f, integral_basis, IntegralBasis, OcticError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.overall() { "ok" } else { "FAILED" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Whether the characteristic polynomial of `theta` has integer coefficients.
pub fn is_algebraic_integer(theta: &FieldElement) -> bool {
    if theta.coords().iter().all(|c| c.is_integer()) {
        return true;
    }
    char_poly(theta).is_integral()
}

/// Coordinates of `v` in a triangular basis, by back substitution.
pub fn basis_coordinates(basis: &[FieldElement], v: &FieldElement) -> Option<[BigRational; DEGREE]> {
    let mut rest = v.clone();
    let mut out: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
    for k in (0..DEGREE).rev() {
        let lead = &basis[k].coords()[k];
        if lead.is_zero() {
            return None;
        }
        let c = &rest.coords()[k] / lead;
        if !c.is_zero() {
            rest = &rest - &basis[k].scale(&c);
        }
        out[k] = c;
    }
    Some(out)
}

fn triangular(elements: &[FieldElement]) -> bool {
    elements.len() == DEGREE
        && elements.iter().enumerate().all(|(k, e)| {
            !e.coords()[k].is_zero() && e.coords()[k + 1..].iter().all(Zero::is_zero)
        })
}

/// Whether every product of two basis elements has integer coordinates in
/// the basis.
pub fn ring_closure(basis: &IntegralBasis) -> bool {
    let elements = basis.field_elements();
    if !triangular(&elements) {
        return false;
    }
    for i in 0..DEGREE {
        for j in i..DEGREE {
            let prod = &elements[i] * &elements[j];
            match basis_coordinates(&elements, &prod) {
                Some(c) if c.iter().all(|x| x.is_integer()) => {}
                _ => return false,
            }
        }
    }
    true
}

/// `det[Tr(w_i w_j)]`.
pub fn trace_form_discriminant(elements: &[FieldElement]) -> BigRational {
    let n = elements.len();
    let entries: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| (&elements[i] * &elements[j]).trace()).collect())
        .collect();
    let lcm = entries.iter().flatten().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<Vec<BigInt>> = entries
        .iter()
        .map(|row| row.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect())
        .collect();
    BigRational::new(det_bareiss(&scaled), lcm.pow(n as u32))
}

/// Elements `(sum c_i w_i)/2` with `c_i` in `{0, 1}`, not all zero, that are
/// integral. An empty result means the lattice is maximal at 2. The
/// elements themselves must be integral.
pub fn two_divisible_elements(elements: &[FieldElement]) -> Vec<u32> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let m = elements[0].m().clone();
    // Tr(y e_j) = 1/2 sum_{i in mask} Tr(e_i e_j); integral y needs all of them integral
    let gram: Vec<Vec<BigRational>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| (a * b).trace()).collect())
        .collect();
    // parity rows of an integral Gram matrix turn the test into an xor
    let parity: Option<Vec<u32>> = gram
        .iter()
        .map(|row| {
            row.iter().enumerate().try_fold(0u32, |acc, (j, c)| {
                c.is_integer().then(|| acc | (u32::from(c.to_integer().is_odd()) << j))
            })
        })
        .collect();
    // With L the common denominator, y/2 = (sum L e_i)/2L. Odd primes cannot
    // fail, so integrality is nu_2(c_i) >= i nu_2(2L) for the characteristic
    // coefficients of sum L e_i, which fits modulo 2^64 when 8 nu_2(2L) <= 64.
    let common = elements
        .iter()
        .flat_map(|e| e.coords().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let a = 1 + common.trailing_zeros().unwrap_or(0);
    let wrapped = (a * DEGREE as u64 <= 64).then(|| {
        let scale = BigRational::from_integer(common.clone());
        let mats: Vec<Vec<Vec<u64>>> = elements
            .iter()
            .map(|e| {
                e.scale(&scale)
                    .multiplication_matrix_int()
                    .iter()
                    .map(|row| row.iter().map(to_u64_wrapping).collect())
                    .collect()
            })
            .collect();
        (mats, a)
    });
    let mut found = Vec::new();
    for mask in 1u32..(1 << elements.len()) {
        let selected = || (0..elements.len()).filter(move |&i| mask >> i & 1 == 1);
        let traces_integral = match &parity {
            Some(bits) => selected().fold(0, |acc, i| acc ^ bits[i]) == 0,
            None => (0..elements.len()).all(|j| {
                let s: BigRational = selected().map(|i| gram[i][j].clone()).sum();
                (s * &half).is_integer()
            }),
        };
        if !traces_integral {
            continue;
        }
        let integral = match &wrapped {
            Some((mats, a)) => {
                let mut sum = vec![vec![0u64; DEGREE]; DEGREE];
                for i in selected() {
                    for (r, row) in mats[i].iter().enumerate() {
                        for (c, v) in row.iter().enumerate() {
                            sum[r][c] = sum[r][c].wrapping_add(*v);
                        }
                    }
                }
                char_poly_mod_2_64(&sum)
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| u64::from(c.trailing_zeros()) >= i as u64 * a)
            }
            None => {
                let mut y = FieldElement::zero(&m);
                for i in selected() {
                    y = &y + &elements[i];
                }
                is_algebraic_integer(&y.scale(&half))
            }
        };
        if integral {
            found.push(mask);
        }
    }
    found
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed, detail: detail.into() }
}

/// Runs every check on the basis returned by `integral_basis(m)`.
pub fn verify_basis(m: &BigInt) -> Result<VerificationReport, OcticError> {
    let basis = integral_basis(m)?;
    verify_given_basis(&basis)
}

/// Runs every check on an arbitrary claimed basis for `Q(m^(1/8))`.
pub fn verify_given_basis(basis: &IntegralBasis) -> Result<VerificationReport, OcticError> {
    let m = basis.m().clone();
    let report = index_of_f(&m)?;
    let elements = basis.field_elements();
    let mut checks = Vec::new();

    let non_integral: Vec<usize> = (0..DEGREE).filter(|&k| !is_algebraic_integer(&elements[k])).collect();
    checks.push(check(
        "integral",
        non_integral.is_empty(),
        if non_integral.is_empty() {
            "all 8 elements are algebraic integers".to_string()
        } else {
            format!("elements {non_integral:?} are not integral")
        },
    ));

    let closed = ring_closure(basis);
    checks.push(check(
        "ring_closure",
        closed,
        if closed { "all 36 products lie in the span" } else { "some product leaves the span" },
    ));

    let den = basis.denominator_product();
    let disc_f = report.disc_f.to_integer();
    let expected = BigRational::new(disc_f.clone(), den.pow(2));
    let trace_disc = trace_form_discriminant(&elements);
    checks.push(check(
        "trace_discriminant",
        trace_disc == expected,
        format!("det Tr(w_i w_j) = {trace_disc}, Delta/den^2 = {expected}"),
    ));

    let ind = report.index.to_integer();
    checks.push(check(
        "index_product",
        den == ind,
        format!("product of denominators {den}, ind(f) = {ind}"),
    ));

    let f = IntPoly::pure(DEGREE, &m);
    let mut ore_ok = true;
    let mut ore_detail = Vec::new();
    for p in report.disc_f.primes().filter(|&p| p != 2) {
        match ore_index_and_splitting(&f, p).map_err(|e| e.to_string()) {
            Ok(OreOutcome::Regular { index, .. }) => {
                let claimed = report.valuation(p) as u64;
                ore_ok &= index == claimed;
                ore_detail.push(format!("p={p}: polygon {index}, claimed {claimed}"));
            }
            Ok(OreOutcome::Irregular(fail)) => {
                ore_ok = false;
                ore_detail.push(format!("p={p}: not regular ({})", fail.detail));
            }
            Err(e) => {
                ore_ok = false;
                ore_detail.push(format!("p={p}: {e}"));
            }
        }
    }
    checks.push(check(
        "ore_odd_primes",
        ore_ok,
        if ore_detail.is_empty() { "no odd prime divides m".to_string() } else { ore_detail.join("; ") },
    ));

    let mut dedekind_ok = true;
    let mut dedekind_detail = Vec::new();
    for p in report.disc_f.primes() {
        match dedekind_divides_index(&f, p) {
            Ok(divides) => {
                let claimed = report.valuation(p) > 0;
                dedekind_ok &= divides == claimed;
                dedekind_detail.push(format!("p={p}: divides={divides}"));
            }
            Err(e) => {
                dedekind_ok = false;
                dedekind_detail.push(format!("p={p}: {e}"));
            }
        }
    }
    checks.push(check("dedekind", dedekind_ok, dedekind_detail.join("; ")));

    let halves = if non_integral.is_empty() { two_divisible_elements(&elements) } else { Vec::new() };
    checks.push(check(
        "two_maximal",
        non_integral.is_empty() && halves.is_empty(),
        if halves.is_empty() {
            "no integral element of the form (sum c_i w_i)/2".to_string()
        } else {
            format!("{} integral half-combinations, first mask {:#010b}", halves.len(), halves[0])
        },
    ));

    Ok(VerificationReport { subject: format!("m = {m} ({})", basis.case()), checks })
}

/// Triangular basis of the lattice spanned by `vectors` (full rank): element
/// `k` has degree `k` and positive leading coordinate.
pub fn triangular_hnf(vectors: &[FieldElement]) -> Vec<FieldElement> {
    let m = vectors[0].m().clone();
    let lcm = vectors
        .iter()
        .flat_map(|v| v.coords().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = BigRational::from_integer(lcm.clone());
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.coords().iter().map(|c| (c * &scale).to_integer()).collect())
        .collect();
    let mut out: Vec<Vec<BigInt>> = vec![Vec::new(); DEGREE];
    for k in (0..DEGREE).rev() {
        // gcd-reduce column k among remaining rows
        loop {
            let mut nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][k].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by(|&a, &b| rows[a][k].magnitude().cmp(rows[b][k].magnitude()));
            let pivot = nonzero[0];
            for &i in &nonzero[1..] {
                let q = rows[i][k].div_floor(&rows[pivot][k]);
                let pivot_row = rows[pivot].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * y;
                }
            }
        }
        let idx = (0..rows.len()).find(|&i| !rows[i][k].is_zero()).expect("lattice has full rank");
        let mut row = rows.remove(idx);
        if row[k] < BigInt::zero() {
            row.iter_mut().for_each(|x| *x = -x.clone());
        }
        out[k] = row;
    }
    out.into_iter()
        .map(|row| {
            FieldElement::new(std::array::from_fn(|i| BigRational::new(row[i].clone(), lcm.clone())), m.clone())
        })
        .collect()
}

/// Enlarges an order (given by a triangular basis of integral elements) until
/// it is maximal at 2, by adjoining integral half-combinations.
pub fn two_maximal_order(elements: &[FieldElement]) -> Vec<FieldElement> {
    let mut current = triangular_hnf(elements);
    loop {
        let found = two_divisible_elements(&current);
        let Some(&mask) = found.first() else { return current };
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut y = FieldElement::zero(current[0].m());
        for (i, e) in current.iter().enumerate() {
            if mask >> i & 1 == 1 {
                y = &y + e;
            }
        }
        let mut gens = current.clone();
        gens.push(y.scale(&half));
        current = triangular_hnf(&gens);
    }
}
