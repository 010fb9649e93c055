//! Bounded search for small-index generators `theta = sum y_k w_k`.
//!
//! Each candidate's index is estimated from its conjugates,
//! `ind = |prod (theta_i - theta_j)| / sqrt|d_K|`: first in `f64`, and for
//! candidates that are ill-conditioned or could be the minimum, again in
//! fixed point with 192 fractional bits. Every candidate estimated below 1.5
//! and the final minimum are then recomputed exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::field::{FieldElement, DEGREE};
use crate::octic::{index_of_f, integral_basis, IntegralBasis};

use super::element::{element_index_with, GeneratorCandidate};
use super::MonogenityError;

pub const DEFAULT_SEARCH_BOUND: u32 = 2;

const PRECISION: u32 = 192;

/// Summary of one bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub m: BigInt,
    pub bound: u32,
    /// Candidates examined; the whole box `|y_k| <= bound`, `k = 1..7`.
    pub examined: u64,
    /// Candidates lying in a proper subfield.
    pub not_primitive: u64,
    /// Exactly confirmed index-1 candidates.
    pub index_one_count: u64,
    /// Minimal index, lexicographically smallest coordinates on ties.
    pub best: Option<GeneratorCandidate>,
    /// The full box was enumerated.
    pub exhaustive: bool,
}

impl SearchOutcome {
    pub fn found_index_one(&self) -> bool {
        self.index_one_count > 0
    }

    pub fn minimal_index(&self) -> Option<&BigInt> {
        self.best.as_ref().map(|c| &c.index)
    }
}

#[derive(Clone, Debug)]
struct Complex {
    re: BigInt,
    im: BigInt,
}

impl Complex {
    fn zero() -> Self {
        Complex { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn add_scaled(&mut self, other: &Complex, k: i64) {
        if k != 0 {
            self.re += &other.re * k;
            self.im += &other.im * k;
        }
    }

    fn sub(&self, other: &Complex) -> Complex {
        Complex { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    fn mul(&self, other: &Complex) -> Complex {
        Complex {
            re: (&self.re * &other.re - &self.im * &other.im) >> PRECISION,
            im: (&self.re * &other.im + &self.im * &other.re) >> PRECISION,
        }
    }
}

/// `cos(k pi / 8)` and `sin(k pi / 8)` for `k = 0..16`, fixed point.
fn eighth_angles() -> Vec<(BigInt, BigInt)> {
    let one = BigInt::one() << PRECISION;
    let sqrt2: BigInt = (BigInt::from(2) << (2 * PRECISION)).sqrt();
    let half_sqrt2: BigInt = &sqrt2 >> 1;
    let c1: BigInt = ((BigInt::from(2) * &one + &sqrt2) << PRECISION).sqrt() >> 1;
    let s1: BigInt = ((BigInt::from(2) * &one - &sqrt2) << PRECISION).sqrt() >> 1;
    // cos for the first quadrant, k = 0..4
    let quadrant = [one.clone(), c1.clone(), half_sqrt2.clone(), s1.clone(), BigInt::zero()];
    let cos = |k: usize| -> BigInt {
        let k = k % 16;
        match k {
            0..=4 => quadrant[k].clone(),
            5..=8 => -&quadrant[8 - k],
            9..=12 => -&quadrant[k - 8],
            _ => quadrant[16 - k].clone(),
        }
    };
    (0..16).map(|k| (cos(k), cos(k + 12))).collect()
}

/// Fixed-point conjugates `w_k^(i)` of the basis elements, `[k][i]`.
fn basis_conjugates(basis: &IntegralBasis) -> Vec<Vec<Complex>> {
    let m = basis.m();
    let angles = eighth_angles();
    let r = (m.abs() << (8 * PRECISION)).nth_root(8);
    let mut r_pow = vec![BigInt::one() << PRECISION];
    for j in 1..DEGREE {
        let next = (&r_pow[j - 1] * &r) >> PRECISION;
        r_pow.push(next);
    }
    let shift = usize::from(m.is_negative());
    basis
        .elements()
        .iter()
        .map(|e| {
            let coeffs = e.numerator_coeffs();
            (0..DEGREE)
                .map(|i| {
                    let mut acc = Complex::zero();
                    for (j, c) in coeffs.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (cs, sn) = &angles[(j * (2 * i + shift)) % 16];
                        let mag = c * &r_pow[j];
                        acc.re += (&mag * cs) >> PRECISION;
                        acc.im += (&mag * sn) >> PRECISION;
                    }
                    acc.re /= e.denominator();
                    acc.im /= e.denominator();
                    acc
                })
                .collect()
        })
        .collect()
}

/// `f64` copies of the fixed-point conjugates.
fn float_conjugates(conj: &[Vec<Complex>]) -> Vec<Vec<(f64, f64)>> {
    let to_f64 = |v: &BigInt| -> f64 {
        let bits = v.bits();
        let drop = bits.saturating_sub(60);
        let top = (v >> drop).to_f64().unwrap_or(0.0);
        top * 2f64.powi(drop as i32 - PRECISION as i32)
    };
    conj.iter().map(|row| row.iter().map(|c| (to_f64(&c.re), to_f64(&c.im))).collect()).collect()
}

/// Relative gap below which the `f64` estimate is not trusted.
const CONDITION_LIMIT: f64 = 1e-9;

/// `ln` of the index estimate in `f64`, or `None` when some pair of
/// conjugates is too close for double precision.
fn float_log_estimate(conj: &[Vec<(f64, f64)>], y: &[i64; 7], half_log_d_k: f64) -> Option<f64> {
    let mut theta = [(0.0f64, 0.0f64); DEGREE];
    for (i, t) in theta.iter_mut().enumerate() {
        for (k, &yk) in y.iter().enumerate() {
            let c = conj[k + 1][i];
            t.0 += yk as f64 * c.0;
            t.1 += yk as f64 * c.1;
        }
    }
    let scale = theta.iter().map(|t| t.0.hypot(t.1)).fold(0.0, f64::max);
    let mut log = 0.0;
    for i in 0..DEGREE {
        for j in i + 1..DEGREE {
            let gap = (theta[i].0 - theta[j].0).hypot(theta[i].1 - theta[j].1);
            if gap <= scale * CONDITION_LIMIT {
                return None;
            }
            log += gap.ln();
        }
    }
    Some(log - half_log_d_k)
}

fn log_of(v: &BigInt) -> f64 {
    let bits = v.bits();
    let drop = bits.saturating_sub(60);
    (v >> drop).to_f64().unwrap_or(0.0).ln() + drop as f64 * std::f64::consts::LN_2
}

fn decode(mut n: u64, bound: u32) -> [i64; 7] {
    let width = 2 * u64::from(bound) + 1;
    let mut y = [0i64; 7];
    for slot in y.iter_mut() {
        *slot = (n % width) as i64 - i64::from(bound);
        n /= width;
    }
    y
}

/// Rounded estimate of the index of `sum y_k w_k`; zero for non-primitive
/// elements.
fn estimate(conj: &[Vec<Complex>], y: &[i64; 7], d_k_abs: &BigInt) -> BigInt {
    let theta: Vec<Complex> = (0..DEGREE)
        .map(|i| {
            let mut acc = Complex::zero();
            for (k, &yk) in y.iter().enumerate() {
                acc.add_scaled(&conj[k + 1][i], yk);
            }
            acc
        })
        .collect();
    let mut prod = Complex { re: BigInt::one() << PRECISION, im: BigInt::zero() };
    for i in 0..DEGREE {
        for j in i + 1..DEGREE {
            prod = prod.mul(&theta[i].sub(&theta[j]));
        }
    }
    let norm_sq = &prod.re * &prod.re + &prod.im * &prod.im;
    let root = (norm_sq / d_k_abs).sqrt();
    (root + (BigInt::one() << (PRECISION - 1))) >> PRECISION
}

/// Estimates are exact for small indices and agree to about 2^-100
/// relatively for large ones.
fn agrees(estimate: &BigInt, exact: &BigInt) -> bool {
    let diff = (estimate - exact).abs();
    diff.is_zero() || (exact.bits() > 64 && (diff << 100u32) <= *exact)
}

fn element_of(basis: &[FieldElement], y: &[i64; 7]) -> FieldElement {
    let m = basis[0].m();
    let mut acc = FieldElement::zero(m);
    for (k, &yk) in y.iter().enumerate() {
        if yk != 0 {
            acc = &acc + &basis[k + 1].scale(&BigInt::from(yk).into());
        }
    }
    acc
}

#[derive(Default)]
struct Partial {
    examined: u64,
    /// `ln` of the best fixed-point estimate so far, for the `f64` filter.
    best_log: Option<f64>,
    /// Candidates below 1.5 (index 1 or not primitive), kept for exact checks.
    small: Vec<[i64; 7]>,
    best: Option<(BigInt, [i64; 7])>,
}

fn better(a: &(BigInt, [i64; 7]), b: &(BigInt, [i64; 7])) -> bool {
    match a.0.cmp(&b.0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a.1 < b.1,
    }
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.examined += other.examined;
        self.best_log = None;
        self.small.extend(other.small);
        self.best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Searches `theta = sum_{k=1}^{7} y_k w_k`, `|y_k| <= bound`, in the
/// integral basis of a reduced `m`.
pub fn search_generator(m: &BigInt, bound: u32) -> Result<SearchOutcome, MonogenityError> {
    let basis = integral_basis(m)?;
    let d_k = index_of_f(m)?.d_k.to_integer();
    let d_k_abs = d_k.abs();
    let conj = basis_conjugates(&basis);
    let fconj = float_conjugates(&conj);
    let half_log_d_k = log_of(&d_k_abs) / 2.0;
    let elements = basis.field_elements();
    let total = (2 * u64::from(bound) + 1).pow(7);

    let partial = (0..total)
        .into_par_iter()
        .fold(Partial::default, |mut acc, n| {
            let y = decode(n, bound);
            acc.examined += 1;
            if y.iter().all(|&v| v == 0) {
                acc.small.push(y);
                return acc;
            }
            if let Some(log) = float_log_estimate(&fconj, &y, half_log_d_k) {
                let could_be_small = log < 1.5f64.ln() + 1e-6;
                let could_be_best = acc.best_log.is_none_or(|b| log <= b + 1e-6);
                if !could_be_small && !could_be_best {
                    return acc;
                }
            }
            let est = estimate(&conj, &y, &d_k_abs);
            if est <= BigInt::one() {
                acc.small.push(y);
            }
            if !est.is_zero() {
                let cand = (est, y);
                if acc.best.as_ref().is_none_or(|b| better(&cand, b)) {
                    acc.best_log = Some(log_of(&cand.0));
                    acc.best = Some(cand);
                }
            }
            acc
        })
        .reduce(Partial::default, Partial::merge);

    let mut not_primitive = 0;
    let mut index_one = Vec::new();
    let mut small = partial.small;
    small.sort_unstable();
    for y in &small {
        match element_index_with(&element_of(&elements, y), &d_k) {
            Ok(i) if i.is_one() => index_one.push(*y),
            Ok(i) => {
                return Err(MonogenityError::InvariantBreach(format!(
                    "estimate below 1.5 but exact index {i} at {y:?}"
                )))
            }
            Err(MonogenityError::NotPrimitive) => not_primitive += 1,
            Err(e) => return Err(e),
        }
    }

    let best = match (index_one.first(), partial.best) {
        (Some(y), _) => Some(GeneratorCandidate {
            element: element_of(&elements, y),
            coordinates: Some(with_constant(y)),
            index: BigInt::one(),
        }),
        (None, Some((est, y))) => {
            let element = element_of(&elements, &y);
            let index = element_index_with(&element, &d_k)?;
            if !agrees(&est, &index) {
                return Err(MonogenityError::InvariantBreach(format!(
                    "estimated index {est} but exact index {index} at {y:?}"
                )));
            }
            Some(GeneratorCandidate { element, coordinates: Some(with_constant(&y)), index })
        }
        (None, None) => None,
    };

    Ok(SearchOutcome {
        m: m.clone(),
        bound,
        examined: partial.examined,
        not_primitive,
        index_one_count: index_one.len() as u64,
        best,
        exhaustive: partial.examined == total,
    })
}

fn with_constant(y: &[i64; 7]) -> [i64; 8] {
    let mut out = [0i64; 8];
    out[1..].copy_from_slice(y);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn estimates_match_exact_indices() {
        for m in [2i64, -3, 5, 28, 41] {
            let basis = integral_basis(&b(m)).unwrap();
            let d_k = index_of_f(&b(m)).unwrap().d_k.to_integer();
            let conj = basis_conjugates(&basis);
            let elements = basis.field_elements();
            for y in [[1, 0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0, 0], [2, -1, 1, 0, 1, 0, -1]] {
                let exact = match element_index_with(&element_of(&elements, &y), &d_k) {
                    Err(MonogenityError::NotPrimitive) => BigInt::zero(),
                    other => other.unwrap(),
                };
                assert!(agrees(&estimate(&conj, &y, &d_k.abs()), &exact), "m={m} y={y:?}");
            }
        }
    }

    #[test]
    fn alpha_found_for_two() {
        let out = search_generator(&b(2), 1).unwrap();
        assert!(out.found_index_one());
        assert_eq!(out.examined, 3u64.pow(7));
        assert!(out.exhaustive);
        let best = out.best.unwrap();
        assert_eq!(best.index, BigInt::one());
    }

    #[test]
    fn float_filter_keeps_the_minimum() {
        for m in [5i64, -6, 28, 41, 98] {
            let m = b(m);
            let basis = integral_basis(&m).unwrap();
            let d_k = index_of_f(&m).unwrap().d_k.to_integer().abs();
            let conj = basis_conjugates(&basis);
            let brute = (0..3u64.pow(7))
                .map(|n| decode(n, 1))
                .map(|y| (estimate(&conj, &y, &d_k), y))
                .filter(|(e, _)| !e.is_zero())
                .reduce(|a, c| if better(&c, &a) { c } else { a })
                .unwrap();
            let out = search_generator(&m, 1).unwrap();
            let best = out.best.unwrap();
            assert_eq!(best.index, brute.0, "m={m}");
            assert_eq!(best.coordinates.unwrap()[1..], brute.1, "m={m}");
        }
    }

    #[test]
    fn decode_covers_the_box() {
        assert_eq!(decode(0, 2), [-2; 7]);
        assert_eq!(decode(5u64.pow(7) - 1, 2), [2; 7]);
    }
}
