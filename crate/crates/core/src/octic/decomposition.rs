use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize, FactoredInteger};

use super::OcticError;

/// Result of removing eighth powers from `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub original: BigInt,
    pub reduced: BigInt,
    /// `(p, k)`: `p^(8k)` was divided out.
    pub scalings: Vec<(u64, u32)>,
}

/// Divides out `p^8` until `nu_p(m) < 8` for all `p`.
pub fn reduce_parameter(m: &BigInt) -> Result<Reduction, OcticError> {
    if m.abs() <= BigInt::one() {
        return Err(OcticError::TooSmall(m.clone()));
    }
    let fact = factorize(m)?;
    let mut reduced = m.clone();
    let mut scalings = Vec::new();
    for &(p, e) in fact.factors() {
        let k = e / 8;
        if k > 0 {
            reduced /= BigInt::from(p).pow(8 * k);
            scalings.push((p, k));
        }
    }
    Ok(Reduction { original: m.clone(), reduced, scalings })
}

fn is_perfect_power(n: &BigInt, k: u32) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.nth_root(k);
    &r.pow(k) == n
}

/// `x^8 - m` is irreducible iff `m` is not a square and `-m/4` is not a
/// fourth power.
pub fn is_irreducible_pure_octic(m: &BigInt) -> bool {
    if m.is_zero() || is_perfect_power(m, 2) {
        return false;
    }
    let four = BigInt::from(4);
    let minus = -m;
    !((&minus % &four).is_zero() && is_perfect_power(&(minus / four), 4))
}

/// `m = a1 a2^2 ... a7^7` with the `A_k` denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    m: BigInt,
    factored: FactoredInteger,
    a: [BigInt; 7],
    big_a: [BigInt; 6],
}

/// Exponent of `a_i` in `A_k`, rows `k = 2..7`, columns `i = 1..7`.
const A_EXPONENTS: [[u32; 7]; 6] = [
    [0, 0, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 2, 2],
    [0, 1, 1, 2, 2, 3, 3],
    [0, 1, 1, 2, 3, 3, 4],
    [0, 1, 2, 3, 3, 4, 5],
    [0, 1, 2, 3, 4, 5, 6],
];

impl Decomposition {
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn factored(&self) -> &FactoredInteger {
        &self.factored
    }

    /// `a_i` for `i = 1..=7`.
    pub fn a(&self, i: usize) -> &BigInt {
        &self.a[i - 1]
    }

    pub fn a_values(&self) -> &[BigInt; 7] {
        &self.a
    }

    /// `A_k` for `k = 0..=7`; `A_0 = A_1 = 1`.
    pub fn big_a(&self, k: usize) -> BigInt {
        if k < 2 {
            BigInt::one()
        } else {
            self.big_a[k - 2].clone()
        }
    }

    pub fn big_a_values(&self) -> &[BigInt; 6] {
        &self.big_a
    }

    /// `A_2 A_3 ... A_7`.
    pub fn big_a_product(&self) -> BigInt {
        self.big_a.iter().product()
    }
}

/// Square-free decomposition of a reduced `m`; the sign goes on `a1`.
pub fn squarefree_decompose(m: &BigInt) -> Result<Decomposition, OcticError> {
    let factored = factorize(m)?;
    let mut a: [BigInt; 7] = std::array::from_fn(|_| BigInt::one());
    for &(p, e) in factored.factors() {
        if e >= 8 {
            return Err(OcticError::NotReduced(m.clone()));
        }
        a[e as usize - 1] *= p;
    }
    if factored.sign() < 0 {
        a[0] = -&a[0];
    }
    let big_a = std::array::from_fn(|r| {
        A_EXPONENTS[r]
            .iter()
            .zip(a.iter())
            .map(|(&k, ai)| ai.abs().pow(k))
            .product()
    });
    Ok(Decomposition { m: m.clone(), factored, a, big_a })
}
