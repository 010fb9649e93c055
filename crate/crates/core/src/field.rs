//! Elements of `Q(alpha)`, `alpha^8 = m`, in power-basis coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::IntPoly;

pub const DEGREE: usize = 8;

/// `sum coords[k] * alpha^k` with `alpha^8 = m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: [BigRational; DEGREE],
    m: BigInt,
}

impl FieldElement {
    pub fn new(coords: [BigRational; DEGREE], m: BigInt) -> Self {
        FieldElement { coords, m }
    }

    pub fn zero(m: &BigInt) -> Self {
        FieldElement::new(std::array::from_fn(|_| BigRational::zero()), m.clone())
    }

    pub fn from_integer(c: impl Into<BigInt>, m: &BigInt) -> Self {
        let mut e = FieldElement::zero(m);
        e.coords[0] = BigRational::from_integer(c.into());
        e
    }

    /// `alpha^k` for `k < 8`.
    pub fn alpha_pow(k: usize, m: &BigInt) -> Self {
        assert!(k < DEGREE);
        let mut e = FieldElement::zero(m);
        e.coords[k] = BigRational::one();
        e
    }

    pub fn alpha(m: &BigInt) -> Self {
        FieldElement::alpha_pow(1, m)
    }

    /// `numerator(alpha) / denominator`, the numerator reduced by `alpha^8 = m`.
    pub fn from_poly(numerator: &IntPoly, denominator: &BigInt, m: &BigInt) -> Self {
        let mut coords: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
        // alpha^(8q + r) = m^q alpha^r
        for (i, c) in numerator.coeffs().iter().enumerate() {
            let q = (i / DEGREE) as u32;
            coords[i % DEGREE] += BigRational::new(c * m.pow(q), denominator.clone());
        }
        FieldElement::new(coords, m.clone())
    }

    pub fn coords(&self) -> &[BigRational; DEGREE] {
        &self.coords
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        FieldElement::new(std::array::from_fn(|k| &self.coords[k] * c), self.m.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = FieldElement::from_integer(1, &self.m);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Least common denominator `D` and the integral element `D * self`.
    pub fn integral_numerator(&self) -> (FieldElement, BigInt) {
        let d = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = self.scale(&BigRational::from_integer(d.clone()));
        (scaled, d)
    }

    /// Matrix of multiplication by `self` on `(1, alpha, ..., alpha^7)`:
    /// column `j` holds the coordinates of `self * alpha^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let mut cols = Vec::with_capacity(DEGREE);
        for j in 0..DEGREE {
            cols.push((self * &FieldElement::alpha_pow(j, &self.m)).coords);
        }
        (0..DEGREE)
            .map(|i| (0..DEGREE).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Integer multiplication matrix; panics unless all coordinates are
    /// integers.
    pub fn multiplication_matrix_int(&self) -> Vec<Vec<BigInt>> {
        self.multiplication_matrix()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        assert!(c.is_integer(), "multiplication matrix is not integral");
                        c.to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Trace to `Q`: `Tr(alpha^k) = 0` for `0 < k < 8`, so only the
    /// constant coordinate contributes.
    pub fn trace(&self) -> BigRational {
        &self.coords[0] * BigRational::from_integer(BigInt::from(DEGREE))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.m, rhs.m);
        FieldElement::new(std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]), self.m.clone())
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.m, rhs.m);
        FieldElement::new(std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]), self.m.clone())
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(std::array::from_fn(|k| -&self.coords[k]), self.m.clone())
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.m, rhs.m);
        let m = BigRational::from_integer(self.m.clone());
        let mut out: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                if i + j < DEGREE {
                    out[i + j] += prod;
                } else {
                    out[i + j - DEGREE] += prod * &m;
                }
            }
        }
        FieldElement::new(out, self.m.clone())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (scaled, d) = self.integral_numerator();
        let coeffs: Vec<BigInt> = scaled.coords.iter().map(|c| c.to_integer()).collect();
        let num = IntPoly::new(coeffs).to_string().replace('x', "a");
        if d.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_to_the_eighth_is_m() {
        let m = BigInt::from(-7);
        let a = FieldElement::alpha(&m);
        assert_eq!(a.pow(8), FieldElement::from_integer(-7, &m));
        assert_eq!(a.pow(9), FieldElement::alpha(&m).scale(&BigRational::from_integer(m.clone())));
    }

    #[test]
    fn from_poly_reduces_high_powers() {
        let m = BigInt::from(5);
        // (alpha^9 + 2) / 3 = (5 alpha + 2) / 3
        let e = FieldElement::from_poly(&IntPoly::from_i64(&[2, 0, 0, 0, 0, 0, 0, 0, 0, 1]), &BigInt::from(3), &m);
        assert_eq!(e.coords()[0], BigRational::new(2.into(), 3.into()));
        assert_eq!(e.coords()[1], BigRational::new(5.into(), 3.into()));
    }

    #[test]
    fn trace_matches_matrix_trace() {
        let m = BigInt::from(-12);
        let e = FieldElement::from_poly(&IntPoly::from_i64(&[3, -1, 4, 1, -5, 9, 2, -6]), &BigInt::from(7), &m);
        let matrix = e.multiplication_matrix();
        let diag: BigRational = (0..DEGREE).map(|i| matrix[i][i].clone()).sum();
        assert_eq!(e.trace(), diag);
        assert_eq!((&e * &e).trace(), {
            let sq = (&e * &e).multiplication_matrix();
            (0..DEGREE).map(|i| sq[i][i].clone()).sum::<BigRational>()
        });
    }

    #[test]
    fn trace_of_power_basis() {
        let m = BigInt::from(3);
        assert_eq!(FieldElement::from_integer(1, &m).trace(), BigRational::from_integer(8.into()));
        for k in 1..8 {
            assert!(FieldElement::alpha_pow(k, &m).trace().is_zero());
        }
    }
}
