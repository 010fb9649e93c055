use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;

use crate::arith::{is_prime_u64, IntPoly};

use super::{phi_expand, valuation, NewtonError, PrincipalPolygon};

/// Data for a second-order polygon over a linear base `phi = x - c` with
/// slope `-h1/e1` and key polynomial `phi2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondOrderData {
    p: u64,
    phi: IntPoly,
    h1: i64,
    e1: i64,
    phi2: IntPoly,
}

impl SecondOrderData {
    pub fn new(p: u64, phi: IntPoly, h1: i64, e1: i64, phi2: IntPoly) -> Result<Self, NewtonError> {
        if !is_prime_u64(p) {
            return Err(NewtonError::NotPrime(p));
        }
        if !phi.is_monic() {
            return Err(NewtonError::NonMonicPhi);
        }
        if phi.degree() != Some(1) {
            return Err(NewtonError::BaseDegree);
        }
        if h1 <= 0 || e1 <= 0 || h1.gcd(&e1) != 1 {
            return Err(NewtonError::InvalidData(format!("slope {h1}/{e1} is not a positive reduced fraction")));
        }
        if !phi2.is_monic() || phi2.degree().unwrap_or(0) == 0 {
            return Err(NewtonError::NonMonicPhi);
        }
        Ok(SecondOrderData { p, phi, h1, e1, phi2 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn lambda(&self) -> Rational64 {
        Rational64::new(self.h1, self.e1)
    }

    pub fn phi2(&self) -> &IntPoly {
        &self.phi2
    }

    /// `omega_2(g)`: minimum of `e1 * nu_p(b_j) + j * h1` over
    /// `g(x + c) = sum b_j x^j`, where `phi = x - c`. `None` for zero.
    pub fn omega2(&self, g: &IntPoly) -> Option<i64> {
        let c = -self.phi.coeff(0);
        g.shift(&c)
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(j, b)| valuation(b, self.p).map(|v| self.e1 * v + j as i64 * self.h1))
            .min()
    }

    /// Points `(i, omega_2(a_i) + i * omega_2(phi2))` of the `phi2`-expansion.
    pub fn points(&self, f: &IntPoly) -> Result<Vec<(usize, i64)>, NewtonError> {
        let expansion = phi_expand(f, &self.phi2)?;
        let w = self.omega2(&self.phi2).expect("phi2 is nonzero");
        Ok(expansion
            .coefficients()
            .iter()
            .enumerate()
            .filter_map(|(i, a)| self.omega2(a).map(|v| (i, v + i as i64 * w)))
            .collect())
    }
}

/// Lower hull of negative slopes of the second-order points of `f`.
pub fn second_order_polygon(f: &IntPoly, data: &SecondOrderData) -> Result<PrincipalPolygon, NewtonError> {
    let phi_bar_power = {
        // f mod p must be a power of phi mod p
        let c = -data.phi.coeff(0);
        let shifted = f.shift(&c);
        let deg = f.degree().unwrap_or(0);
        let p = BigInt::from(data.p);
        shifted.coeffs()[..deg].iter().all(|b| (b % &p) == BigInt::from(0))
    };
    if !phi_bar_power {
        return Err(NewtonError::InvalidData("f is not a power of phi modulo p".into()));
    }
    let points: Vec<(usize, Rational64)> = data
        .points(f)?
        .into_iter()
        .map(|(i, v)| (i, Rational64::from_integer(v)))
        .collect();
    Ok(PrincipalPolygon::from_points(&points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> IntPoly {
        IntPoly::from_i64(&[0, 1])
    }

    #[test]
    fn twenty_mod_thirty_two() {
        let data = SecondOrderData::new(2, x(), 1, 4, IntPoly::from_i64(&[2, 0, 0, 0, 1])).unwrap();
        let f = IntPoly::pure(8, &BigInt::from(20));
        assert_eq!(data.points(&f).unwrap(), vec![(0, 16), (1, 12), (2, 8)]);
        let poly = second_order_polygon(&f, &data).unwrap();
        assert_eq!(poly.sides().len(), 1);
        assert_eq!(poly.lattice_count(), 4);
    }

    #[test]
    fn forty_eight_mod_sixty_four() {
        let data = SecondOrderData::new(2, x(), 1, 2, IntPoly::from_i64(&[2, 0, 1])).unwrap();
        let f = IntPoly::pure(8, &BigInt::from(48));
        let poly = second_order_polygon(&f, &data).unwrap();
        let verts: Vec<(usize, i64)> = poly.vertices().iter().map(|(a, b)| (*a, b.to_integer())).collect();
        assert_eq!(verts, vec![(0, 10), (4, 8)]);
        assert_eq!(poly.sides()[0].slope(), Rational64::new(-1, 2));
        assert_eq!(poly.lattice_count(), 2);
    }

    #[test]
    fn sixteen_mod_two_fifty_six() {
        let data = SecondOrderData::new(2, x(), 1, 2, IntPoly::from_i64(&[2, -2, 1])).unwrap();
        let f = IntPoly::pure(8, &BigInt::from(272));
        let pts = data.points(&f).unwrap();
        for want in [(1, 13), (2, 10), (4, 8)] {
            assert!(pts.contains(&want), "{pts:?}");
        }
        let poly = second_order_polygon(&f, &data).unwrap();
        let verts: Vec<(usize, i64)> = poly.vertices().iter().map(|(a, b)| (*a, b.to_integer())).collect();
        assert_eq!(verts, vec![(0, 16), (2, 10), (4, 8)]);
        assert_eq!(poly.sides()[0].ordinate_at(1), Rational64::from_integer(13));
    }

    #[test]
    fn rejects_quadratic_base() {
        let err = SecondOrderData::new(2, IntPoly::from_i64(&[1, 1, 1]), 1, 2, x());
        assert_eq!(err, Err(NewtonError::BaseDegree));
    }
}
