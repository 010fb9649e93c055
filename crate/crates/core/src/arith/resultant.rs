//! Resultants and discriminants over the integers.
//!
//! The production path is the subresultant pseudo-remainder sequence; the
//! Sylvester-determinant path is kept as an independent cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::det_bareiss;
use super::poly::IntPoly;
use super::ArithError;

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap().clone();
    let mut rem = a.clone();
    let Some(da) = a.degree() else { return rem };
    if da < db {
        return rem;
    }
    let mut steps = da - db + 1;
    while let Some(dr) = rem.degree() {
        if dr < db {
            break;
        }
        let lr = rem.leading().unwrap().clone();
        let shifted = &IntPoly::monomial(lr, dr - db) * b;
        rem = &rem.scale(&lb) - &shifted;
        steps -= 1;
    }
    if steps > 0 {
        rem = rem.scale(&lb.pow(steps as u32));
    }
    rem
}

/// Resultant by the subresultant algorithm.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = BigInt::one();
    if a.degree() < b.degree() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let ca = a.content();
    let cb = b.content();
    let t = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);
    a = a.exact_div_scalar(&ca).unwrap();
    b = b.exact_div_scalar(&cb).unwrap();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            let lb = b.leading().unwrap().clone();
            // h^(1 - da) * lc(b)^da
            let value = if da == 0 {
                h.clone()
            } else {
                lb.pow(da as u32) / h.pow(da as u32 - 1)
            };
            return sign * t * value;
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &g * h.pow(delta as u32);
        a = b;
        b = r.exact_div_scalar(&divisor).expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta as u32) / h.pow(delta as u32 - 1)
        };
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant_sylvester(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det_bareiss(&rows)
}

fn disc_from_resultant(f: &IntPoly, res: BigInt) -> Result<BigInt, ArithError> {
    let n = f.degree().unwrap();
    if res.is_zero() {
        return Err(ArithError::NotSquareFree);
    }
    let lc = f.leading().unwrap();
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / lc)
}

/// Discriminant `(-1)^(n(n-1)/2) res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt, ArithError> {
    match f.degree() {
        None | Some(0) => Err(ArithError::DegreeTooSmall),
        Some(_) => disc_from_resultant(f, resultant(f, &f.derivative())),
    }
}

/// Same discriminant computed through the Sylvester determinant.
pub fn poly_discriminant_sylvester(f: &IntPoly) -> Result<BigInt, ArithError> {
    match f.degree() {
        None | Some(0) => Err(ArithError::DegreeTooSmall),
        Some(_) => disc_from_resultant(f, resultant_sylvester(f, &f.derivative())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_discriminant() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(poly_discriminant(&f).unwrap(), BigInt::from(8));
    }

    #[test]
    fn dedekind_cubic() {
        let f = IntPoly::from_i64(&[-8, -2, -1, 1]);
        assert_eq!(poly_discriminant(&f).unwrap(), BigInt::from(-2012));
        assert_eq!(poly_discriminant_sylvester(&f).unwrap(), BigInt::from(-2012));
    }

    #[test]
    fn pure_octic_discriminant_sign() {
        for m in [2i64, 5, -3, 28, -50] {
            let f = IntPoly::pure(8, &BigInt::from(m));
            let expected = -(BigInt::from(2).pow(24)) * BigInt::from(m).pow(7);
            assert_eq!(poly_discriminant(&f).unwrap(), expected, "m={m}");
        }
    }

    #[test]
    fn repeated_root_is_reported() {
        let f = IntPoly::from_i64(&[1, 2, 1]);
        assert_eq!(poly_discriminant(&f), Err(ArithError::NotSquareFree));
    }

    #[test]
    fn resultant_paths_agree_on_unequal_degrees() {
        let a = IntPoly::from_i64(&[3, -1, 0, 2, 1]);
        let b = IntPoly::from_i64(&[-7, 4, 5]);
        assert_eq!(resultant(&a, &b), resultant_sylvester(&a, &b));
        assert_eq!(resultant(&b, &a), resultant_sylvester(&b, &a));
    }
}
