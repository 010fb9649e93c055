//! Exact determinants (fraction-free Bareiss elimination) and
//! characteristic polynomials of field elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPoly, RatPoly};
use crate::field::FieldElement;

/// Determinant of a square integer matrix by Bareiss elimination with row
/// pivoting. Every intermediate division is exact.
pub fn det_bareiss(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// `n mod 2^64`.
pub fn to_u64_wrapping(n: &BigInt) -> u64 {
    let (sign, digits) = n.to_u64_digits();
    let low = digits.first().copied().unwrap_or(0);
    if sign == num_bigint::Sign::Minus {
        low.wrapping_neg()
    } else {
        low
    }
}

/// `det(xI - M)` modulo `2^64`, coefficients highest degree first.
pub fn char_poly_mod_2_64(matrix: &[Vec<u64>]) -> Vec<u64> {
    let n = matrix.len();
    let mut v = vec![1u64];
    for r in 0..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(1u64);
        t.push(matrix[r][r].wrapping_neg());
        let mut c: Vec<u64> = (0..r).map(|i| matrix[i][r]).collect();
        for _ in 0..r {
            let rc = (0..r).fold(0u64, |acc, j| acc.wrapping_add(matrix[r][j].wrapping_mul(c[j])));
            t.push(rc.wrapping_neg());
            c = (0..r)
                .map(|i| (0..r).fold(0u64, |acc, j| acc.wrapping_add(matrix[i][j].wrapping_mul(c[j]))))
                .collect();
        }
        v = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < t.len())
                    .fold(0u64, |acc, j| acc.wrapping_add(t[i - j].wrapping_mul(v[j])))
            })
            .collect();
    }
    v
}

/// Characteristic polynomial `det(xI - M)` of an integer matrix by
/// Berkowitz's division-free recurrence over the leading principal minors.
pub fn char_poly_int_matrix(matrix: &[Vec<BigInt>]) -> IntPoly {
    let n = matrix.len();
    // coefficients, highest degree first
    let mut v = vec![BigInt::one()];
    for r in 0..n {
        // column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-&matrix[r][r]);
        let mut c: Vec<BigInt> = (0..r).map(|i| matrix[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &matrix[r][j] * &c[j]).sum();
            t.push(-rc);
            c = (0..r).map(|i| (0..r).map(|j| &matrix[i][j] * &c[j]).sum()).collect();
        }
        v = (0..r + 2)
            .map(|i| (0..=i.min(r)).filter(|&j| i - j < t.len()).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
    }
    v.reverse();
    IntPoly::new(v)
}

/// basis of `Q(alpha)`, `alpha^8 = m`. Monic of degree 8.
pub fn char_poly(theta: &FieldElement) -> RatPoly {
    let (numer, denom) = theta.integral_numerator();
    let matrix = numer.multiplication_matrix_int();
    let p = char_poly_int_matrix(&matrix);
    // det(xI - N/D) = D^-n * P(D x)
    let n = p.degree().unwrap_or(0);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| BigRational::new(c * denom.pow(i as u32), denom.pow(n as u32)))
        .collect();
    RatPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = m(&[&[0, 2, 1], &[3, -1, 4], &[5, 2, 0]]);
        // 0*(0-8) - 2*(0-20) + 1*(6+5) = 51
        assert_eq!(det_bareiss(&a), BigInt::from(51));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(det_bareiss(&singular).is_zero());
    }

    #[test]
    fn berkowitz_agrees_with_shifted_determinants() {
        let a = m(&[&[2, -1, 0, 7], &[3, 5, -2, 1], &[0, 4, -3, 2], &[1, 1, 1, -6]]);
        let p = char_poly_int_matrix(&a);
        for k in -3i64..=3 {
            let shifted: Vec<Vec<BigInt>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { BigInt::from(k) - &a[i][j] } else { -&a[i][j] }).collect())
                .collect();
            assert_eq!(p.eval(&BigInt::from(k)), det_bareiss(&shifted), "k={k}");
        }
    }

    #[test]
    fn wrapping_char_poly_matches_exact() {
        let a = m(&[&[2, -1, 0, 7], &[3, 5, -2, 1], &[0, 4, -3, 2], &[1, 1, 1, -6]]);
        let exact = char_poly_int_matrix(&a);
        let wrapped: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(to_u64_wrapping).collect()).collect();
        let got = char_poly_mod_2_64(&wrapped);
        let want: Vec<u64> = exact.coeffs().iter().rev().map(to_u64_wrapping).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x^3 - 2x + 5
        let c = m(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(char_poly_int_matrix(&c), IntPoly::from_i64(&[5, -2, 0, 1]));
    }
}
