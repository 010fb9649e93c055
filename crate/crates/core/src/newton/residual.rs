use std::fmt;

use num_bigint::BigInt;

use crate::arith::{FqElem, IntPoly, ModPoly, ResidueField};

use super::polygon::check_phi;
use super::{gauss_valuation, phi_expand, NewtonError, PolygonSide};

/// Residual polynomial `t_0 + t_1 y + ... + t_d y^d` of a side, with
/// coefficients in `F_phi = F_p[x]/(phi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualPoly {
    side: PolygonSide,
    field: ResidueField,
    coefficients: Vec<FqElem>,
}

impl ResidualPoly {
    pub fn side(&self) -> &PolygonSide {
        &self.side
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn coefficients(&self) -> &[FqElem] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_square_free(&self) -> bool {
        self.field.is_square_free(&self.coefficients)
    }

    /// Degrees of the irreducible factors; only meaningful when square-free.
    pub fn factor_degrees(&self) -> Vec<usize> {
        self.field.factor_degrees(&self.coefficients)
    }
}

impl fmt::Display for ResidualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if self.field.degree() == 1 {
                c.coeff(0).to_string()
            } else {
                format!("({c})")
            };
            let term = match (i, coeff.as_str()) {
                (0, _) => coeff,
                (1, "1") => "y".to_string(),
                (1, _) => format!("{coeff}y"),
                (_, "1") => format!("y^{i}"),
                _ => format!("{coeff}y^{i}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Residual polynomial of `f` attached to a side of its `phi`-polygon.
pub fn residual_polynomial(
    f: &IntPoly,
    phi: &IntPoly,
    p: u64,
    side: &PolygonSide,
) -> Result<ResidualPoly, NewtonError> {
    check_phi(f, phi, p)?;
    let expansion = phi_expand(f, phi)?;
    let field = ResidueField::new(ModPoly::from_int_poly(phi, p));
    let (s, e) = (side.start().0, side.e());
    let bp = BigInt::from(p);
    let coefficients = (0..=side.degree())
        .map(|i| {
            let x = s + i * e;
            let y = side.ordinate_at(x).to_integer();
            let a = expansion.coefficients().get(x).cloned().unwrap_or_else(IntPoly::zero);
            if gauss_valuation(&a, p) == Some(y) {
                let reduced = a.exact_div_scalar(&bp.pow(y as u32)).expect("valuation divides");
                field.elem(&ModPoly::from_int_poly(&reduced, p))
            } else {
                field.zero()
            }
        })
        .collect();
    Ok(ResidualPoly { side: side.clone(), field, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::principal_polygon;

    fn residual(m: i64, phi: &[i64], p: u64) -> ResidualPoly {
        let f = IntPoly::pure(8, &BigInt::from(m));
        let phi = IntPoly::from_i64(phi);
        let poly = principal_polygon(&f, &phi, p).unwrap();
        residual_polynomial(&f, &phi, p, &poly.sides()[0]).unwrap()
    }

    #[test]
    fn cyclotomic_residual_for_five() {
        let r = residual(5, &[-1, 1], 2);
        assert_eq!(r.to_string(), "y^2 + y + 1");
        assert!(r.is_square_free());
        assert_eq!(r.factor_degrees(), vec![2]);
    }

    #[test]
    fn square_residual_for_four_times_odd() {
        let r = residual(12, &[0, 1], 2);
        assert_eq!(r.to_string(), "y^2 + 1");
        assert!(!r.is_square_free());
    }

    #[test]
    fn odd_valuation_gives_linear_residual() {
        let r = residual(3 * 7, &[0, 1], 3);
        assert_eq!(r.degree(), 1);
        assert!(r.is_square_free());
    }
}
