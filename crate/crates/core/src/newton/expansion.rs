use crate::arith::IntPoly;

use super::NewtonError;

/// `f = sum a_i(x) phi(x)^i` with `deg a_i < deg phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiExpansion {
    phi: IntPoly,
    coefficients: Vec<IntPoly>,
}

impl PhiExpansion {
    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn coefficients(&self) -> &[IntPoly] {
        &self.coefficients
    }

    /// The polynomial `sum a_i phi^i`.
    pub fn reconstruct(&self) -> IntPoly {
        self.coefficients
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| &(&acc * &self.phi) + a)
    }
}

/// Expands `f` in powers of the monic `phi` by repeated division.
pub fn phi_expand(f: &IntPoly, phi: &IntPoly) -> Result<PhiExpansion, NewtonError> {
    if !phi.is_monic() || phi.degree().unwrap_or(0) == 0 {
        return Err(NewtonError::NonMonicPhi);
    }
    let mut coefficients = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem_monic(phi);
        coefficients.push(r);
        rest = q;
    }
    Ok(PhiExpansion { phi: phi.clone(), coefficients })
}
