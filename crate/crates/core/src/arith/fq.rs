//! The residue field F_p[x]/(phi) and polynomials over it.
//!
//! Only what residual polynomials need: arithmetic, square-freeness and the
//! degrees of irreducible factors (distinct-degree factorization).

use num_bigint::BigUint;
use num_traits::One;

use super::modp::ModPoly;

/// Finite field `F_p[x]/(modulus)`, `modulus` monic irreducible mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    modulus: ModPoly,
}

/// Element of a [`ResidueField`], a residue of degree below the modulus.
pub type FqElem = ModPoly;

impl ResidueField {
    pub fn new(modulus: ModPoly) -> Self {
        assert!(modulus.is_irreducible(), "residue field modulus must be irreducible");
        ResidueField { modulus: modulus.monic() }
    }

    /// The prime field itself.
    pub fn prime(p: u64) -> Self {
        ResidueField { modulus: ModPoly::x(p) }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus.modulus()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree() as u32)
    }

    pub fn zero(&self) -> FqElem {
        ModPoly::zero(self.characteristic())
    }

    pub fn one(&self) -> FqElem {
        ModPoly::one(self.characteristic())
    }

    pub fn elem(&self, a: &ModPoly) -> FqElem {
        a.rem(&self.modulus)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.add(b)
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.sub(b)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.mul_mod_poly(b, &self.modulus)
    }

    pub fn scale(&self, a: &FqElem, c: u64) -> FqElem {
        a.scale(c % self.characteristic())
    }

    pub fn pow(&self, a: &FqElem, e: &BigUint) -> FqElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!a.is_zero(), "zero has no inverse");
        let e = self.order() - 2u32;
        self.pow(a, &e)
    }

    fn trim(&self, mut p: Vec<FqElem>) -> Vec<FqElem> {
        while p.last().is_some_and(ModPoly::is_zero) {
            p.pop();
        }
        p
    }

    fn poly_monic(&self, p: &[FqElem]) -> Vec<FqElem> {
        let Some(lead) = p.last() else { return Vec::new() };
        let inv = self.inv(lead);
        p.iter().map(|c| self.mul(c, &inv)).collect()
    }

    fn poly_sub(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        let n = a.len().max(b.len());
        let zero = self.zero();
        self.trim(
            (0..n)
                .map(|i| self.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
                .collect(),
        )
    }

    fn poly_mul(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        self.trim(out)
    }

    fn poly_div_rem(&self, a: &[FqElem], b: &[FqElem]) -> (Vec<FqElem>, Vec<FqElem>) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(&b[db]);
        let mut rem = a.to_vec();
        let mut quot = vec![self.zero(); a.len() - db];
        for i in (db..rem.len()).rev() {
            let c = self.mul(&rem[i], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in b.iter().enumerate() {
                rem[i - db + j] = self.sub(&rem[i - db + j], &self.mul(&c, d));
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    fn poly_gcd(&self, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
        let mut a = self.trim(a.to_vec());
        let mut b = self.trim(b.to_vec());
        while !b.is_empty() {
            let r = self.poly_div_rem(&a, &b).1;
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    fn poly_derivative(&self, a: &[FqElem]) -> Vec<FqElem> {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.scale(c, i as u64))
                .collect(),
        )
    }

    fn poly_pow_mod(&self, base: &[FqElem], e: &BigUint, modulus: &[FqElem]) -> Vec<FqElem> {
        let base = self.poly_div_rem(base, modulus).1;
        let mut acc = self.poly_div_rem(&[self.one()], modulus).1;
        for i in (0..e.bits()).rev() {
            acc = self.poly_div_rem(&self.poly_mul(&acc, &acc), modulus).1;
            if e.bit(i) {
                acc = self.poly_div_rem(&self.poly_mul(&acc, &base), modulus).1;
            }
        }
        acc
    }

    /// Whether a polynomial over this field (coefficients lowest first) is
    /// square-free. Constants are square-free; zero is not.
    pub fn is_square_free(&self, poly: &[FqElem]) -> bool {
        let poly = self.trim(poly.to_vec());
        match poly.len() {
            0 => false,
            1 => true,
            _ => {
                let g = self.poly_gcd(&poly, &self.poly_derivative(&poly));
                g.len() == 1
            }
        }
    }

    /// Degrees of the irreducible factors of a square-free polynomial,
    /// sorted ascending, one entry per factor.
    pub fn factor_degrees(&self, poly: &[FqElem]) -> Vec<usize> {
        let mut f = self.poly_monic(&self.trim(poly.to_vec()));
        assert!(self.is_square_free(&f), "factor_degrees needs a square-free input");
        let q = self.order();
        let x = vec![self.zero(), self.one()];
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.poly_pow_mod(&h, &q, &f);
            let g = self.poly_gcd(&self.poly_sub(&h, &x), &f);
            if g.len() > 1 {
                let count = (g.len() - 1) / d;
                out.extend(std::iter::repeat_n(d, count));
                f = self.poly_div_rem(&f, &g).0;
                h = self.poly_div_rem(&h, &f).1;
            }
            d += 1;
        }
        if f.len() > 1 {
            out.push(f.len() - 1);
        }
        out.sort_unstable();
        out
    }

    /// Convenience: is `a` the multiplicative identity.
    pub fn is_one(&self, a: &FqElem) -> bool {
        a.coeffs().len() == 1 && a.coeffs()[0].is_one()
    }
}
