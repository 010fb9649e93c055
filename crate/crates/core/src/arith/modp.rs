//! Polynomials over the prime field F_p and their factorization
//! (square-free decomposition, distinct-degree, equal-degree splitting).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::IntPoly;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

/// Reduces an integer to the residue in `[0, p)`.
pub fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Polynomial over F_p, coefficients in `[0, p)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    /// The variable `x`.
    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        ModPoly::new(p, f.coeffs().iter().map(|c| reduce(c, p)).collect())
    }

    /// Lift with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        ModPoly::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        ModPoly::new(p, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ModPoly::one(self.p);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        ModPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, (i as u64) % p, p))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.degree().unwrap();
        if self.coeffs.len() <= dd {
            return (ModPoly::zero(p), self.clone());
        }
        let inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = mul_mod(c, d, p);
                rem[i - dd + j] = (rem[i - dd + j] + p - t) % p;
            }
        }
        rem.truncate(dd);
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod_poly(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod_poly(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod_poly(&base, modulus);
            }
            base = base.mul_mod_poly(&base, modulus);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = ModPoly::x(self.p);
        let mut h = x.clone();
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.clone());
        for _ in 0..n {
            h = h.pow_mod_poly(self.p, &f);
            frob.push(h.clone());
        }
        if frob[n] != x.rem(&f) {
            return false;
        }
        for q in prime_divisors(n) {
            let g = frob[n / q].sub(&x).gcd(&f);
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Factorization into monic irreducibles with multiplicities, sorted by
    /// (degree, coefficients). The leading coefficient is dropped.
    pub fn factor(&self) -> Vec<(ModPoly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out = Vec::new();
        for (sf, mult) in self.monic().square_free() {
            for (g, d) in sf.distinct_degree() {
                for irr in g.equal_degree(d) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1))
        });
        out
    }

    /// Square-free decomposition of a monic polynomial.
    pub fn square_free(&self) -> Vec<(ModPoly, u32)> {
        let p = self.p;
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut c = self.gcd(&self.derivative());
        let mut w = self.div_rem(&c).0;
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.degree().unwrap_or(0) > 0 {
                out.push((z.monic(), i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if c.degree().unwrap_or(0) > 0 {
            // c is a p-th power
            let root_coeffs: Vec<u64> = c.coeffs.iter().step_by(p as usize).copied().collect();
            let root = ModPoly::new(p, root_coeffs);
            for (g, m) in root.square_free() {
                out.push((g, m * p as u32));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// pairs (product of all irreducible factors of degree d, d).
    pub fn distinct_degree(&self) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = ModPoly::x(self.p);
        let mut h = x.clone();
        let mut d = 1;
        while f.degree().unwrap_or(0) >= 2 * d {
            h = h.pow_mod_poly(self.p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(n) = f.degree() {
            if n > 0 {
                out.push((f, n));
            }
        }
        out
    }

    /// Splits a product of distinct monic irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize) -> Vec<ModPoly> {
        let n = self.degree().unwrap_or(0);
        if n == d {
            return vec![self.monic()];
        }
        let p = self.p;
        let mut seed: u64 = 0x9e37_79b9_7f4a_7c15 ^ (n as u64) ^ p.rotate_left(17);
        loop {
            let a = ModPoly::new(
                p,
                (0..n)
                    .map(|_| {
                        seed ^= seed << 13;
                        seed ^= seed >> 7;
                        seed ^= seed << 17;
                        seed % p
                    })
                    .collect(),
            );
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let candidate = if p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul_mod_poly(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
                a.pow_mod_poly_big(&e, self).sub(&ModPoly::one(p))
            };
            let g = candidate.gcd(self);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let mut parts = g.equal_degree(d);
                parts.extend(self.div_rem(&g).0.equal_degree(d));
                return parts;
            }
        }
    }

    fn pow_mod_poly_big(&self, e: &num_bigint::BigUint, modulus: &Self) -> Self {
        let mut acc = ModPoly::one(self.p).rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod_poly(&acc, modulus);
            if e.bit(i) {
                acc = acc.mul_mod_poly(self, modulus);
            }
        }
        acc
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        super::poly::write_poly(f, &ints, "x")?;
        write!(f, " (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(p: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(p, c.to_vec())
    }

    fn product(p: u64, fs: &[(ModPoly, u32)]) -> ModPoly {
        fs.iter().fold(ModPoly::one(p), |acc, (g, e)| acc.mul(&g.pow(*e)))
    }

    #[test]
    fn pure_octic_mod_two() {
        // x^8 - 5 = (x + 1)^8 over F_2
        let f = ModPoly::from_int_poly(&IntPoly::pure(8, &BigInt::from(5)), 2);
        assert_eq!(f.factor(), vec![(mp(2, &[1, 1]), 8)]);
    }

    #[test]
    fn factorization_reconstructs() {
        for p in [2u64, 3, 5, 7, 13] {
            for seed in 0..40u64 {
                let coeffs: Vec<u64> = (0..7).map(|i| (seed * 31 + i * 17 + seed * i * i) % p).collect();
                let mut f = mp(p, &coeffs);
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                f = f.monic();
                let fs = f.factor();
                assert_eq!(product(p, &fs), f, "p={p} f={f}");
                for (g, _) in &fs {
                    assert!(g.is_irreducible(), "{g} not irreducible");
                }
            }
        }
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(mp(2, &[1, 1, 1]).is_irreducible());
        assert!(!mp(2, &[1, 0, 1]).is_irreducible());
        assert!(mp(3, &[1, 0, 1]).is_irreducible());
        assert!(!mp(5, &[1, 0, 1]).is_irreducible());
    }
}
