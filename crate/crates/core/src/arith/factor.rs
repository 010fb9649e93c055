//! Integer factorization and p-adic valuations.
//!
//! Trial division up to 2^20, then Brent's variant of Pollard rho on the
//! cofactor. Every reported prime is certified by Miller-Rabin with the
//! first thirteen prime bases, which is deterministic below 3.3 * 10^24 and
//! therefore for every `u64`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ArithError;

const TRIAL_LIMIT: u64 = 1 << 20;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Sign and prime-power decomposition of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    sign: i8,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// Builds a factorization from raw parts, merging repeated primes and
    /// dropping zero exponents. Primes are not re-checked here.
    pub fn from_parts(sign: i8, factors: impl IntoIterator<Item = (u64, u32)>) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let mut merged: Vec<(u64, u32)> = Vec::new();
        let mut all: Vec<(u64, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        all.sort_unstable();
        for (p, e) in all {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        FactoredInteger { sign, factors: merged }
    }

    pub fn one() -> Self {
        FactoredInteger { sign: 1, factors: Vec::new() }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of `p`, zero when `p` does not occur.
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn to_integer(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(p, e) in &self.factors {
            acc *= BigInt::from(p).pow(e);
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }

    pub fn abs(&self) -> Self {
        FactoredInteger { sign: 1, factors: self.factors.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        FactoredInteger::from_parts(
            self.sign * other.sign,
            self.factors.iter().chain(other.factors.iter()).copied(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let sign = if self.sign < 0 && k % 2 == 1 { -1 } else { 1 };
        FactoredInteger::from_parts(sign, self.factors.iter().map(|&(p, e)| (p, e * k)))
    }

    /// Exact quotient, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.factors.len());
        for &(p, e) in &other.factors {
            if self.exponent(p) < e {
                return None;
            }
        }
        for &(p, e) in &self.factors {
            let f = other.exponent(p);
            if e > f {
                out.push((p, e - f));
            }
        }
        Some(FactoredInteger { sign: self.sign * other.sign, factors: out })
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors a nonzero integer completely.
pub fn factorize(n: &BigInt) -> Result<FactoredInteger, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut factors = Vec::new();

    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }

    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(c) = stack.pop() {
            if c.is_one() {
                continue;
            }
            if is_probable_prime(&c) {
                let p = c.to_u64().ok_or_else(|| ArithError::PrimeTooLarge(c.to_string()))?;
                factors.push((p, 1));
                continue;
            }
            let split = pollard_brent(&c);
            let other = &c / &split;
            stack.push(split);
            stack.push(other);
        }
    }
    Ok(FactoredInteger::from_parts(sign, factors))
}

/// Largest `e` with `p^e | n`.
pub fn p_adic_valuation(n: &BigInt, p: u64) -> Result<u32, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if p < 2 {
        return Err(ArithError::NotPrime(p));
    }
    let bp = BigInt::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&bp);
        if !r.is_zero() {
            return Ok(v);
        }
        rest = q;
        v += 1;
    }
}

/// Deterministic primality for `u64` (Miller-Rabin, fixed bases).
pub fn is_prime_u64(n: u64) -> bool {
    is_probable_prime(&BigUint::from(n))
}

/// Miller-Rabin with the first thirteen primes as bases; deterministic for
/// `n < 3.3 * 10^24`.
fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &b in &MR_BASES {
        let bb = BigUint::from(b);
        if n == &bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Returns a nontrivial divisor of the composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!("rho iterates over all increments")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> FactoredInteger {
        factorize(&BigInt::from(n)).unwrap()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(fac(28), FactoredInteger::from_parts(1, [(2, 2), (7, 1)]));
        assert_eq!(fac(-1), FactoredInteger::from_parts(-1, []));
        assert_eq!(fac(4320), FactoredInteger::from_parts(1, [(2, 5), (3, 3), (5, 1)]));
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factorize(&BigInt::zero()), Err(ArithError::ZeroInput));
        assert_eq!(p_adic_valuation(&BigInt::zero(), 2), Err(ArithError::ZeroInput));
    }

    #[test]
    fn valuations() {
        assert_eq!(p_adic_valuation(&BigInt::from(48), 2).unwrap(), 4);
        assert_eq!(p_adic_valuation(&BigInt::from(5), 2).unwrap(), 0);
        assert_eq!(p_adic_valuation(&BigInt::from(1024 * 7), 2).unwrap(), 10);
    }

    #[test]
    fn large_semiprimes_split() {
        // two primes above the trial division limit
        let p = 1_000_003u64;
        let q = 2_147_483_647u64;
        let n = BigInt::from(p) * BigInt::from(q) * BigInt::from(q);
        let f = factorize(&n).unwrap();
        assert_eq!(f.factors(), &[(p, 1), (q, 2)]);
        assert_eq!(f.to_integer(), n);
    }

    #[test]
    fn primality_edge_cases() {
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }
}
