//! Hensel lifting of coprime factorizations and factorization of monic
//! integer polynomials (Zassenhaus recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::is_prime_u64;
use super::modp::ModPoly;
use super::poly::IntPoly;

/// Extended Euclid over F_p: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn ext_gcd(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
    let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = super::modp::inv_mod(r0.leading(), p);
    (r0.scale(inv), s0.scale(inv), t0.scale(inv))
}

fn symmetric_mod(f: &IntPoly, modulus: &BigInt) -> IntPoly {
    let half = modulus / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(modulus);
                if r > half {
                    r - modulus
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_poly(f: &IntPoly, modulus: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(modulus)).collect())
}

/// Lifts `f = g * h (mod p)` with `g, h` monic and coprime to a
/// factorization modulo `p^k`.
fn lift_pair(f: &IntPoly, g: &ModPoly, h: &ModPoly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (one, _, t) = ext_gcd(g, h);
    assert!(one.is_one(), "Hensel lifting needs coprime factors");
    let mut big_g = g.to_int_poly();
    let mut big_h = h.to_int_poly();
    let bp = BigInt::from(p);
    let mut pj = bp.clone();
    for _ in 1..k {
        let diff = &(f - &(&big_g * &big_h)).exact_div_scalar(&pj).expect("lift invariant");
        let e = ModPoly::from_int_poly(diff, p);
        let tau = t.mul(&e).rem(g);
        let sigma = e.sub(&tau.mul(h)).div_rem(g).0;
        big_g = &big_g + &tau.to_int_poly().scale(&pj);
        big_h = &big_h + &sigma.to_int_poly().scale(&pj);
        pj *= &bp;
    }
    (mod_poly(&big_g, &pj), mod_poly(&big_h, &pj))
}

/// Lifts a factorization of the monic `f` modulo `p` into pairwise coprime
/// monic factors to one modulo `p^k`. Output factors are monic with
/// coefficients in `[0, p^k)`, in the input order.
pub fn hensel_lift(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    assert!(f.is_monic(), "Hensel lifting expects a monic polynomial");
    assert!(k >= 1);
    match factors.len() {
        0 => Vec::new(),
        1 => vec![mod_poly(f, &BigInt::from(p).pow(k))],
        _ => {
            let g = factors[0].monic();
            let rest = factors[1..]
                .iter()
                .fold(ModPoly::one(p), |acc, h| acc.mul(&h.monic()));
            let (lg, lh) = lift_pair(f, &g, &rest, p, k);
            let mut out = vec![lg];
            out.extend(hensel_lift(&lh, &factors[1..], p, k));
            out
        }
    }
}

/// Factors a monic integer polynomial into monic irreducibles over Z.
/// Intended for the small degrees used in this crate.
pub fn factor_monic_over_z(f: &IntPoly) -> Vec<IntPoly> {
    assert!(f.is_monic(), "expects a monic polynomial");
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.clone()];
    }
    // split off x^k first so the constant term is nonzero
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        let mut out = vec![IntPoly::from_i64(&[0, 1]); zeros];
        let rest = IntPoly::new(f.coeffs()[zeros..].to_vec());
        if rest.degree().unwrap_or(0) > 0 {
            out.extend(factor_monic_over_z(&rest));
        }
        return out;
    }
    // square-free part handling: repeated factors come from gcd(f, f')
    let good_prime = (2u64..1000).filter(|&q| is_prime_u64(q)).find(|&q| {
        let fb = ModPoly::from_int_poly(f, q);
        fb.gcd(&fb.derivative()).is_one()
    });
    let Some(p) = good_prime else {
        return factor_with_repeats(f);
    };
    let modp_factors: Vec<ModPoly> = ModPoly::from_int_poly(f, p)
        .factor()
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if modp_factors.len() == 1 {
        return vec![f.clone()];
    }
    // coefficient bound for any factor: 2^n * ||f||_2 (Mignotte)
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm_sq.sqrt() + 1u32);
    let mut k = 1;
    let mut pk = BigInt::from(p);
    while pk <= &bound * 2u32 {
        pk *= p;
        k += 1;
    }
    let mut lifted = hensel_lift(f, &modp_factors, p, k);
    let mut remaining = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), size) {
            let candidate = subset
                .iter()
                .fold(IntPoly::one(), |acc, &i| &acc * &lifted[i]);
            let candidate = symmetric_mod(&candidate, &pk);
            let (q, r) = remaining.div_rem_monic(&candidate);
            if r.is_zero() {
                out.push(candidate);
                remaining = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(remaining);
    out
}

fn factor_with_repeats(f: &IntPoly) -> Vec<IntPoly> {
    // f has a repeated factor over Q: g = gcd(f, f') is computed by the
    // primitive Euclidean algorithm, then both parts are factored.
    let g = primitive_gcd(f, &f.derivative());
    if g.degree().unwrap_or(0) == 0 {
        // square-free but no small good prime: treat as irreducible candidate
        return vec![f.clone()];
    }
    let (q, r) = f.div_rem_monic(&g);
    debug_assert!(r.is_zero());
    let mut out = factor_monic_over_z(&g);
    out.extend(factor_monic_over_z(&q));
    out
}

/// Monic gcd of two integer polynomials whose gcd is monic (true when `a`
/// is monic).
fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    while !y.is_zero() {
        let dy = y.degree().unwrap();
        let ly = y.leading().unwrap().clone();
        let mut r = x.clone();
        while r.degree().is_some_and(|d| d >= dy) {
            let dr = r.degree().unwrap();
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&ly) - &(&IntPoly::monomial(lr, dr - dy) * &y);
        }
        x = y;
        y = primitive(&r);
    }
    let lead = x.leading().cloned().unwrap_or_else(BigInt::one);
    if lead.is_negative() {
        x = -&x;
    }
    if x.leading().is_some_and(|l| l.is_one()) {
        x
    } else {
        IntPoly::one()
    }
}

fn primitive(f: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return f.clone();
    }
    f.exact_div_scalar(&f.content()).unwrap()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducibility over Q of a monic integer polynomial.
pub fn is_irreducible_over_q(f: &IntPoly) -> bool {
    f.degree().is_some_and(|d| d >= 1) && factor_monic_over_z(f).len() == 1
}
