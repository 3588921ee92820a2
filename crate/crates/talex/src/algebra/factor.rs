//! Factorization over `F_q`: squarefree decomposition, distinct-degree
//! splitting, and randomized equal-degree (Cantor–Zassenhaus) splitting with a
//! fixed default seed.

use super::poly_fq::PolyFq;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed for equal-degree splitting, fixed for reproducible output.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_0001;

/// Factor a nonzero polynomial into monic irreducibles with multiplicities.
/// The product of the factors reproduces the input up to a nonzero scalar.
pub fn factor_over_fq(f: &PolyFq) -> Result<Vec<(PolyFq, u32)>> {
    factor_over_fq_seeded(f, DEFAULT_FACTOR_SEED)
}

pub fn factor_over_fq_seeded(f: &PolyFq, seed: u64) -> Result<Vec<(PolyFq, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factor_over_fq"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(PolyFq, u32)> = vec![];
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng)? {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs()))
    });
    Ok(out)
}

/// `x^p - 1` over `F_q` as `(x - 1, [f_1, ..., f_l])`: all `f_i` irreducible of
/// equal degree `n` = the multiplicative order of `q` mod `p`, `l = (p-1)/n`.
pub fn cyclotomic_factors(p: u64, q: u64) -> Result<(PolyFq, Vec<PolyFq>)> {
    if p == q {
        return Err(Error::EqualPrimes(p, q));
    }
    let f = PolyFq::x_pow_minus_one(p, q);
    let factors = factor_over_fq(&f)?;
    let x_minus_one = PolyFq::new(vec![-1, 1], q);
    let mut rest = vec![];
    for (g, m) in factors {
        debug_assert_eq!(m, 1);
        if g != x_minus_one {
            rest.push(g);
        }
    }
    let n = multiplicative_order(q, p);
    debug_assert!(rest.iter().all(|g| g.degree() as u64 == n));
    debug_assert_eq!(rest.len() as u64, (p - 1) / n);
    Ok((x_minus_one, rest))
}

/// Multiplicative order of `q` modulo the prime `p`.
pub fn multiplicative_order(q: u64, p: u64) -> u64 {
    let mut n = 1;
    let mut acc = q % p;
    while acc != 1 {
        acc = super::fq::mul_mod(acc, q, p);
        n += 1;
    }
    n
}

/// Yun-style squarefree decomposition in characteristic q, handling perfect
/// q-th powers. Returns squarefree monic parts with their multiplicities.
fn squarefree_decomposition(f: &PolyFq) -> Vec<(PolyFq, u32)> {
    let q = f.modulus();
    let mut out = vec![];
    if f.degree() == 0 {
        return out;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^q); take q-th root and recurse
        let root = qth_root(f);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * q as u32));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.div_rem(&c).unwrap().0;
    let mut i = 1u32;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).unwrap().0;
        if fac.degree() > 0 {
            out.push((fac.monic(), i));
        }
        c = c.div_rem(&y).unwrap().0;
        w = y;
        i += 1;
    }
    if c.degree() > 0 {
        // remaining part is a perfect q-th power
        let root = qth_root(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * q as u32));
        }
    }
    out
}

fn qth_root(f: &PolyFq) -> PolyFq {
    let q = f.modulus() as usize;
    let mut coeffs = vec![];
    for (i, &c) in f.coeffs().iter().enumerate() {
        if i % q == 0 {
            coeffs.push(c);
        } else {
            debug_assert_eq!(c, 0);
        }
    }
    PolyFq::from_raw(coeffs, f.modulus())
}

/// Distinct-degree: split a squarefree monic into products of irreducibles of
/// one common degree each. Returns (product, degree) pairs.
fn distinct_degree(f: &PolyFq) -> Vec<(PolyFq, usize)> {
    let q = f.modulus();
    let mut out = vec![];
    let mut f = f.clone();
    let mut d = 0usize;
    let mut xq = PolyFq::x(q).rem(&f);
    while f.degree() >= 1 {
        d += 1;
        if f.degree() < 2 * d {
            // what's left is irreducible
            out.push((f.clone(), f.degree()));
            break;
        }
        xq = xq.pow_mod(q, &f);
        let g = xq.sub(&PolyFq::x(q).rem(&f)).gcd(&f);
        if g.degree() > 0 {
            out.push((g.clone(), d));
            f = f.div_rem(&g).unwrap().0;
            xq = xq.rem(&f);
        }
    }
    out
}

/// Equal-degree splitting of a monic squarefree product of degree-d
/// irreducibles. Odd characteristic only.
fn equal_degree(f: &PolyFq, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<PolyFq>> {
    let q = f.modulus();
    if f.degree() == d {
        return Ok(vec![f.monic()]);
    }
    if q == 2 {
        return Err(Error::Precondition(
            "equal-degree splitting in characteristic 2 is not supported".into(),
        ));
    }
    // exponent (q^d - 1)/2 as u128 may overflow for large q,d; use pow chain
    let e = (pow_u128(q as u128, d as u32) - 1) / 2;
    loop {
        let a = random_poly(f.degree(), q, rng);
        if a.is_zero() || a.degree() == 0 {
            continue;
        }
        let g0 = a.gcd(f);
        if g0.degree() > 0 && g0.degree() < f.degree() {
            let rest = f.div_rem(&g0).unwrap().0;
            let mut out = equal_degree(&g0, d, rng)?;
            out.extend(equal_degree(&rest, d, rng)?);
            return Ok(out);
        }
        let b = pow_mod_u128(&a, e, f);
        let split = b.sub(&PolyFq::one(q)).gcd(f);
        if split.degree() > 0 && split.degree() < f.degree() {
            let rest = f.div_rem(&split).unwrap().0;
            let mut out = equal_degree(&split, d, rng)?;
            out.extend(equal_degree(&rest, d, rng)?);
            return Ok(out);
        }
    }
}

fn pow_u128(b: u128, e: u32) -> u128 {
    let mut acc = 1u128;
    for _ in 0..e {
        acc = acc.checked_mul(b).expect("q^d overflow");
    }
    acc
}

fn pow_mod_u128(a: &PolyFq, mut e: u128, m: &PolyFq) -> PolyFq {
    let mut base = a.rem(m);
    let mut acc = PolyFq::one(a.modulus());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).rem(m);
        }
        base = base.mul(&base).rem(m);
        e >>= 1;
    }
    acc
}

fn random_poly(deg_below: usize, q: u64, rng: &mut ChaCha8Rng) -> PolyFq {
    let coeffs: Vec<u64> = (0..deg_below).map(|_| rng.gen_range(0..q)).collect();
    PolyFq::from_raw(coeffs, q)
}

/// Irreducibility test: f is irreducible of degree n iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.
pub fn is_irreducible(f: &PolyFq) -> bool {
    if f.is_zero() || f.degree() == 0 {
        return false;
    }
    let n = f.degree();
    if n == 1 {
        return true;
    }
    let q = f.modulus();
    let xqn = PolyFq::x_q_pow_mod(n, f);
    if xqn != PolyFq::x(q).rem(f) {
        return false;
    }
    for r in prime_divisors(n as u64) {
        let d = n / r as usize;
        let xqd = PolyFq::x_q_pow_mod(d, f);
        let g = xqd.sub(&PolyFq::x(q).rem(f)).gcd(f);
        if g.degree() > 0 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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
