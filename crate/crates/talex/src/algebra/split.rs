//! Split primes `r ≡ 1 (mod q)` and the reduction `Z[ζ_q] → Z_r` sending
//! `ζ_q` to an element `b` of multiplicative order `q`.

use super::cyclotomic::CycInt;
use super::fq::{is_prime, pow_mod};
use super::laurent::LaurentCyc;
use super::poly_fq::PolyFq;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// A prime `r ≡ 1 (mod q)` together with the smallest `b ≠ 1` with `b^q = 1`
/// in `Z_r`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SplitPrime {
    pub r: u64,
    pub q: u64,
    pub b: u64,
}

/// Primes `r ≡ 1 (mod q)` in ascending order starting from `min_r`, each with
/// its smallest valid `b`.
pub fn find_split_primes(q: u64, max_count: usize, min_r: u64) -> Vec<SplitPrime> {
    let mut out = vec![];
    let mut r = min_r.max(2);
    // align to 1 mod q
    while r % q != 1 {
        r += 1;
    }
    while out.len() < max_count {
        if is_prime(r) {
            if let Some(b) = smallest_order_q(r, q) {
                out.push(SplitPrime { r, q, b });
            }
        }
        r += q;
    }
    out
}

fn smallest_order_q(r: u64, q: u64) -> Option<u64> {
    // b = g^((r-1)/q) has order q for a generator g; scanning small bases and
    // taking the q-th power residue is cheapest here.
    let e = (r - 1) / q;
    for g in 2..r {
        let b = pow_mod(g, e, r);
        if b != 1 {
            // b has order exactly q (q prime); the smallest valid choice is
            // the smallest nontrivial element of the cyclic group <b>
            let mut cur = b;
            let mut small = b;
            for _ in 1..q {
                cur = super::fq::mul_mod(cur, b, r);
                if cur != 1 && cur < small {
                    small = cur;
                }
            }
            return Some(small);
        }
    }
    None
}

/// The ring homomorphism value `φ(a) ∈ Z_r`, `ζ ↦ b`.
pub fn reduce_cyc_mod(a: &CycInt, s: &SplitPrime) -> Result<u64> {
    if a.conductor() != s.q {
        return Err(Error::ModulusMismatch(a.conductor(), s.q));
    }
    let r = BigInt::from(s.r);
    let mut acc = BigInt::from(0);
    let mut bp = BigInt::from(1);
    for c in a.coeffs() {
        acc += c.mod_floor(&r) * &bp;
        bp = (&bp * s.b).mod_floor(&r);
    }
    Ok(acc.mod_floor(&r).to_u64().expect("residue fits"))
}

/// Image of a Laurent polynomial in `Z_r[t]` as a dense `PolyFq`, after
/// shifting the lowest exponent to zero. The image of `a t^k d(t)` differs
/// from the image of `d(t)` by a unit, which factor-degree tests ignore.
pub fn reduce_laurent_mod(d: &LaurentCyc, s: &SplitPrime) -> Result<PolyFq> {
    if d.conductor() != s.q {
        return Err(Error::ModulusMismatch(d.conductor(), s.q));
    }
    let mut coeffs = Vec::with_capacity(d.span() + 1);
    for c in d.coeffs() {
        coeffs.push(reduce_cyc_mod(c, s)?);
    }
    Ok(PolyFq::from_raw(coeffs, s.r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn paper_split_primes() {
        // q=5 includes (41, 10): zeta_5 -> 10
        let primes = find_split_primes(5, 8, 2);
        assert!(primes.contains(&SplitPrime { r: 41, q: 5, b: 10 }));
        // q=5 includes (31, 2)
        assert!(primes.contains(&SplitPrime { r: 31, q: 5, b: 2 }));
        // q=7 includes (43, 4)
        let primes7 = find_split_primes(7, 8, 2);
        assert!(primes7.contains(&SplitPrime { r: 43, q: 7, b: 4 }));
        for s in primes.iter().chain(&primes7) {
            assert_eq!(s.r % s.q, 1);
            assert_ne!(s.b, 1);
            assert_eq!(pow_mod(s.b, s.q, s.r), 1);
        }
    }

    #[test]
    fn reduction_value() {
        // (zeta^3 + zeta^2 + 5) under (41, 10): 1000 + 100 + 5 = 1105 = 39 mod 41
        let a = CycInt::zeta_pow(3, 5)
            .add(&CycInt::zeta_pow(2, 5))
            .unwrap()
            .add(&CycInt::from_int(5, 5))
            .unwrap();
        let s = SplitPrime { r: 41, q: 5, b: 10 };
        assert_eq!(reduce_cyc_mod(&a, &s).unwrap(), 39);
        // and 37 = -4 mod 41, so 4t^2 + 39t + 4 is proportional to 37t^2+2t+37
        assert_eq!((41 - 4) % 41, 37);
        // integers reduce mod r
        assert_eq!(
            reduce_cyc_mod(&CycInt::from_int(-3, 5), &s).unwrap(),
            38
        );
    }

    #[test]
    fn reduction_is_ring_hom() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let s = SplitPrime { r: 41, q: 5, b: 10 };
        for _ in 0..100 {
            let a = CycInt::from_coeffs(
                (0..4).map(|_| rng.gen_range(-20i64..=20).into()).collect(),
                5,
            )
            .unwrap();
            let b = CycInt::from_coeffs(
                (0..4).map(|_| rng.gen_range(-20i64..=20).into()).collect(),
                5,
            )
            .unwrap();
            let pa = reduce_cyc_mod(&a, &s).unwrap();
            let pb = reduce_cyc_mod(&b, &s).unwrap();
            assert_eq!(
                reduce_cyc_mod(&a.mul(&b).unwrap(), &s).unwrap(),
                super::super::fq::mul_mod(pa, pb, s.r)
            );
            assert_eq!(
                reduce_cyc_mod(&a.add(&b).unwrap(), &s).unwrap(),
                (pa + pb) % s.r
            );
        }
    }
}
