//! The cyclotomic ring `Z[ζ_q]` on the power basis `1, ζ, ..., ζ^(q-2)`,
//! with arbitrary-precision integer coordinates. Reduction uses
//! `ζ^(q-1) = -(1 + ζ + ... + ζ^(q-2))`.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// An element of `Z[ζ_q]` as a coordinate vector of length `q - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CycInt {
    q: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(q: u64) -> Self {
        debug_assert!(q >= 2);
        CycInt {
            q,
            coeffs: vec![BigInt::zero(); (q - 1) as usize],
        }
    }

    pub fn one(q: u64) -> Self {
        Self::from_int(BigInt::one(), q)
    }

    pub fn from_int(n: impl Into<BigInt>, q: u64) -> Self {
        let mut v = Self::zero(q);
        v.coeffs[0] = n.into();
        v
    }

    /// `ζ^e`, any integer exponent.
    pub fn zeta_pow(e: i64, q: u64) -> Self {
        let e = e.rem_euclid(q as i64) as u64;
        let mut v = Self::zero(q);
        if e < q - 1 {
            v.coeffs[e as usize] = BigInt::one();
        } else {
            for c in v.coeffs.iter_mut() {
                *c = -BigInt::one();
            }
        }
        v
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>, q: u64) -> Result<Self> {
        if coeffs.len() != (q - 1) as usize {
            return Err(Error::Precondition(format!(
                "CycInt wants {} coordinates, got {}",
                q - 1,
                coeffs.len()
            )));
        }
        Ok(CycInt { q, coeffs })
    }

    pub fn conductor(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational-integer value, if all higher coordinates vanish.
    pub fn as_int(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.q != other.q {
            return Err(Error::ModulusMismatch(self.q, other.q));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(CycInt {
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(CycInt {
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let dim = (self.q - 1) as usize;
        let mut raw = vec![BigInt::zero(); 2 * dim - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Ok(Self::reduce_raw(raw, self.q))
    }

    /// Reduce a raw coefficient vector over exponents `0..len` to the power
    /// basis, using `ζ^q = 1` then folding the `ζ^(q-1)` coordinate.
    fn reduce_raw(raw: Vec<BigInt>, q: u64) -> CycInt {
        let dim = (q - 1) as usize;
        let mut folded = vec![BigInt::zero(); q as usize];
        for (e, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                folded[e % q as usize] += c;
            }
        }
        let top = std::mem::take(&mut folded[dim]);
        let mut coeffs: Vec<BigInt> = folded.into_iter().take(dim).collect();
        if !top.is_zero() {
            for c in coeffs.iter_mut() {
                *c -= &top;
            }
        }
        CycInt { q, coeffs }
    }

    /// The Galois map `ζ ↦ ζ^e`, a ring automorphism for `gcd(e, q) = 1`.
    pub fn galois_apply(&self, e: i64) -> Result<CycInt> {
        let em = e.rem_euclid(self.q as i64) as u64;
        if em == 0 {
            return Err(Error::Precondition(
                "galois exponent must be coprime to q".into(),
            ));
        }
        let mut raw = vec![BigInt::zero(); self.q as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * em % self.q) as usize] += c;
            }
        }
        Ok(Self::reduce_raw(raw, self.q))
    }

    /// Complex conjugation `ζ ↦ ζ^(-1)`, an involution.
    pub fn conjugate(&self) -> CycInt {
        self.galois_apply(self.q as i64 - 1)
            .expect("q-1 coprime to q")
    }

    /// Whether the element is fixed by conjugation (lies in the maximal real
    /// subfield).
    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Product of all nontrivial Galois conjugates, so that
    /// `self * cofactor = norm` (a rational integer).
    pub fn norm_cofactor(&self) -> CycInt {
        let mut acc = CycInt::one(self.q);
        for e in 2..self.q {
            acc = acc.mul(&self.galois_apply(e as i64).unwrap()).unwrap();
        }
        acc
    }

    /// Field norm down to `Z`.
    pub fn norm(&self) -> BigInt {
        let n = self.mul(&self.norm_cofactor()).unwrap();
        n.as_int().expect("norm is rational").clone()
    }

    /// Exact division in `Z[ζ_q]`; errors if `self/div` is not integral.
    pub fn div_exact(&self, div: &CycInt) -> Result<CycInt> {
        self.check(div)?;
        if div.is_zero() {
            return Err(Error::ZeroPolynomial("CycInt::div_exact"));
        }
        let cof = div.norm_cofactor();
        let nrm = div.mul(&cof)?;
        let nrm = nrm
            .as_int()
            .expect("norm is rational")
            .clone();
        let num = self.mul(&cof)?;
        num.div_exact_int(&nrm)
    }

    /// Coordinatewise exact division by a rational integer.
    pub fn div_exact_int(&self, n: &BigInt) -> Result<CycInt> {
        if n.is_zero() {
            return Err(Error::ZeroPolynomial("CycInt::div_exact_int"));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quot, rem) = num_integer::Integer::div_rem(c, n);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!("{c} / {n} in Z[zeta]")));
            }
            coeffs.push(quot);
        }
        Ok(CycInt { q: self.q, coeffs })
    }

    /// Evaluate under `ζ ↦ exp(2πi/q)`; for numeric cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / self.q as f64;
            let cf = bigint_to_f64(c);
            re += cf * angle.cos();
            im += cf * angle.sin();
        }
        (re, im)
    }

    /// Lexicographic sign of the coordinate vector: sign of the first nonzero
    /// coordinate, 0 for zero.
    pub fn lex_sign(&self) -> i32 {
        for c in &self.coeffs {
            if c.is_positive() {
                return 1;
            }
            if c.is_negative() {
                return -1;
            }
        }
        0
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl std::fmt::Display for CycInt {
    /// Rendered as `(a0 + a1*z + a2*z^2 + ...)`, omitting zero terms.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(n) = self.as_int() {
            return write!(f, "{n}");
        }
        write!(f, "(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if i == 0 {
                    write!(f, "{c}")?;
                } else if *c == BigInt::one() {
                    write!(f, "{}", zpow(i))?;
                } else if *c == -BigInt::one() {
                    write!(f, "-{}", zpow(i))?;
                } else {
                    write!(f, "{c}*{}", zpow(i))?;
                }
                first = false;
            } else {
                let (sign, abs) = if c.is_negative() {
                    ("-", -c)
                } else {
                    ("+", c.clone())
                };
                if abs == BigInt::one() && i > 0 {
                    write!(f, " {sign} {}", zpow(i))?;
                } else if i == 0 {
                    write!(f, " {sign} {abs}")?;
                } else {
                    write!(f, " {sign} {abs}*{}", zpow(i))?;
                }
            }
        }
        write!(f, ")")
    }
}

fn zpow(i: usize) -> String {
    if i == 1 {
        "z".to_string()
    } else {
        format!("z^{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cyc(q: u64, rng: &mut ChaCha8Rng) -> CycInt {
        let coeffs = (0..q - 1)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        CycInt::from_coeffs(coeffs, q).unwrap()
    }

    #[test]
    fn zeta_times_zeta4_is_one() {
        let q = 5;
        let z = CycInt::zeta_pow(1, q);
        let z4 = CycInt::zeta_pow(4, q);
        assert_eq!(z.mul(&z4).unwrap(), CycInt::one(q));
    }

    #[test]
    fn one_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [3, 5, 7, 13] {
            let a = random_cyc(q, &mut rng);
            assert_eq!(CycInt::one(q).mul(&a).unwrap(), a);
        }
    }

    #[test]
    fn zeta7_plus_inverse_squared() {
        // (z + z^6)^2 = z^2 + 2 + z^5, checked against the complex embedding
        let q = 7;
        let a = CycInt::zeta_pow(1, q).add(&CycInt::zeta_pow(6, q)).unwrap();
        let sq = a.mul(&a).unwrap();
        let expected = CycInt::zeta_pow(2, q)
            .add(&CycInt::from_int(2, q))
            .unwrap()
            .add(&CycInt::zeta_pow(5, q))
            .unwrap();
        assert_eq!(sq, expected);
        let (re, im) = sq.to_complex();
        let c = 2.0 * (2.0 * std::f64::consts::PI / 7.0).cos();
        assert!((re - c * c).abs() < 1e-9 && im.abs() < 1e-9);
    }

    #[test]
    fn conjugate_is_involution_and_fixes_integers() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for q in [3, 5, 7, 13] {
            for _ in 0..50 {
                let a = random_cyc(q, &mut rng);
                assert_eq!(a.conjugate().conjugate(), a);
            }
            let c = CycInt::from_int(42, q);
            assert_eq!(c.conjugate(), c);
        }
        let z5 = CycInt::zeta_pow(1, 5);
        assert_eq!(z5.conjugate(), CycInt::zeta_pow(4, 5));
    }

    #[test]
    fn galois_is_ring_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for q in [5u64, 7, 13] {
            for _ in 0..100 {
                let a = random_cyc(q, &mut rng);
                let b = random_cyc(q, &mut rng);
                let e = rng.gen_range(1..q) as i64;
                let lhs = a.mul(&b).unwrap().galois_apply(e).unwrap();
                let rhs = a
                    .galois_apply(e)
                    .unwrap()
                    .mul(&b.galois_apply(e).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                let lhs = a.add(&b).unwrap().galois_apply(e).unwrap();
                let rhs = a
                    .galois_apply(e)
                    .unwrap()
                    .add(&b.galois_apply(e).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn galois_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_cyc(7, &mut rng);
        let lhs = a.galois_apply(2).unwrap().galois_apply(3).unwrap();
        assert_eq!(lhs, a.galois_apply(6).unwrap());
        assert_eq!(a.galois_apply(1).unwrap(), a);
    }

    #[test]
    fn division_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for q in [3, 5, 7] {
            for _ in 0..30 {
                let a = random_cyc(q, &mut rng);
                let b = random_cyc(q, &mut rng);
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul(&b).unwrap();
                assert_eq!(prod.div_exact(&b).unwrap(), a);
            }
        }
    }

    #[test]
    fn inexact_division_detected() {
        let q = 5;
        let a = CycInt::from_int(3, q);
        let b = CycInt::from_int(2, q);
        assert!(a.div_exact(&b).is_err());
    }

    #[test]
    fn rendering() {
        let q = 5;
        let a = CycInt::zeta_pow(3, q)
            .add(&CycInt::zeta_pow(2, q))
            .unwrap()
            .add(&CycInt::from_int(5, q))
            .unwrap();
        assert_eq!(a.to_string(), "(5 + z^2 + z^3)");
        assert_eq!(CycInt::from_int(-4, q).to_string(), "-4");
    }
}
