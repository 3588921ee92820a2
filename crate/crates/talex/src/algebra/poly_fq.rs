//! Dense univariate polynomials over `F_q`, coefficients ascending.

use super::fq::{inv_mod, mul_mod};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A polynomial over `F_q` with ascending coefficients and nonzero leading
/// coefficient (the zero polynomial has an empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PolyFq {
    q: u64,
    coeffs: Vec<u64>,
}

impl PolyFq {
    pub fn new(coeffs: Vec<i64>, q: u64) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.rem_euclid(q as i64) as u64)
            .collect();
        let mut p = PolyFq { q, coeffs };
        p.trim();
        p
    }

    pub fn from_raw(coeffs: Vec<u64>, q: u64) -> Self {
        let mut p = PolyFq {
            q,
            coeffs: coeffs.into_iter().map(|c| c % q).collect(),
        };
        p.trim();
        p
    }

    pub fn zero(q: u64) -> Self {
        PolyFq { q, coeffs: vec![] }
    }

    pub fn one(q: u64) -> Self {
        PolyFq { q, coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x(q: u64) -> Self {
        PolyFq {
            q,
            coeffs: vec![0, 1],
        }
    }

    /// `x^p - 1`.
    pub fn x_pow_minus_one(p: u64, q: u64) -> Self {
        let mut coeffs = vec![0u64; p as usize + 1];
        coeffs[0] = q - 1;
        coeffs[p as usize] = 1;
        PolyFq { q, coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(0)) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.q) + c) % self.q;
        }
        acc
    }

    pub fn add(&self, other: &PolyFq) -> PolyFq {
        debug_assert_eq!(self.q, other.q);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + b) % self.q;
        }
        let mut p = PolyFq { q: self.q, coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &PolyFq) -> PolyFq {
        self.add(&other.scale(self.q - 1))
    }

    pub fn scale(&self, k: u64) -> PolyFq {
        let k = k % self.q;
        let mut p = PolyFq {
            q: self.q,
            coeffs: self.coeffs.iter().map(|&c| mul_mod(c, k, self.q)).collect(),
        };
        p.trim();
        p
    }

    pub fn mul(&self, other: &PolyFq) -> PolyFq {
        debug_assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return PolyFq::zero(self.q);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.q)) % self.q;
            }
        }
        let mut p = PolyFq { q: self.q, coeffs };
        p.trim();
        p
    }

    /// Euclidean division, returns (quotient, remainder).
    pub fn div_rem(&self, div: &PolyFq) -> Result<(PolyFq, PolyFq)> {
        debug_assert_eq!(self.q, div.q);
        if div.is_zero() {
            return Err(Error::ZeroPolynomial("div_rem"));
        }
        let q = self.q;
        let mut rem = self.coeffs.clone();
        let dn = div.coeffs.len();
        if rem.len() < dn {
            return Ok((PolyFq::zero(q), self.clone()));
        }
        let lead_inv = inv_mod(div.leading(), q);
        let mut quot = vec![0u64; rem.len() - dn + 1];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dn - 1], lead_inv, q);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &d) in div.coeffs.iter().enumerate() {
                let sub = mul_mod(c, d, q);
                rem[i + j] = (rem[i + j] + q - sub) % q;
            }
        }
        let mut r = PolyFq { q, coeffs: rem };
        r.trim();
        let mut qq = PolyFq { q, coeffs: quot };
        qq.trim();
        Ok((qq, r))
    }

    pub fn rem(&self, div: &PolyFq) -> PolyFq {
        self.div_rem(div).expect("nonzero divisor").1
    }

    pub fn gcd(&self, other: &PolyFq) -> PolyFq {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> PolyFq {
        debug_assert!(!self.is_zero());
        self.scale(inv_mod(self.leading(), self.q))
    }

    pub fn derivative(&self) -> PolyFq {
        if self.coeffs.len() <= 1 {
            return PolyFq::zero(self.q);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % self.q, self.q))
            .collect();
        let mut p = PolyFq { q: self.q, coeffs };
        p.trim();
        p
    }

    /// `self^exp mod m`.
    pub fn pow_mod(&self, mut exp: u64, m: &PolyFq) -> PolyFq {
        let mut base = self.rem(m);
        let mut acc = PolyFq::one(self.q);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    /// `x^(q^d) mod m`, by repeated q-power.
    pub fn x_q_pow_mod(d: usize, m: &PolyFq) -> PolyFq {
        let q = m.q;
        let mut acc = PolyFq::x(q).rem(m);
        for _ in 0..d {
            acc = acc.pow_mod(q, m);
        }
        acc
    }
}

impl std::fmt::Display for PolyFq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_roundtrip() {
        let q = 7;
        let a = PolyFq::new(vec![1, 2, 3, 4, 5], q);
        let b = PolyFq::new(vec![2, 0, 1], q);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn gcd_of_multiples() {
        let q = 5;
        let g = PolyFq::new(vec![1, 1], q);
        let a = g.mul(&PolyFq::new(vec![2, 0, 1], q));
        let b = g.mul(&PolyFq::new(vec![3, 1], q));
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn frobenius_power() {
        let m = PolyFq::new(vec![1, 1, 1], 5); // x^2+x+1
        let x25 = PolyFq::x_q_pow_mod(2, &m);
        // x^25 = x^(5^2) should equal x mod any irreducible of degree 2
        assert_eq!(x25, PolyFq::x(5));
    }
}
