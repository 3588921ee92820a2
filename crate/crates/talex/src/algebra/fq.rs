//! The prime field `F_q`, with elements carrying their modulus.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An element of the field with `q` elements, `q` prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FqElem {
    value: u64,
    q: u64,
}

impl FqElem {
    pub fn new(value: i64, q: u64) -> Self {
        debug_assert!(is_prime(q));
        FqElem {
            value: value.rem_euclid(q as i64) as u64,
            q,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(FqElem {
            value: (self.value + other.value) % self.q,
            q: self.q,
        })
    }

    pub fn mul(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(FqElem {
            value: mul_mod(self.value, other.value, self.q),
            q: self.q,
        })
    }

    pub fn neg(&self) -> FqElem {
        FqElem {
            value: if self.value == 0 { 0 } else { self.q - self.value },
            q: self.q,
        }
    }

    pub fn inv(&self) -> Result<FqElem> {
        if self.value == 0 {
            return Err(Error::Precondition("inverse of zero in F_q".into()));
        }
        Ok(FqElem {
            value: inv_mod(self.value, self.q),
            q: self.q,
        })
    }

    fn check(&self, other: &FqElem) -> Result<()> {
        if self.q != other.q {
            return Err(Error::ModulusMismatch(self.q, other.q));
        }
        Ok(())
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime, via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = FqElem::new(3, 7);
        let b = FqElem::new(5, 7);
        assert_eq!(a.add(&b).unwrap().value(), 1);
        assert_eq!(a.mul(&b).unwrap().value(), 1);
        assert_eq!(a.neg().value(), 4);
        assert_eq!(a.inv().unwrap().value(), 5);
        assert!(a.add(&FqElem::new(1, 5)).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(41) && is_prime(10007));
        assert!(!is_prime(1) && !is_prime(49) && !is_prime(561));
    }
}
