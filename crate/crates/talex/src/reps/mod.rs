//! Metabelian representations: the modules `R_f = F_q[x]/(f)`, the semidirect
//! group `Z ⋉ R_f`, equivariant solutions of the Wirtinger linear system,
//! characters, and the induced `p × p` matrices over `Z[ζ_q][t^±1]`.

mod characters;
mod homology;
mod induced;
mod solve;

pub use characters::enumerate_characters;
pub use homology::branched_homology_order;
pub use induced::{induced_laurent_matrix, induced_matrix, MonomialMatrix};
pub use solve::{decompose_branched_homology, solve_equivariant, IsotypicPiece, ModuleDecomposition};

use crate::algebra::{inv_mod, mul_mod, PolyFq};
use crate::knot::Presentation;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// The cyclic module `R_f = F_q[x]/(f)` for an irreducible `f` dividing
/// `x^p - 1`, with the `Z_p`-generator acting as multiplication by `x`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CyclicModuleSpec {
    p: u64,
    q: u64,
    f: PolyFq,
    /// x^{-1} mod f, cached
    x_inv: Vec<u64>,
}

/// An element of `R_f`: coordinates on `1, x, ..., x^(n-1)`.
pub type ModElem = Vec<u64>;

impl CyclicModuleSpec {
    pub fn new(p: u64, q: u64, f: PolyFq) -> Result<Self> {
        if p == q {
            return Err(Error::EqualPrimes(p, q));
        }
        if f.modulus() != q {
            return Err(Error::ModulusMismatch(f.modulus(), q));
        }
        // f must divide x^p - 1
        let rem = PolyFq::x_pow_minus_one(p, q).rem(&f);
        if !rem.is_zero() {
            return Err(Error::Precondition(format!(
                "{f} does not divide x^{p} - 1 over F_{q}"
            )));
        }
        // x^{-1} = x^{p-1} mod f
        let x_inv_poly = PolyFq::x(q).pow_mod(p - 1, &f);
        let n = f.degree();
        let mut x_inv = vec![0u64; n];
        for (i, &c) in x_inv_poly.coeffs().iter().enumerate() {
            x_inv[i] = c;
        }
        Ok(CyclicModuleSpec { p, q, f, x_inv })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn f(&self) -> &PolyFq {
        &self.f
    }

    /// `n = deg f`, the F_q-dimension of the module.
    pub fn dim(&self) -> usize {
        self.f.degree()
    }

    pub fn zero(&self) -> ModElem {
        vec![0; self.dim()]
    }

    pub fn is_zero_elem(&self, v: &[u64]) -> bool {
        v.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> ModElem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.q).collect()
    }

    pub fn neg(&self, a: &[u64]) -> ModElem {
        a.iter().map(|&x| (self.q - x % self.q) % self.q).collect()
    }

    pub fn scale(&self, a: &[u64], k: u64) -> ModElem {
        a.iter().map(|&x| mul_mod(x, k, self.q)).collect()
    }

    /// Multiply by `x` (the `Z_p` action).
    pub fn mul_x(&self, a: &[u64]) -> ModElem {
        let n = self.dim();
        let q = self.q;
        let mut out = vec![0u64; n];
        let top = a[n - 1];
        for i in (1..n).rev() {
            out[i] = a[i - 1];
        }
        if top != 0 {
            // subtract top * f (monic) from the x^n overflow
            for (i, &fc) in self.f.coeffs().iter().take(n).enumerate() {
                out[i] = (out[i] + q - mul_mod(top, fc, q)) % q;
            }
        }
        out
    }

    /// Multiply by `x^{-1}`.
    pub fn mul_x_inv(&self, a: &[u64]) -> ModElem {
        let g = self.x_inv.clone();
        self.mul_poly(a, &g)
    }

    /// Multiply by a polynomial in `x` (coefficients mod q, length <= n).
    pub fn mul_poly(&self, a: &[u64], g: &[u64]) -> ModElem {
        let mut acc = self.zero();
        let mut shifted = a.to_vec();
        for (i, &c) in g.iter().enumerate() {
            if i > 0 {
                shifted = self.mul_x(&shifted);
            }
            if c != 0 {
                acc = self.add(&acc, &self.scale(&shifted, c));
            }
        }
        acc
    }

    /// `x^e · a` for any integer `e`.
    pub fn mul_x_pow(&self, a: &[u64], e: i64) -> ModElem {
        let e = e.rem_euclid(self.p as i64);
        let mut out = a.to_vec();
        for _ in 0..e {
            out = self.mul_x(&out);
        }
        out
    }

    /// Columns of the n×n matrix of multiplication by the coefficient `g`.
    pub fn mult_matrix(&self, g: &[u64]) -> Vec<ModElem> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut basis = vec![0u64; n];
            basis[j] = 1;
            cols.push(self.mul_poly(&basis, g));
        }
        cols
    }
}

/// An element `(x^j, v)` of `Z ⋉ R_f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemidirectElem {
    pub j: i64,
    pub v: ModElem,
}

/// The group law `(x^i, v)(x^j, w) = (x^(i+j), x^(-j)·v + w)`.
pub fn semidirect_mul(
    spec: &CyclicModuleSpec,
    a: &SemidirectElem,
    b: &SemidirectElem,
) -> SemidirectElem {
    SemidirectElem {
        j: a.j + b.j,
        v: spec.add(&spec.mul_x_pow(&a.v, -b.j), &b.v),
    }
}

pub fn semidirect_inv(spec: &CyclicModuleSpec, a: &SemidirectElem) -> SemidirectElem {
    SemidirectElem {
        j: -a.j,
        v: spec.neg(&spec.mul_x_pow(&a.v, a.j)),
    }
}

/// A metabelian representation: `x_i ↦ (x, v_i)` with `v_m = 0` at the base
/// meridian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianRep {
    pub spec: CyclicModuleSpec,
    /// one module element per generator, 0-indexed (generator i at [i-1])
    pub assignments: Vec<ModElem>,
}

impl MetabelianRep {
    pub fn generator_image(&self, letter: i32) -> SemidirectElem {
        let v = &self.assignments[(letter.unsigned_abs() - 1) as usize];
        let g = SemidirectElem { j: 1, v: v.clone() };
        if letter > 0 {
            g
        } else {
            semidirect_inv(&self.spec, &g)
        }
    }

    pub fn evaluate_word(&self, w: &[i32]) -> SemidirectElem {
        let mut acc = SemidirectElem {
            j: 0,
            v: self.spec.zero(),
        };
        for &l in w {
            let g = self.generator_image(l);
            acc = semidirect_mul(&self.spec, &acc, &g);
        }
        acc
    }

    /// Every relator must evaluate to the identity and the base meridian must
    /// carry `v = 0`.
    pub fn verify(&self, pres: &Presentation) -> bool {
        let m = pres.base_meridian();
        if !self.spec.is_zero_elem(&self.assignments[m - 1]) {
            return false;
        }
        pres.relators().iter().all(|r| {
            let e = self.evaluate_word(r);
            e.j == 0 && self.spec.is_zero_elem(&e.v)
        })
    }

    /// Pointwise multiplication by `x`, realizing the extension-field action
    /// on the solution space.
    pub fn mul_x(&self) -> MetabelianRep {
        MetabelianRep {
            spec: self.spec.clone(),
            assignments: self
                .assignments
                .iter()
                .map(|v| self.spec.mul_x(v))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.assignments.iter().all(|v| self.spec.is_zero_elem(v))
    }
}

/// A linear character `χ: R_f → Z_q`, stored by its values on the power basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Character {
    q: u64,
    values: Vec<u64>,
}

impl Character {
    pub fn new(values: Vec<u64>, q: u64) -> Self {
        Character {
            q,
            values: values.into_iter().map(|v| v % q).collect(),
        }
    }

    pub fn zero(n: usize, q: u64) -> Self {
        Character {
            q,
            values: vec![0; n],
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn apply(&self, v: &[u64]) -> u64 {
        debug_assert_eq!(v.len(), self.values.len());
        let mut acc = 0u64;
        for (&c, &x) in self.values.iter().zip(v) {
            acc = (acc + mul_mod(c, x, self.q)) % self.q;
        }
        acc
    }

    /// The scalar multiple `a·χ`.
    pub fn scale(&self, a: u64) -> Character {
        Character {
            q: self.q,
            values: self.values.iter().map(|&v| mul_mod(v, a, self.q)).collect(),
        }
    }

    /// Canonical representative of the scalar class: first nonzero value 1.
    pub fn scalar_class_rep(&self) -> Character {
        match self.values.iter().find(|&&v| v != 0) {
            None => self.clone(),
            Some(&v) => self.scale(inv_mod(v, self.q)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_12a169() -> CyclicModuleSpec {
        CyclicModuleSpec::new(3, 5, PolyFq::new(vec![1, 1, 1], 5)).unwrap()
    }

    #[test]
    fn semidirect_law() {
        let spec = spec_12a169();
        let a = SemidirectElem { j: 1, v: vec![1, 2] };
        let b = SemidirectElem { j: 1, v: vec![3, 0] };
        let ab = semidirect_mul(&spec, &a, &b);
        assert_eq!(ab.j, 2);
        assert_eq!(ab.v, spec.add(&spec.mul_x_inv(&[1, 2]), &[3, 0]));
        // identity
        let id = SemidirectElem { j: 0, v: spec.zero() };
        assert_eq!(semidirect_mul(&spec, &a, &id), a);
        // inverse
        let inv = semidirect_inv(&spec, &a);
        let prod = semidirect_mul(&spec, &a, &inv);
        assert_eq!(prod.j, 0);
        assert!(spec.is_zero_elem(&prod.v));
    }

    #[test]
    fn x_times_x_inverse() {
        let spec = spec_12a169();
        let v = vec![2, 4];
        assert_eq!(spec.mul_x_inv(&spec.mul_x(&v)), v);
        // x^3 = 1 on R_{1+x+x^2}
        assert_eq!(spec.mul_x_pow(&v, 3), v);
    }

    #[test]
    fn rejects_non_divisor() {
        assert!(CyclicModuleSpec::new(3, 5, PolyFq::new(vec![1, 1], 5)).is_err());
        assert!(CyclicModuleSpec::new(5, 5, PolyFq::new(vec![1, 1], 5)).is_err());
    }

    #[test]
    fn character_scalar_classes() {
        let chi = Character::new(vec![0, 3], 5);
        let rep = chi.scalar_class_rep();
        assert_eq!(rep.values(), &[0, 1]);
        assert_eq!(chi.apply(&[2, 4]), (3 * 4) % 5);
    }
}
