//! The induced `p × p` matrices: `(x^j, v)` acts on the induced module by
//! `A^j · diag(ζ^χ(v), ζ^χ(x·v), ..., ζ^χ(x^(p-1)·v))` where `A` is the
//! companion-style matrix with `t` in the lower-left corner. These are
//! monomial matrices (one nonzero per row), which keeps substitution sparse.

use super::{Character, CyclicModuleSpec, SemidirectElem};
use crate::algebra::{CycInt, LaurentCyc};

/// A monomial matrix over `Z[ζ_q][t^±1]`: row `i` has its only nonzero entry
/// `t^texp[i] ζ^zexp[i]` in column `col[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMatrix {
    p: usize,
    q: u64,
    col: Vec<usize>,
    texp: Vec<i64>,
    zexp: Vec<u64>,
}

impl MonomialMatrix {
    pub fn identity(p: usize, q: u64) -> Self {
        MonomialMatrix {
            p,
            q,
            col: (0..p).collect(),
            texp: vec![0; p],
            zexp: vec![0; p],
        }
    }

    pub fn size(&self) -> usize {
        self.p
    }

    pub fn entry(&self, row: usize) -> (usize, i64, u64) {
        (self.col[row], self.texp[row], self.zexp[row])
    }

    /// Matrix product (row convention): `(AB)[i] = A[i] composed with B`.
    pub fn mul(&self, other: &MonomialMatrix) -> MonomialMatrix {
        debug_assert_eq!(self.p, other.p);
        let mut col = Vec::with_capacity(self.p);
        let mut texp = Vec::with_capacity(self.p);
        let mut zexp = Vec::with_capacity(self.p);
        for i in 0..self.p {
            let c1 = self.col[i];
            col.push(other.col[c1]);
            texp.push(self.texp[i] + other.texp[c1]);
            zexp.push((self.zexp[i] + other.zexp[c1]) % self.q);
        }
        MonomialMatrix {
            p: self.p,
            q: self.q,
            col,
            texp,
            zexp,
        }
    }

    pub fn to_laurent(&self) -> Vec<Vec<LaurentCyc>> {
        let mut out = vec![vec![LaurentCyc::zero(self.q); self.p]; self.p];
        for i in 0..self.p {
            out[i][self.col[i]] =
                LaurentCyc::monomial(CycInt::zeta_pow(self.zexp[i] as i64, self.q), self.texp[i]);
        }
        out
    }
}

/// The matrix of `(x^j, v)` under the character `χ`.
pub fn induced_matrix(
    spec: &CyclicModuleSpec,
    elem: &SemidirectElem,
    chi: &Character,
) -> MonomialMatrix {
    let p = spec.p() as usize;
    let q = spec.q();
    // diagonal exponents: chi(x^c · v) for column c
    let mut dvals = Vec::with_capacity(p);
    let mut v = elem.v.clone();
    for _ in 0..p {
        dvals.push(chi.apply(&v));
        v = spec.mul_x(&v);
    }
    let mut col = Vec::with_capacity(p);
    let mut texp = Vec::with_capacity(p);
    let mut zexp = Vec::with_capacity(p);
    for i in 0..p as i64 {
        let c = (i + elem.j).rem_euclid(p as i64) as usize;
        let k = (i + elem.j).div_euclid(p as i64);
        col.push(c);
        texp.push(k);
        zexp.push(dvals[c] % q);
    }
    MonomialMatrix {
        p,
        q,
        col,
        texp,
        zexp,
    }
}

/// Same matrix as explicit Laurent entries.
pub fn induced_laurent_matrix(
    spec: &CyclicModuleSpec,
    elem: &SemidirectElem,
    chi: &Character,
) -> Vec<Vec<LaurentCyc>> {
    induced_matrix(spec, elem, chi).to_laurent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PolyFq;
    use crate::reps::{semidirect_mul, SemidirectElem};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec_12a169() -> CyclicModuleSpec {
        CyclicModuleSpec::new(3, 5, PolyFq::new(vec![1, 1, 1], 5)).unwrap()
    }

    #[test]
    fn paper_displayed_matrix() {
        // x_1 = (x, 4+2x), chi(1)=1, chi(x)=0: rows [0, z^-2, 0], [0, 0, z^-2],
        // [z^4 t, 0, 0]; z^-2 = z^3
        let spec = spec_12a169();
        let chi = Character::new(vec![1, 0], 5);
        let e = SemidirectElem { j: 1, v: vec![4, 2] };
        let m = induced_matrix(&spec, &e, &chi);
        assert_eq!(m.entry(0), (1, 0, 3));
        assert_eq!(m.entry(1), (2, 0, 3));
        assert_eq!(m.entry(2), (0, 1, 4));
    }

    #[test]
    fn identity_for_trivial_element() {
        let spec = spec_12a169();
        let chi = Character::new(vec![2, 3], 5);
        let e = SemidirectElem { j: 0, v: vec![0, 0] };
        assert_eq!(
            induced_matrix(&spec, &e, &chi),
            MonomialMatrix::identity(3, 5)
        );
    }

    #[test]
    fn companion_matrix_for_zero_character() {
        // (j=1, v=0, chi arbitrary) is the companion matrix A
        let spec = spec_12a169();
        let chi = Character::zero(2, 5);
        let e = SemidirectElem { j: 1, v: vec![0, 0] };
        let m = induced_matrix(&spec, &e, &chi);
        assert_eq!(m.entry(0), (1, 0, 0));
        assert_eq!(m.entry(1), (2, 0, 0));
        assert_eq!(m.entry(2), (0, 1, 0));
    }

    #[test]
    fn functoriality_on_random_pairs() {
        // matrix(ab) = matrix(a) matrix(b), the computational content of the
        // induced-representation formula
        let spec = spec_12a169();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let chi = Character::new(vec![rng.gen_range(0..5), rng.gen_range(0..5)], 5);
            let a = SemidirectElem {
                j: rng.gen_range(-4i64..=4),
                v: vec![rng.gen_range(0..5), rng.gen_range(0..5)],
            };
            let b = SemidirectElem {
                j: rng.gen_range(-4i64..=4),
                v: vec![rng.gen_range(0..5), rng.gen_range(0..5)],
            };
            let ab = semidirect_mul(&spec, &a, &b);
            let lhs = induced_matrix(&spec, &a, &chi).mul(&induced_matrix(&spec, &b, &chi));
            let rhs = induced_matrix(&spec, &ab, &chi);
            assert_eq!(lhs, rhs);
        }
    }
}
