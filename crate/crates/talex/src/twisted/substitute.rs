//! Substituting a representation into the reduced Fox matrix.

use crate::algebra::{CycInt, LaurentCyc};
use crate::knot::{FoxMatrix, GroupRingElem};
use crate::reps::{induced_matrix, Character, MetabelianRep, MonomialMatrix};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;

/// The substituted Fox matrix. Rows cover the working relators
/// (`(n-1)·p` scalar rows); columns cover all `n` generators (`n·p` scalar
/// columns) with the base-meridian block stored last. The determinant is
/// taken over the square part that excludes that final block column; the
/// sparsity index counts the full substituted rows, matching how these
/// matrices are reported.
#[derive(Clone, Debug)]
pub struct SubstitutedMatrix {
    q: u64,
    p: usize,
    block_rows: usize,
    entries: HashMap<(usize, usize), LaurentCyc>,
}

impl SubstitutedMatrix {
    pub fn conductor(&self) -> u64 {
        self.q
    }

    /// Size of the square determinant part: `(n-1)·p`.
    pub fn size(&self) -> usize {
        self.block_rows * self.p
    }

    /// Nonzero entries over all `n·p` columns (the published sparsity count).
    pub fn nonzero_count(&self) -> usize {
        self.entries.values().filter(|v| !v.is_zero()).count()
    }

    /// Nonzero entries of the square part actually entering the determinant.
    pub fn reduced_nonzero_count(&self) -> usize {
        let n = self.size();
        self.entries
            .iter()
            .filter(|((_, c), v)| *c < n && !v.is_zero())
            .count()
    }

    /// All entries are single monomials `±t^k ζ^r` (or `±1`).
    pub fn entries_are_monomial(&self) -> bool {
        self.entries.values().all(|v| {
            if v.is_zero() {
                return true;
            }
            if v.span() != 0 {
                return false;
            }
            let c = &v.coeffs()[0];
            let nonzero: Vec<&BigInt> = c.coeffs().iter().filter(|x| !x.is_zero()).collect();
            // a power of zeta has one +1 coordinate, or all coordinates -1
            (nonzero.len() == 1 && nonzero[0].magnitude() == &1u32.into())
                || c.coeffs().iter().all(|x| x.magnitude() == &1u32.into())
        })
    }

    /// The square part as sparse rows for the determinant.
    pub fn reduced_rows(&self) -> Vec<Vec<(usize, LaurentCyc)>> {
        let n = self.size();
        let mut rows: Vec<Vec<(usize, LaurentCyc)>> = vec![vec![]; n];
        for (&(r, c), v) in &self.entries {
            if c < n && !v.is_zero() {
                rows[r].push((c, v.clone()));
            }
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|&(c, _)| c);
        }
        rows
    }

    pub fn entry(&self, row: usize, col: usize) -> LaurentCyc {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| LaurentCyc::zero(self.q))
    }
}

/// Apply the ring homomorphism extending `x_i ↦ induced(1, v_i, χ)` to every
/// entry of the reduced Fox matrix.
pub fn substitute(
    fox: &FoxMatrix,
    rep: &MetabelianRep,
    chi: &Character,
) -> Result<SubstitutedMatrix> {
    let spec = &rep.spec;
    if chi.q() != spec.q() {
        return Err(Error::ModulusMismatch(chi.q(), spec.q()));
    }
    if chi.values().len() != spec.dim() {
        return Err(Error::Precondition(
            "character dimension does not match module".into(),
        ));
    }
    let p = spec.p() as usize;
    let q = spec.q();
    let block_rows = fox.size();
    let mut entries: HashMap<(usize, usize), LaurentCyc> = HashMap::new();
    let mut add_block = |row_block: usize, col_block: usize, elem: &GroupRingElem| -> Result<()> {
        for (coef, word) in elem {
            let mut m = MonomialMatrix::identity(p, q);
            for &l in word {
                m = m.mul(&induced_matrix(spec, &rep.generator_image(l), chi));
            }
            for i in 0..p {
                let (c, te, ze) = m.entry(i);
                let cell = (row_block * p + i, col_block * p + c);
                let mono = LaurentCyc::monomial(
                    CycInt::zeta_pow(ze as i64, q).scale(&BigInt::from(*coef)),
                    te,
                );
                let cur = entries.remove(&cell);
                let merged = match cur {
                    Some(v) => v.add(&mono)?,
                    None => mono,
                };
                if merged.is_zero() {
                    entries.remove(&cell);
                } else {
                    entries.insert(cell, merged);
                }
            }
        }
        Ok(())
    };
    for r in 0..block_rows {
        for c in 0..block_rows {
            add_block(r, c, fox.entry(r, c))?;
        }
        // base-meridian block, stored after the square part
        add_block(r, block_rows, fox.base_entry(r))?;
    }
    Ok(SubstitutedMatrix {
        q,
        p,
        block_rows,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PolyFq;
    use crate::knot::{bundled_knot, FoxMatrix};
    use crate::reps::CyclicModuleSpec;

    fn golden_rep() -> (MetabelianRep, Character) {
        let spec = CyclicModuleSpec::new(3, 5, PolyFq::new(vec![1, 1, 1], 5)).unwrap();
        let rep = MetabelianRep {
            spec,
            assignments: vec![
                vec![4, 2],
                vec![2, 1],
                vec![0, 0],
                vec![3, 4],
                vec![2, 3],
                vec![4, 4],
                vec![1, 0],
                vec![3, 1],
                vec![0, 2],
                vec![2, 0],
                vec![1, 0],
                vec![0, 0],
            ],
        };
        (rep, Character::new(vec![1, 0], 5))
    }

    #[test]
    fn golden_sparsity() {
        let pres = bundled_knot("12a169").unwrap().presentation().unwrap();
        let (rep, chi) = golden_rep();
        assert!(rep.verify(&pres));
        let fox = FoxMatrix::reduced(&pres);
        let sub = substitute(&fox, &rep, &chi).unwrap();
        assert_eq!(sub.size(), 33);
        assert_eq!(sub.nonzero_count(), 132);
        assert_eq!(sub.reduced_nonzero_count(), 123);
        assert!(sub.entries_are_monomial());
    }

    #[test]
    fn word_homomorphism() {
        // substituting the word x_i x_j equals the product of the matrices
        let (rep, chi) = golden_rep();
        let spec = &rep.spec;
        let m1 = induced_matrix(spec, &rep.generator_image(1), &chi);
        let m2 = induced_matrix(spec, &rep.generator_image(2), &chi);
        let prod = m1.mul(&m2);
        let direct = {
            let mut m = MonomialMatrix::identity(3, 5);
            for &l in &[1, 2] {
                m = m.mul(&induced_matrix(spec, &rep.generator_image(l), &chi));
            }
            m
        };
        assert_eq!(prod, direct);
    }
}
