//! Planar-diagram codes and the Wirtinger presentation they induce.
//!
//! Convention (documented for the bundled tables): a crossing `[a, b, c, d]`
//! lists edge labels counterclockwise starting at the incoming under-strand.
//! Edges are numbered `1..2n` along the knot's orientation, so the
//! under-strand runs `a → c = a + 1 (mod 2n)` and the over-strand occupies
//! `{b, d}` with the outgoing edge one more than the incoming. The crossing
//! is recorded as positive when the over-strand runs `b → d`; diagram-level
//! handedness is validated downstream by Alexander-polynomial cross-checks
//! (which the unit normalization makes insensitive to a global mirror).

use super::presentation::Presentation;
use super::word;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A PD code: one `[a, b, c, d]` quadruple per crossing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        if crossings.is_empty() {
            return Err(Error::InvalidPdCode(
                "empty PD code (the unknot needs an explicit presentation)".into(),
            ));
        }
        let m = 2 * crossings.len() as u32;
        let mut seen = vec![0u8; m as usize + 1];
        for c in &crossings {
            for &e in c {
                if e == 0 || e > m {
                    return Err(Error::InvalidPdCode(format!(
                        "edge label {e} out of range 1..{m}"
                    )));
                }
                seen[e as usize] += 1;
            }
        }
        if let Some(e) = (1..=m).find(|&e| seen[e as usize] != 2) {
            return Err(Error::InvalidPdCode(format!(
                "edge label {e} appears {} times (want 2)",
                seen[e as usize]
            )));
        }
        let pd = PdCode { crossings };
        // validate strand consecutivity now so downstream code can assume it
        for c in &pd.crossings {
            let [a, b, cc, d] = *c;
            if pd.next(a) != cc {
                return Err(Error::InvalidPdCode(format!(
                    "under-strand not consecutive at crossing {c:?} (multi-component links are not supported)"
                )));
            }
            if pd.next(b) != d && pd.next(d) != b {
                return Err(Error::InvalidPdCode(format!(
                    "over-strand not consecutive at crossing {c:?}"
                )));
            }
        }
        Ok(pd)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    fn edge_count(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    fn next(&self, e: u32) -> u32 {
        e % self.edge_count() + 1
    }

    /// Crossing signs under the documented convention.
    pub fn signs(&self) -> Vec<i8> {
        self.crossings
            .iter()
            .map(|&[_, b, _, d]| if self.next(b) == d { 1 } else { -1 })
            .collect()
    }

    /// Build the Wirtinger presentation: one generator per arc (overpasses
    /// merge the two over edges), one conjugation relator per crossing.
    pub fn wirtinger(&self) -> Result<Presentation> {
        let m = self.edge_count() as usize;
        let mut parent: Vec<usize> = (0..=m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &self.crossings {
            let [_, b, _, d] = *c;
            let rb = find(&mut parent, b as usize);
            let rd = find(&mut parent, d as usize);
            parent[rb] = rd;
        }
        let mut class_ids: Vec<usize> = (1..=m)
            .map(|e| find(&mut parent, e))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        class_ids.sort_unstable();
        let arc_of = |parent: &mut Vec<usize>, e: u32| -> i32 {
            let root = find(parent, e as usize);
            (class_ids.binary_search(&root).unwrap() + 1) as i32
        };
        let n = class_ids.len();
        if n != self.crossings.len() {
            return Err(Error::InvalidPdCode(format!(
                "{} arcs for {} crossings; not a knot diagram",
                n,
                self.crossings.len()
            )));
        }
        let mut relators = vec![];
        let mut parent = parent;
        for c in &self.crossings {
            let [a, b, cc, d] = *c;
            let under_in = arc_of(&mut parent, a);
            let under_out = arc_of(&mut parent, cc);
            let over = arc_of(&mut parent, b);
            let s: i32 = if self.next(b) == d { 1 } else { -1 };
            // under_out = over^s under_in over^-s
            relators.push(word::reduce(&[
                -under_out,
                s * over,
                under_in,
                -s * over,
            ]));
        }
        Presentation::new(n, relators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil_pd() -> PdCode {
        PdCode::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn trefoil_wirtinger_shape() {
        let pres = trefoil_pd().wirtinger().unwrap();
        assert_eq!(pres.generators(), 3);
        assert_eq!(pres.relators().len(), 3);
        for r in pres.relators() {
            assert_eq!(word::weight(r), 0);
        }
    }

    #[test]
    fn bad_codes_rejected() {
        assert!(PdCode::new(vec![]).is_err());
        assert!(PdCode::new(vec![[1, 2, 3, 3]]).is_err());
        // hopf link: two components, arcs != crossings
        let hopf = PdCode::new(vec![[1, 4, 2, 3], [3, 2, 4, 1]]);
        assert!(hopf.is_err() || hopf.unwrap().wirtinger().is_err());
    }
}
