//! Fox free calculus: derivatives of words and the reduced Fox matrix.

use super::presentation::Presentation;
use super::word::Word;

/// An element of the free group ring: a formal integer combination of words.
pub type GroupRingElem = Vec<(i64, Word)>;

/// Fox derivative ∂w/∂x_g, satisfying ∂(uv) = ∂u + u·∂v and
/// ∂(x^{-1}) = -x^{-1}. Equal words are merged; zero terms dropped.
pub fn fox_derivative(w: &[i32], g: usize) -> GroupRingElem {
    let g = g as i32;
    let mut terms: Vec<(i64, Word)> = vec![];
    let mut prefix: Word = vec![];
    for &l in w {
        if l == g {
            terms.push((1, prefix.clone()));
            prefix.push(l);
        } else if l == -g {
            prefix.push(l);
            terms.push((-1, prefix.clone()));
        } else {
            prefix.push(l);
        }
    }
    merge(terms)
}

fn merge(terms: Vec<(i64, Word)>) -> GroupRingElem {
    let mut map: std::collections::BTreeMap<Word, i64> = Default::default();
    for (c, w) in terms {
        *map.entry(w).or_insert(0) += c;
    }
    map.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(w, c)| (c, w))
        .collect()
}

/// The reduced Fox matrix: rows are the working relators, columns the
/// generators with the base meridian dropped. Size (n-1) x (n-1).
#[derive(Clone, Debug)]
pub struct FoxMatrix {
    size: usize,
    entries: Vec<Vec<GroupRingElem>>,
    /// derivatives with respect to the base meridian, kept for sparsity
    /// accounting of the full substituted matrix
    base_column: Vec<GroupRingElem>,
}

impl FoxMatrix {
    pub fn reduced(pres: &Presentation) -> FoxMatrix {
        let n = pres.generators();
        let relators = pres.working_relators();
        let entries = relators
            .iter()
            .map(|r| (1..n).map(|g| fox_derivative(r, g)).collect())
            .collect();
        let base_column = relators
            .iter()
            .map(|r| fox_derivative(r, n))
            .collect();
        FoxMatrix {
            size: n - 1,
            entries,
            base_column,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &GroupRingElem {
        &self.entries[row][col]
    }

    pub fn base_entry(&self, row: usize) -> &GroupRingElem {
        &self.base_column[row]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::word;

    #[test]
    fn derivative_of_generator() {
        assert_eq!(fox_derivative(&[1], 1), vec![(1, vec![])]);
        assert_eq!(fox_derivative(&[-1], 1), vec![(-1, vec![-1])]);
        assert_eq!(fox_derivative(&[2], 1), vec![]);
    }

    #[test]
    fn paper_row_rule() {
        // relator x_j x_k x_j^-1 x_i^-1 with (i,j,k) = (1,2,3):
        let r = vec![2, 3, -2, -1];
        // ∂/∂x_k = x_j
        assert_eq!(fox_derivative(&r, 3), vec![(1, vec![2])]);
        // ∂/∂x_j = 1 - x_j x_k x_j^{-1}  (= 1 - x_i modulo the relation)
        let dj = fox_derivative(&r, 2);
        assert_eq!(
            dj,
            vec![(1, vec![]), (-1, vec![2, 3, -2])]
        );
        // ∂/∂x_i = -x_j x_k x_j^{-1} x_i^{-1} (= -1 modulo the relation)
        let di = fox_derivative(&r, 1);
        assert_eq!(di, vec![(-1, vec![2, 3, -2, -1])]);
    }

    #[test]
    fn product_rule_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let ngens = 4;
        let rand_word = |rng: &mut rand_chacha::ChaCha8Rng| -> Word {
            let len = rng.gen_range(0..8);
            word::reduce(
                &(0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..=ngens) as i32;
                        if rng.gen_bool(0.5) {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect::<Word>(),
            )
        };
        for _ in 0..200 {
            let u = rand_word(&mut rng);
            let v = rand_word(&mut rng);
            let uv = word::concat(&u, &v);
            for g in 1..=ngens {
                // ∂(uv) = ∂u + u ∂v  -- compare as merged formal sums after
                // free reduction of each word times prefix
                let mut lhs = fox_derivative(&uv, g);
                let mut rhs: Vec<(i64, Word)> = fox_derivative(&u, g);
                for (c, w) in fox_derivative(&v, g) {
                    rhs.push((c, word::concat(&u, &w)));
                }
                // free reduction may rewrite prefix words; compare after
                // normalizing each side's words by free reduction
                let norm = |terms: Vec<(i64, Word)>| -> Vec<(i64, Word)> {
                    let mut map: std::collections::BTreeMap<Word, i64> = Default::default();
                    for (c, w) in terms {
                        *map.entry(word::reduce(&w)).or_insert(0) += c;
                    }
                    map.into_iter()
                        .filter(|&(_, c)| c != 0)
                        .map(|(w, c)| (c, w))
                        .collect()
                };
                lhs = norm(lhs);
                rhs = norm(rhs);
                assert_eq!(lhs, rhs, "product rule failed for u={u:?} v={v:?} g={g}");
            }
        }
    }

    #[test]
    fn inverse_rule_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let len = rng.gen_range(1..6);
            let w: Word = word::reduce(
                &(0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..=3) as i32;
                        if rng.gen_bool(0.5) {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect::<Word>(),
            );
            let winv = word::inverse(&w);
            for g in 1..=3 {
                // ∂(w^-1) = -w^-1 ∂w
                let lhs = fox_derivative(&winv, g);
                let mut rhs: Vec<(i64, Word)> = fox_derivative(&w, g)
                    .into_iter()
                    .map(|(c, u)| (-c, word::concat(&winv, &u)))
                    .collect();
                let norm = |terms: Vec<(i64, Word)>| -> Vec<(i64, Word)> {
                    let mut map: std::collections::BTreeMap<Word, i64> = Default::default();
                    for (c, u) in terms {
                        *map.entry(word::reduce(&u)).or_insert(0) += c;
                    }
                    map.into_iter()
                        .filter(|&(_, c)| c != 0)
                        .map(|(u, c)| (c, u))
                        .collect()
                };
                rhs = norm(rhs);
                assert_eq!(norm(lhs), rhs);
            }
        }
    }
}
