//! Enumerating linear characters on `R_f`.

use super::{Character, CyclicModuleSpec};

/// All nonzero linear maps `R_f → Z_q`, or one representative per scalar
/// class (`(q^n - 1)/(q - 1)` of them) when `up_to_scalar` is set.
pub fn enumerate_characters(spec: &CyclicModuleSpec, up_to_scalar: bool) -> Vec<Character> {
    let q = spec.q();
    let n = spec.dim();
    let mut out = vec![];
    let mut values = vec![0u64; n];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            values[i] += 1;
            if values[i] < q {
                break;
            }
            values[i] = 0;
            i += 1;
        }
        let chi = Character::new(values.clone(), q);
        if up_to_scalar {
            if chi.scalar_class_rep() == chi {
                out.push(chi);
            }
        } else {
            out.push(chi);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PolyFq;

    #[test]
    fn counts() {
        // n=1, q=7: 6 characters, 1 scalar class
        let spec = CyclicModuleSpec::new(3, 7, PolyFq::new(vec![3, 1], 7)).unwrap();
        assert_eq!(enumerate_characters(&spec, false).len(), 6);
        assert_eq!(enumerate_characters(&spec, true).len(), 1);
        // n=2, q=5: 24 characters, 6 scalar classes
        let spec = CyclicModuleSpec::new(3, 5, PolyFq::new(vec![1, 1, 1], 5)).unwrap();
        assert_eq!(enumerate_characters(&spec, false).len(), 24);
        let reps = enumerate_characters(&spec, true);
        assert_eq!(reps.len(), 6);
        // scalar class representatives pairwise non-proportional
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                for a in 1..5u64 {
                    assert_ne!(reps[i].scale(a), reps[j]);
                }
            }
        }
    }
}
