//! Floating-point root-pairing check: the complex roots of a norm come in
//! pairs `z, 1/z̄`. Advisory evidence only; certified decisions go through
//! the modular and real-subfield tests.

use crate::algebra::LaurentCyc;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootPairingReport {
    /// multiset of roots closed under z ↦ 1/z̄ within tolerance
    pub pairing_holds: bool,
    pub real_roots: usize,
    pub real_roots_distinct: bool,
    pub roots: Vec<(f64, f64)>,
}

/// Embed `ζ ↦ exp(2πi/q)`, find complex roots (Durand–Kerner), and test the
/// pairing.
pub fn root_pairing_check(d: &LaurentCyc, tolerance: f64) -> Result<RootPairingReport> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial("root_pairing_check"));
    }
    let norm = d.normalize()?;
    let span = norm.span();
    if span == 0 {
        return Ok(RootPairingReport {
            pairing_holds: true,
            real_roots: 0,
            real_roots_distinct: true,
            roots: vec![],
        });
    }
    let coeffs: Vec<(f64, f64)> = norm.coeffs().iter().map(|c| c.to_complex()).collect();
    let roots = durand_kerner(&coeffs)?;
    // pairing: greedy match z with 1/conj(z)
    let mut used = vec![false; roots.len()];
    let mut pairing_holds = true;
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        let (re, im) = roots[i];
        let n2 = re * re + im * im;
        let target = (re / n2, im / n2); // 1/conj(z)
        let mut found = false;
        for (j, r) in roots.iter().enumerate() {
            if used[j] && j != i {
                continue;
            }
            if (r.0 - target.0).abs() < tolerance && (r.1 - target.1).abs() < tolerance {
                used[i] = true;
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            pairing_holds = false;
        }
    }
    let mut reals: Vec<f64> = roots
        .iter()
        .filter(|r| r.1.abs() < tolerance)
        .map(|r| r.0)
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let real_roots = reals.len();
    let real_roots_distinct = reals.windows(2).all(|w| (w[1] - w[0]).abs() > tolerance);
    Ok(RootPairingReport {
        pairing_holds,
        real_roots,
        real_roots_distinct,
        roots,
    })
}

fn durand_kerner(coeffs: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    let n = coeffs.len() - 1;
    let (lr, li) = coeffs[n];
    let lead_norm = lr * lr + li * li;
    if lead_norm < 1e-24 {
        return Err(Error::Precondition("leading coefficient too small".into()));
    }
    // monic coefficients
    let monic: Vec<(f64, f64)> = coeffs
        .iter()
        .map(|&(a, b)| cdiv((a, b), (lr, li)))
        .collect();
    let mut roots: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            (1.2 * ang.cos(), 1.2 * ang.sin())
        })
        .collect();
    for _ in 0..300 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut num = horner(&monic, roots[i]);
            for j in 0..n {
                if j != i {
                    num = cdiv(num, csub(roots[i], roots[j]));
                }
            }
            roots[i] = csub(roots[i], num);
            max_step = max_step.max((num.0 * num.0 + num.1 * num.1).sqrt());
        }
        if max_step < 1e-13 {
            return Ok(roots);
        }
    }
    // slow convergence is reported, not hidden
    Err(Error::Precondition(
        "root finding did not converge".into(),
    ))
}

fn horner(coeffs: &[(f64, f64)], z: (f64, f64)) -> (f64, f64) {
    let mut acc = (0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = cadd(cmul(acc, z), c);
    }
    acc
}

fn cadd(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}

fn csub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_pair_passes() {
        // (t-2)(t-1/2) ~ (t-2)(2t-1): roots 2 and 0.5 pair up
        let d = LaurentCyc::from_int_coeffs(0, &[2, -5, 2], 5);
        let r = root_pairing_check(&d, 1e-6).unwrap();
        assert!(r.pairing_holds);
        assert_eq!(r.real_roots, 2);
    }

    #[test]
    fn constructed_counterexample_fails() {
        // (t-2)(t-3)
        let d = LaurentCyc::from_int_coeffs(0, &[6, -5, 1], 5);
        let r = root_pairing_check(&d, 1e-6).unwrap();
        assert!(!r.pairing_holds);
    }
}
