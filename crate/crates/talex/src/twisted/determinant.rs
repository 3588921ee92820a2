//! Exact determinants over `Z[ζ_q][t^±1]` by evaluation–interpolation:
//! evaluate `t` at small integers, run fraction-free Bareiss elimination over
//! `Z[ζ_q]` at each point, and interpolate the Laurent polynomial exactly.
//! Evaluation points are independent pure tasks and run in parallel under the
//! `parallel` feature.

use super::substitute::SubstitutedMatrix;
use crate::algebra::{CycInt, LaurentCyc};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact determinant of the reduced square part of a substituted matrix.
pub fn exact_determinant(mat: &SubstitutedMatrix) -> Result<LaurentCyc> {
    sparse_laurent_determinant(&mat.reduced_rows(), mat.conductor(), true)
}

/// Same computation with the evaluation points processed sequentially, kept
/// as a separate entry point for benchmarking against the parallel path.
pub fn exact_determinant_sequential(mat: &SubstitutedMatrix) -> Result<LaurentCyc> {
    sparse_laurent_determinant(&mat.reduced_rows(), mat.conductor(), false)
}

/// Determinant of a square sparse matrix given as rows of `(col, entry)`.
pub fn sparse_laurent_determinant(
    rows: &[Vec<(usize, LaurentCyc)>],
    q: u64,
    parallel: bool,
) -> Result<LaurentCyc> {
    let n = rows.len();
    if n == 0 {
        return Ok(LaurentCyc::one(q));
    }
    // per-row exponent windows; factoring t^lo out of each row
    let mut row_lo = Vec::with_capacity(n);
    let mut bound = 0usize;
    for row in rows {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for (_, v) in row {
            if v.is_zero() {
                continue;
            }
            lo = lo.min(v.lowest_exp());
            hi = hi.max(v.highest_exp());
        }
        if lo > hi {
            return Ok(LaurentCyc::zero(q)); // empty row
        }
        row_lo.push(lo);
        bound += (hi - lo) as usize;
    }
    let shift: i64 = row_lo.iter().sum();
    let npoints = bound + 2; // +1 for interpolation count, +1 for verification
    let points: Vec<i64> = eval_points(npoints);
    let tasks: Vec<(i64, Vec<Vec<(usize, CycInt)>>)> = points
        .iter()
        .map(|&x| {
            let m: Vec<Vec<(usize, CycInt)>> = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| {
                            let shifted = v
                                .mul(&LaurentCyc::monomial(CycInt::one(q), -row_lo[i]))
                                .expect("same conductor");
                            (*c, shifted.eval_int(&BigInt::from(x)))
                        })
                        .collect()
                })
                .collect();
            (x, m)
        })
        .collect();
    let dets: Vec<CycInt> = if parallel {
        crate::par::map_collect(tasks, |(_, m)| bareiss_cyc(m, q))
    } else {
        tasks.into_iter().map(|(_, m)| bareiss_cyc(m, q)).collect()
    };
    // interpolate on the first bound+1 points
    let m = bound + 1;
    let dim = (q - 1) as usize;
    let xs: Vec<BigRational> = points
        .iter()
        .take(m)
        .map(|&x| BigRational::from(BigInt::from(x)))
        .collect();
    let mut coeff_vectors: Vec<Vec<BigInt>> = vec![vec![]; dim];
    for (k, slot) in coeff_vectors.iter_mut().enumerate() {
        let ys: Vec<BigRational> = dets
            .iter()
            .take(m)
            .map(|d| BigRational::from(d.coeffs()[k].clone()))
            .collect();
        *slot = newton_interpolate(&xs, &ys)?;
    }
    let mut terms = vec![];
    for e in 0..m {
        let mut coords = vec![BigInt::zero(); dim];
        let mut nonzero = false;
        for (k, v) in coeff_vectors.iter().enumerate() {
            if let Some(c) = v.get(e) {
                if !c.is_zero() {
                    nonzero = true;
                }
                coords[k] = c.clone();
            }
        }
        if nonzero {
            terms.push((e as i64 + shift, CycInt::from_coeffs(coords, q)?));
        }
    }
    let det = LaurentCyc::from_terms(terms, q)?;
    // verification at the extra point
    let xv = points[m];
    let expect = &dets[m];
    let got = det
        .mul(&LaurentCyc::monomial(CycInt::one(q), -shift))
        .expect("same conductor")
        .eval_int(&BigInt::from(xv));
    if got != *expect {
        return Err(Error::Precondition(
            "determinant interpolation failed verification (degree bound violated)".into(),
        ));
    }
    Ok(det)
}

fn eval_points(n: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(n);
    let mut v = 0i64;
    while out.len() < n {
        out.push(v);
        v = if v > 0 { -v } else { -v + 1 };
    }
    out
}

/// Fraction-free Bareiss elimination over `Z[ζ_q]` with sparsity-aware
/// pivoting. Divisions by the previous pivot are exact (Sylvester identity);
/// each is one multiplication by the pivot's Galois cofactor and an integer
/// division by its norm.
fn bareiss_cyc(rows: Vec<Vec<(usize, CycInt)>>, q: u64) -> CycInt {
    let n = rows.len();
    let mut m: Vec<Vec<CycInt>> = vec![vec![CycInt::zero(q); n]; n];
    for (i, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            m[i][c] = v;
        }
    }
    let mut sign = 1i64;
    let mut divisor: Option<(CycInt, BigInt)> = None; // (cofactor, norm) of prev pivot
    for k in 0..n - 1 {
        // Markowitz-style pivot in the active submatrix
        let mut row_nnz = vec![0usize; n];
        let mut col_nnz = vec![0usize; n];
        for i in k..n {
            for j in k..n {
                if !m[i][j].is_zero() {
                    row_nnz[i] += 1;
                    col_nnz[j] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for i in k..n {
            if row_nnz[i] == 0 {
                return CycInt::zero(q);
            }
            for j in k..n {
                if m[i][j].is_zero() {
                    continue;
                }
                let score = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if best.map(|(s, _, _)| score < s).unwrap_or(true) {
                    best = Some((score, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            return CycInt::zero(q);
        };
        if pi != k {
            m.swap(k, pi);
            sign = -sign;
        }
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let lead = std::mem::replace(&mut m[i][k], CycInt::zero(q));
            for j in k + 1..n {
                if m[i][j].is_zero() && lead.is_zero() {
                    continue;
                }
                let mut v = m[i][j].mul(&pivot).expect("conductor");
                if !lead.is_zero() && !m[k][j].is_zero() {
                    v = v.sub(&lead.mul(&m[k][j]).expect("conductor")).expect("conductor");
                }
                if let Some((cof, nrm)) = &divisor {
                    if !v.is_zero() {
                        v = v
                            .mul(cof)
                            .expect("conductor")
                            .div_exact_int(nrm)
                            .expect("Bareiss division is exact");
                    }
                }
                m[i][j] = v;
            }
        }
        if m[k][k].is_zero() {
            return CycInt::zero(q);
        }
        let cof = pivot.norm_cofactor();
        let nrm = pivot.mul(&cof).expect("conductor");
        let nrm = nrm.as_int().expect("norm is rational").clone();
        divisor = Some((cof, nrm));
    }
    let val = m[n - 1][n - 1].clone();
    if sign < 0 {
        val.neg()
    } else {
        val
    }
}

/// Newton interpolation; errors if the result is not integral.
fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Result<Vec<BigInt>> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    // divided differences in place: dd[i] = f[x_0..x_i]
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // expand Newton form to monomial coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()]; // prod_{j<k} (x - x_j)
    for (k, c) in dd.iter().enumerate() {
        for (e, b) in basis.iter().enumerate() {
            let add = c * b;
            coeffs[e] += add;
        }
        if k + 1 < n {
            // basis *= (x - x_k)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (e, b) in basis.iter().enumerate() {
                next[e + 1] += b;
                next[e] -= b * &xs[k];
            }
            basis = next;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in coeffs {
        if !c.denom().is_one() {
            return Err(Error::Precondition(
                "interpolated determinant not integral".into(),
            ));
        }
        out.push(c.to_integer());
    }
    while matches!(out.last(), Some(c) if c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

/// Dense determinant of a small Laurent matrix by cofactor expansion; used
/// for the `p × p` normalizing factors.
pub fn dense_laurent_determinant(m: &[Vec<LaurentCyc>], q: u64) -> Result<LaurentCyc> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentCyc::one(q));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = LaurentCyc::zero(q);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentCyc>> = m
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let sub = dense_laurent_determinant(&minor, q)?;
        let term = m[i][0].mul(&sub)?;
        acc = if i % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}
