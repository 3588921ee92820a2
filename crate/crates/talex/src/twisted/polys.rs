//! Twisted, reduced, untwisted, and cover Alexander polynomials.

use super::determinant::{
    dense_laurent_determinant, exact_determinant, sparse_laurent_determinant,
};
use super::substitute::substitute;
use crate::algebra::{CycInt, LaurentCyc};
use crate::knot::{FoxMatrix, Presentation};
use crate::reps::{induced_laurent_matrix, Character, MetabelianRep, SemidirectElem};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Conductor used for computations whose coefficients are plain integers.
const INT_CONDUCTOR: u64 = 3;

/// Presentations larger than this are Tietze-simplified before substitution;
/// the dual-route tests pin both paths to the same polynomials.
const SIMPLIFY_THRESHOLD: usize = 16;

/// A computed twisted polynomial with its provenance.
#[derive(Clone, Debug)]
pub struct TwistedPolynomial {
    /// normalized representative
    pub value: LaurentCyc,
    pub p: u64,
    pub q: u64,
    pub character: Character,
    /// true if the `(1-t)^e` reduction has been applied
    pub reduced: bool,
}

/// Restrict a representation to the surviving generators of a simplified
/// presentation (`kept[i]` = original id of new generator `i+1`).
pub fn transfer_rep(rep: &MetabelianRep, kept: &[usize]) -> MetabelianRep {
    MetabelianRep {
        spec: rep.spec.clone(),
        assignments: kept
            .iter()
            .map(|&g| rep.assignments[g - 1].clone())
            .collect(),
    }
}

/// `det(ρ̃(x_n) - I)` where the base meridian maps to `(x, 0)`; equals
/// `±(1 - t)` for every `p`.
pub fn base_meridian_factor(rep: &MetabelianRep, chi: &Character) -> Result<LaurentCyc> {
    let spec = &rep.spec;
    let q = spec.q();
    let base = SemidirectElem {
        j: 1,
        v: spec.zero(),
    };
    let mut m = induced_laurent_matrix(spec, &base, chi);
    let p = spec.p() as usize;
    for (i, row) in m.iter_mut().enumerate().take(p) {
        row[i] = row[i].sub(&LaurentCyc::one(q))?;
    }
    dense_laurent_determinant(&m, q)
}

/// The unreduced twisted Alexander polynomial
/// `Δ = det(r(F)) / det(ρ̃(x_n) - I) · (1-t)^s`, `s = 1` iff `χ` is trivial.
pub fn twisted_alexander(
    pres: &Presentation,
    rep: &MetabelianRep,
    chi: &Character,
) -> Result<LaurentCyc> {
    twisted_alexander_opts(pres, rep, chi, pres.generators() > SIMPLIFY_THRESHOLD, true)
}

pub fn twisted_alexander_opts(
    pres: &Presentation,
    rep: &MetabelianRep,
    chi: &Character,
    simplify: bool,
    parallel: bool,
) -> Result<LaurentCyc> {
    if simplify {
        let (spres, kept) = pres.simplify_with_map();
        let srep = transfer_rep(rep, &kept);
        debug_assert!(srep.verify(&spres));
        return twisted_alexander_opts(&spres, &srep, chi, false, parallel);
    }
    let fox = FoxMatrix::reduced(pres);
    let sub = substitute(&fox, rep, chi)?;
    let det = if parallel {
        exact_determinant(&sub)?
    } else {
        super::determinant::exact_determinant_sequential(&sub)?
    };
    if det.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    let denom = base_meridian_factor(rep, chi)?;
    let mut numer = det;
    if chi.is_zero() {
        let one_minus_t = LaurentCyc::from_int_coeffs(0, &[1, -1], rep.spec.q());
        numer = numer.mul(&one_minus_t)?;
    }
    numer.divide_exact(&denom)
}

/// The reduced polynomial `Δ̃ = Δ / (1-t)^e`, `e = 1` iff `χ` is nonzero;
/// returned normalized.
pub fn reduced_twisted(delta: &LaurentCyc, chi: &Character) -> Result<LaurentCyc> {
    let q = delta.conductor();
    let value = if chi.is_zero() {
        delta.clone()
    } else {
        let one_minus_t = LaurentCyc::from_int_coeffs(0, &[1, -1], q);
        delta.divide_exact(&one_minus_t)?
    };
    value.normalize()
}

// ----- untwisted and cover polynomials -----

/// Monomial matrix of a word under `x_i ↦ A` (companion matrix, `t` in the
/// corner): row `i` maps to column `(i + w) mod p` with `t^floor((i+w)/p)`,
/// where `w` is the word's exponent sum.
fn companion_rows(
    pres: &Presentation,
    p: usize,
) -> Vec<Vec<(usize, LaurentCyc)>> {
    let q = INT_CONDUCTOR;
    let n = pres.generators();
    let relators = pres.working_relators();
    let size = (n - 1) * p;
    let mut rows: Vec<std::collections::HashMap<usize, LaurentCyc>> =
        vec![Default::default(); size];
    for (r, rel) in relators.iter().enumerate() {
        for g in 1..n {
            for (coef, word) in crate::knot::fox_derivative(rel, g) {
                let w: i64 = word.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum();
                for i in 0..p as i64 {
                    let col = (i + w).rem_euclid(p as i64) as usize;
                    let te = (i + w).div_euclid(p as i64);
                    let cell = rows[r * p + i as usize]
                        .entry((g - 1) * p + col)
                        .or_insert_with(|| LaurentCyc::zero(q));
                    let mono =
                        LaurentCyc::monomial(CycInt::from_int(coef, q), te);
                    *cell = cell.add(&mono).expect("conductor");
                }
            }
        }
    }
    rows.into_iter()
        .map(|m| {
            let mut row: Vec<(usize, LaurentCyc)> =
                m.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            row.sort_by_key(|&(c, _)| c);
            row
        })
        .collect()
}

/// Shift to exponent 0 and fix the sign of the leading coefficient; when
/// `unit_at_one` is set, also check `Δ(1) = ±1` (true for the classical
/// Alexander polynomial; a cover's polynomial evaluates to ±|H_1(B_p)|).
fn normalize_symmetric(d: &LaurentCyc, unit_at_one: bool) -> Result<Vec<BigInt>> {
    let (_, coeffs) = d
        .to_int_coeffs()
        .ok_or_else(|| Error::Precondition("expected integer coefficients".into()))?;
    let mut coeffs = coeffs;
    if coeffs.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    let at_one: BigInt = coeffs.iter().sum();
    if unit_at_one && at_one.magnitude() != &1u32.into() {
        return Err(Error::Precondition(format!(
            "polynomial evaluates to {at_one} at t = 1, want ±1"
        )));
    }
    Ok(coeffs)
}

/// The classical Alexander polynomial via the substitution `x_i ↦ t`,
/// normalized symmetric with positive leading coefficient.
pub fn alexander_polynomial(pres: &Presentation) -> Result<Vec<BigInt>> {
    let pres = if pres.generators() > SIMPLIFY_THRESHOLD {
        pres.simplify()
    } else {
        pres.clone()
    };
    let rows = companion_rows(&pres, 1);
    let det = sparse_laurent_determinant(&rows, INT_CONDUCTOR, true)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    // Δ = det(rF)·(1-t)/det((t) - I) = -det(rF); units are normalized away
    normalize_symmetric(&det, true)
}

/// The Alexander polynomial of the p-fold cyclic cover, computed with the
/// p-dimensional companion substitution (zero character) and the same
/// determinant formula.
pub fn cover_alexander(pres: &Presentation, p: u64) -> Result<Vec<BigInt>> {
    let pres = if pres.generators() > SIMPLIFY_THRESHOLD {
        pres.simplify()
    } else {
        pres.clone()
    };
    let q = INT_CONDUCTOR;
    let rows = companion_rows(&pres, p as usize);
    let det = sparse_laurent_determinant(&rows, q, true)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    // det(A - I) = ±(1 - t)
    let mut a = vec![vec![LaurentCyc::zero(q); p as usize]; p as usize];
    for i in 0..p as usize {
        let col = (i + 1) % p as usize;
        let te = if i + 1 == p as usize { 1 } else { 0 };
        a[i][col] = LaurentCyc::monomial(CycInt::one(q), te);
        a[i][i] = a[i][i].sub(&LaurentCyc::one(q))?;
    }
    let denom = dense_laurent_determinant(&a, q)?;
    let one_minus_t = LaurentCyc::from_int_coeffs(0, &[1, -1], q);
    let delta = det.mul(&one_minus_t)?.divide_exact(&denom)?;
    normalize_symmetric(&delta, false)
}

/// Verify the product identity: `Π_{i=0}^{p-1} Δ_K(ζ_p^i u)`, computed
/// exactly in `Z[ζ_p][u]`, must have rational coefficients supported on
/// exponents divisible by `p` and agree with `cover(u^p)` up to unit.
pub fn corpoly_product_check(alexander: &[BigInt], p: u64, cover: &[BigInt]) -> Result<bool> {
    let mut prod = LaurentCyc::one(p);
    for i in 0..p {
        let terms: Vec<(i64, CycInt)> = alexander
            .iter()
            .enumerate()
            .map(|(k, c)| {
                (
                    k as i64,
                    CycInt::zeta_pow((i * k as u64) as i64, p).scale(c),
                )
            })
            .collect();
        let factor = LaurentCyc::from_terms(terms, p)?;
        prod = prod.mul(&factor)?;
    }
    if prod.is_zero() {
        return Ok(cover.is_empty());
    }
    let lo = prod.lowest_exp();
    let mut folded = vec![];
    for e in lo..=prod.highest_exp() {
        let c = prod.coeff(e);
        if c.is_zero() {
            continue;
        }
        let Some(n) = c.as_int() else {
            return Ok(false); // irrational coefficient: identity fails
        };
        if e % p as i64 != 0 {
            return Ok(false); // exponent not a multiple of p
        }
        folded.push((e / p as i64, n.clone()));
    }
    let min_e = folded.iter().map(|&(e, _)| e).min().unwrap();
    let mut coeffs = vec![BigInt::zero(); (folded.last().unwrap().0 - min_e + 1) as usize];
    for (e, c) in folded {
        coeffs[(e - min_e) as usize] = c;
    }
    // compare with cover up to sign (both integer polynomials)
    let a = trim_ints(&coeffs);
    let b = trim_ints(cover);
    Ok(a == b || a == negate(&b) || a == reverse(&b) || a == negate(&reverse(&b)))
}

fn trim_ints(v: &[BigInt]) -> Vec<BigInt> {
    let start = v.iter().position(|c| !c.is_zero()).unwrap_or(v.len());
    let end = v.iter().rposition(|c| !c.is_zero()).map(|i| i + 1).unwrap_or(start);
    v[start..end].to_vec()
}

fn negate(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|c| -c).collect()
}

fn reverse(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().rev().cloned().collect()
}
