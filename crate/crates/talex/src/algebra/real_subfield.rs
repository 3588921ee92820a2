//! The maximal real subfield `Q(θ)`, `θ = ζ_q + ζ_q^(-1)`, with exact
//! arithmetic, certified signs (rational interval refinement against the
//! minimal polynomial), and Sturm real-root counts.

use super::cyclotomic::CycInt;
use super::fq;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Precomputed data for `Q(θ)`: the minimal polynomial of `θ` over `Q`
/// (integer, monic, degree `(q-1)/2`) and an isolating rational interval for
/// the embedding `θ = 2 cos(2π/q)`.
#[derive(Clone, Debug)]
pub struct RealSubfield {
    q: u64,
    /// monic integer minimal polynomial, ascending coefficients
    min_poly: Vec<BigInt>,
    /// powers θ^0..θ^(m-1) in the ζ power basis, columns of the rewrite system
    theta_powers: Vec<CycInt>,
}

/// An element of `Q(θ)` as rational coordinates on `1, θ, ..., θ^(m-1)`.
pub type RealElem = Vec<BigRational>;

impl RealSubfield {
    pub fn new(q: u64) -> Result<Self> {
        if q < 3 || !fq::is_prime(q) {
            return Err(Error::NotPrime("q", q));
        }
        let m = ((q - 1) / 2) as usize;
        let theta = CycInt::zeta_pow(1, q)
            .add(&CycInt::zeta_pow(-1, q))
            .unwrap();
        // min poly = prod_{j=1..m} (x - (zeta^j + zeta^-j)), computed in Z[zeta]
        let mut poly: Vec<CycInt> = vec![CycInt::one(q)];
        for j in 1..=m as i64 {
            let root = CycInt::zeta_pow(j, q)
                .add(&CycInt::zeta_pow(-j, q))
                .unwrap();
            let mut next = vec![CycInt::zero(q); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c).unwrap();
                next[i] = next[i].sub(&c.mul(&root).unwrap()).unwrap();
            }
            poly = next;
        }
        let min_poly: Vec<BigInt> = poly
            .iter()
            .map(|c| c.as_int().expect("Galois-invariant").clone())
            .collect();
        let mut theta_powers = Vec::with_capacity(m);
        let mut acc = CycInt::one(q);
        for _ in 0..m {
            theta_powers.push(acc.clone());
            acc = acc.mul(&theta).unwrap();
        }
        Ok(RealSubfield {
            q,
            min_poly,
            theta_powers,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// Express a conjugation-fixed cyclotomic integer in the θ power basis
    /// with integer coordinates. Errors when the element is not real.
    pub fn rewrite(&self, a: &CycInt) -> Result<Vec<BigInt>> {
        if a.conductor() != self.q {
            return Err(Error::ModulusMismatch(a.conductor(), self.q));
        }
        if !a.is_real() {
            return Err(Error::Precondition(
                "coefficient not fixed by conjugation".into(),
            ));
        }
        let m = self.degree();
        let dim = (self.q - 1) as usize;
        // Solve sum_j x_j * theta^j = a over Q by Gaussian elimination.
        let mut aug: Vec<Vec<BigRational>> = (0..dim)
            .map(|row| {
                let mut r: Vec<BigRational> = (0..m)
                    .map(|col| BigRational::from(self.theta_powers[col].coeffs()[row].clone()))
                    .collect();
                r.push(BigRational::from(a.coeffs()[row].clone()));
                r
            })
            .collect();
        let mut pivot_rows = vec![];
        let mut r0 = 0;
        for col in 0..m {
            let piv = (r0..dim).find(|&i| !aug[i][col].is_zero());
            let piv = piv.ok_or_else(|| {
                Error::Precondition("theta powers degenerate (internal)".into())
            })?;
            aug.swap(r0, piv);
            let inv = aug[r0][col].recip();
            for x in aug[r0].iter_mut() {
                *x *= &inv;
            }
            for i in 0..dim {
                if i != r0 && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    for j in 0..=m {
                        let sub = &f * &aug[r0][j];
                        aug[i][j] -= sub;
                    }
                }
            }
            pivot_rows.push(r0);
            r0 += 1;
        }
        // consistency: remaining rows must have zero rhs
        for row in aug.iter().skip(m) {
            if !row[m].is_zero() {
                return Err(Error::Precondition(
                    "element not in the real subfield span".into(),
                ));
            }
        }
        let mut out = Vec::with_capacity(m);
        for (j, _) in pivot_rows.iter().enumerate() {
            let v = aug[j][m].clone();
            if !v.denom().is_one() {
                return Err(Error::Precondition(
                    "real rewrite not integral (internal)".into(),
                ));
            }
            out.push(v.to_integer());
        }
        Ok(out)
    }

    /// Roots of the minimal polynomial modulo a prime `r` (brute scan; `r`
    /// stays small).
    pub fn min_poly_roots_mod(&self, r: u64) -> Vec<u64> {
        let coeffs: Vec<u64> = self
            .min_poly
            .iter()
            .map(|c| {
                use num_integer::Integer;
                use num_traits::ToPrimitive;
                c.mod_floor(&BigInt::from(r)).to_u64().unwrap()
            })
            .collect();
        let mut out = vec![];
        for x in 0..r {
            let mut acc = 0u64;
            for &c in coeffs.iter().rev() {
                acc = (fq::mul_mod(acc, x, r) + c) % r;
            }
            if acc == 0 {
                out.push(x);
            }
        }
        out
    }

    // ----- exact signs via interval refinement -----

    /// An isolating rational interval around `θ = 2 cos(2π/q)`, certified by a
    /// sign change of the minimal polynomial and a width below half the
    /// float-estimated root gap.
    fn isolating_interval(&self) -> (BigRational, BigRational) {
        let q = self.q as f64;
        let theta = 2.0 * (2.0 * std::f64::consts::PI / q).cos();
        let mut gap = f64::INFINITY;
        for j in 2..=self.degree() {
            let other = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / q).cos();
            gap = gap.min((theta - other).abs());
        }
        if !gap.is_finite() {
            gap = 1.0;
        }
        let w = (gap / 8.0).min(1e-4);
        let lo = BigRational::from_float(theta - w).unwrap();
        let hi = BigRational::from_float(theta + w).unwrap();
        let slo = sign_of(&self.eval_min_poly(&lo));
        let shi = sign_of(&self.eval_min_poly(&hi));
        assert!(
            slo * shi == -1,
            "isolating interval must bracket a simple root"
        );
        (lo, hi)
    }

    fn eval_min_poly(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.min_poly.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact sign of a nonzero element of `Q(θ)` under the standard real
    /// embedding.
    pub fn sign(&self, e: &RealElem) -> i32 {
        if e.iter().all(|c| c.is_zero()) {
            return 0;
        }
        let (mut lo, mut hi) = self.isolating_interval();
        loop {
            let (vlo, vhi) = interval_eval(e, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            // refine by bisection of the min-poly bracket
            let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            let smid = sign_of(&self.eval_min_poly(&mid));
            if smid == 0 {
                // mid hit the root exactly: only possible when θ is rational
                return sign_of(&eval_rat(e, &mid));
            }
            let slo = sign_of(&self.eval_min_poly(&lo));
            if slo == smid {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    // ----- Q(θ) field arithmetic -----

    pub fn real_zero(&self) -> RealElem {
        vec![BigRational::zero(); self.degree()]
    }

    pub fn real_from_ints(&self, v: &[BigInt]) -> RealElem {
        let mut out = self.real_zero();
        for (i, c) in v.iter().enumerate() {
            out[i] = BigRational::from(c.clone());
        }
        out
    }

    pub fn real_add(&self, a: &RealElem, b: &RealElem) -> RealElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn real_sub(&self, a: &RealElem, b: &RealElem) -> RealElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn real_scale(&self, a: &RealElem, k: &BigRational) -> RealElem {
        a.iter().map(|x| x * k).collect()
    }

    pub fn real_mul(&self, a: &RealElem, b: &RealElem) -> RealElem {
        let m = self.degree();
        let mut raw = vec![BigRational::zero(); 2 * m - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        // reduce mod min_poly (monic)
        for e in (m..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[e], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (k, mc) in self.min_poly.iter().take(m).enumerate() {
                let sub = &c * &BigRational::from(mc.clone());
                raw[e - m + k] -= sub;
            }
        }
        raw.truncate(m);
        raw
    }

    pub fn real_is_zero(&self, a: &RealElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn real_inv(&self, a: &RealElem) -> Result<RealElem> {
        if self.real_is_zero(a) {
            return Err(Error::Precondition("inverse of zero in Q(theta)".into()));
        }
        // extended Euclid over Q[x]: gcd(a, min_poly) = 1
        let m = self.degree();
        let mut r0: Vec<BigRational> = self
            .min_poly
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut r1 = a.clone();
        trim_q(&mut r0);
        trim_q(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod_q(&r0, &r1);
            let s_next = poly_sub_q(&s0, &poly_mul_q(&quot, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        // r0 = gcd (constant), s0 * a = r0 mod min_poly
        if r0.len() != 1 {
            return Err(Error::Precondition("element not invertible".into()));
        }
        let inv_c = r0[0].recip();
        let mut out = vec![BigRational::zero(); m];
        for (i, c) in s0.iter().enumerate() {
            if i < m {
                out[i] = c * &inv_c;
            }
        }
        // s0 may exceed degree m-1 before reduction; reduce via real_mul with 1
        Ok(self.reduce_poly(out, &s0, &inv_c, m))
    }

    fn reduce_poly(
        &self,
        prefilled: RealElem,
        s0: &[BigRational],
        inv_c: &BigRational,
        m: usize,
    ) -> RealElem {
        if s0.len() <= m {
            return prefilled;
        }
        let mut raw: Vec<BigRational> = s0.iter().map(|c| c * inv_c).collect();
        for e in (m..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[e], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (k, mc) in self.min_poly.iter().take(m).enumerate() {
                let sub = &c * &BigRational::from(mc.clone());
                raw[e - m + k] -= sub;
            }
        }
        raw.truncate(m);
        raw
    }

    // ----- Sturm on polynomials over Q(θ) -----

    /// Number of distinct real roots (standard embedding) of a nonzero
    /// polynomial with `Q(θ)` coefficients, ascending, via a Sturm chain.
    pub fn count_real_roots(&self, poly: &[RealElem]) -> Result<usize> {
        let mut p0: Vec<RealElem> = poly.to_vec();
        trim_re(self, &mut p0);
        if p0.is_empty() {
            return Err(Error::ZeroPolynomial("count_real_roots"));
        }
        if p0.len() == 1 {
            return Ok(0);
        }
        let mut p1: Vec<RealElem> = p0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.real_scale(c, &BigRational::from(BigInt::from(i))))
            .collect();
        trim_re(self, &mut p1);
        let mut chain = vec![p0, p1];
        loop {
            let k = chain.len();
            let rem = self.poly_rem_re(&chain[k - 2], &chain[k - 1])?;
            let mut neg: Vec<RealElem> = rem
                .iter()
                .map(|c| self.real_scale(c, &BigRational::from(BigInt::from(-1))))
                .collect();
            trim_re(self, &mut neg);
            if neg.is_empty() {
                break;
            }
            chain.push(neg);
        }
        let mut v_minus = 0usize;
        let mut v_plus = 0usize;
        let mut last_minus = 0i32;
        let mut last_plus = 0i32;
        for p in &chain {
            let lead = self.sign(p.last().unwrap());
            let deg = p.len() - 1;
            let at_plus = lead;
            let at_minus = if deg % 2 == 0 { lead } else { -lead };
            if last_plus != 0 && at_plus != 0 && at_plus != last_plus {
                v_plus += 1;
            }
            if last_minus != 0 && at_minus != 0 && at_minus != last_minus {
                v_minus += 1;
            }
            if at_plus != 0 {
                last_plus = at_plus;
            }
            if at_minus != 0 {
                last_minus = at_minus;
            }
        }
        Ok(v_minus.saturating_sub(v_plus))
    }

    fn poly_rem_re(&self, a: &[RealElem], b: &[RealElem]) -> Result<Vec<RealElem>> {
        let mut rem: Vec<RealElem> = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = self.real_inv(b.last().unwrap())?;
        while rem.len() > db {
            let top = rem.last().unwrap().clone();
            if self.real_is_zero(&top) {
                rem.pop();
                continue;
            }
            let c = self.real_mul(&top, &lead_inv);
            let shift = rem.len() - 1 - db;
            for (j, bc) in b.iter().enumerate() {
                let sub = self.real_mul(&c, bc);
                rem[shift + j] = self.real_sub(&rem[shift + j], &sub);
            }
            rem.pop();
            let mut r = rem;
            trim_re(self, &mut r);
            rem = r;
            if rem.is_empty() {
                break;
            }
        }
        Ok(rem)
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn eval_rat(e: &RealElem, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in e.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Interval Horner evaluation of a θ-polynomial on `[lo, hi]`.
fn interval_eval(e: &RealElem, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in e.iter().rev() {
        // [alo,ahi] * [lo,hi]
        let cands = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut nlo = cands[0].clone();
        let mut nhi = cands[0].clone();
        for c2 in &cands[1..] {
            if *c2 < nlo {
                nlo = c2.clone();
            }
            if *c2 > nhi {
                nhi = c2.clone();
            }
        }
        alo = nlo + c;
        ahi = nhi + c;
    }
    (alo, ahi)
}

fn trim_q(p: &mut Vec<BigRational>) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

fn trim_re(f: &RealSubfield, p: &mut Vec<RealElem>) {
    while matches!(p.last(), Some(c) if f.real_is_zero(c)) {
        p.pop();
    }
}

fn poly_divmod_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let c = &top / lead;
        let shift = rem.len() - 1 - db;
        quot[shift] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let sub = &c * bc;
            rem[shift + j] -= sub;
        }
        rem.pop();
        trim_q(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quot, rem)
}

fn poly_mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        *o = x - y;
    }
    trim_q(&mut out);
    out
}
