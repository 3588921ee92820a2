//! The order of `H_1(B_p)` from the Alexander polynomial: the classical
//! resultant `|Res(Δ_K, (t^p - 1)/(t - 1))| = |Π_{i=1}^{p-1} Δ_K(ζ_p^i)|`,
//! computed exactly in `Z[ζ_p]`.

use crate::algebra::CycInt;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

/// `|H_1(B_p)|` for a knot with the given Alexander polynomial (ascending
/// integer coefficients). Requires `Δ(1) = ±1`.
pub fn branched_homology_order(alexander: &[i64], p: u64) -> Result<BigInt> {
    if alexander.is_empty() {
        return Err(Error::ZeroPolynomial("branched_homology_order"));
    }
    let at_one: i64 = alexander.iter().sum();
    if at_one.abs() != 1 {
        return Err(Error::Precondition(format!(
            "Alexander polynomial has Δ(1) = {at_one}, want ±1"
        )));
    }
    let mut prod = CycInt::one(p);
    for i in 1..p {
        // evaluate at ζ_p^i
        let mut val = CycInt::zero(p);
        for (k, &c) in alexander.iter().enumerate() {
            let term = CycInt::zeta_pow((i as i64) * (k as i64), p).scale(&BigInt::from(c));
            val = val.add(&term)?;
        }
        prod = prod.mul(&val)?;
    }
    let n = prod
        .as_int()
        .expect("Galois-invariant product is rational")
        .clone();
    Ok(n.abs())
}
