//! Exact arithmetic: prime fields, polynomials over them and their
//! factorization, the cyclotomic ring `Z[ζ_q]`, Laurent polynomials over it,
//! the maximal real subfield, and reduction maps to prime fields.

mod cyclotomic;
mod factor;
mod fq;
mod laurent;
mod poly_fq;
mod real_subfield;
mod split;

pub use cyclotomic::CycInt;
pub use factor::{cyclotomic_factors, factor_over_fq, is_irreducible};
pub use fq::{inv_mod, is_prime, mul_mod, pow_mod, FqElem};
pub use laurent::LaurentCyc;
pub use poly_fq::PolyFq;
pub use real_subfield::{RealElem, RealSubfield};
pub use split::{find_split_primes, reduce_cyc_mod, reduce_laurent_mod, SplitPrime};
