//! Substitution into the reduced Fox matrix, exact determinants, and the
//! twisted polynomial family.

mod determinant;
mod polys;
mod substitute;

pub use determinant::{
    dense_laurent_determinant, exact_determinant, exact_determinant_sequential,
    sparse_laurent_determinant,
};
pub use polys::{
    alexander_polynomial, base_meridian_factor, corpoly_product_check, cover_alexander,
    reduced_twisted, transfer_rep, twisted_alexander, twisted_alexander_opts, TwistedPolynomial,
};
pub use substitute::{substitute, SubstitutedMatrix};
