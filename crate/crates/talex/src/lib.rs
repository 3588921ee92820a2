//! Exact computation of twisted Alexander polynomials of knots via metabelian
//! representations, and norm-factorization obstructions to sliceness and
//! concordance.
//!
//! The pipeline: a knot diagram ([`knot::PdCode`]) or explicit presentation
//! becomes a Wirtinger presentation ([`knot::Presentation`]); equivariant
//! representations of the knot group into `Z ⋉ F_q[x]/(f)` are found by
//! solving a linear system ([`reps`]); substituting the induced `p × p`
//! matrices into the reduced Fox matrix and taking an exact determinant over
//! `Z[ζ_q][t^±1]` yields the twisted polynomial ([`twisted`]); modular and
//! real-subfield factorization tests certify that reduced polynomials are not
//! norms, which obstructs sliceness ([`obstruction`]).
//!
//! All arithmetic is exact: finite fields, arbitrary-precision cyclotomic
//! integers, and Laurent polynomials over them live in [`algebra`].

pub mod algebra;
pub mod knot;
pub mod obstruction;
pub mod reps;
pub mod twisted;

mod error;
pub(crate) mod par;

pub use error::{Error, Result};
