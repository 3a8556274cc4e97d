//! Groebner bases and the ideal operations built on them: elimination,
//! saturation, intersection, and linear algebra on zero-dimensional
//! quotients.

mod buchberger;
mod ideal;
pub(crate) mod opoly;
mod zerodim;

pub use buchberger::{reduced_basis, reduced_basis_capped, step_limit, STEP_LIMIT_VAR};
pub use ideal::{eliminate, ideal_intersect, saturate_by, saturate_t, IdealRep};
pub use zerodim::{charpoly, mat_mul, mult_matrix, quotient_basis, QuotientBasis, RatMatrix};

#[cfg(test)]
mod tests;
