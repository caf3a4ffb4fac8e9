//! Truncated series algebra over p-adic, rational and period coefficients.

mod coefficient;
mod gauss;
mod multi;
mod poly;
mod restriction;
mod trunc;

pub use coefficient::{Coefficient, Domain, Valued};
pub use gauss::{gauss_norm, residue_system, sup_norm_on_integers, Bound, LocalFunction};
pub use multi::{BiSeries, Layout, MultiSeries};
pub use poly::Polynomial;
pub use restriction::{
    expand_l_polynomial, scalar_restriction_check, validate_basis, RestrictionReport, RestrictionViolation,
};
pub use trunc::{precision_requirement, TruncSeries, ASSERTION_PRECISION};

pub(crate) use multi::powers;
pub(crate) use trunc::PowerTable;
