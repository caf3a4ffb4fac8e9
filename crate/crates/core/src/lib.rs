//! Lubin-Tate formal groups over finite extensions of Q_p and the Fourier
//! theory attached to them: the polynomials P_m, the pairing between power
//! series and locally analytic functions, Mahler expansions, Gauss-norm
//! estimates and period valuations.
//!
//! Everything is exact at a configured p-adic precision. Valuations are
//! rationals with `ord_p(p) = 1`; the period Ω is carried symbolically
//! through its grading and its valuation.

pub mod cli;
pub mod error;
pub mod expr;
pub mod json;
pub mod lubin_tate;
pub mod mahler;
pub mod padic;
pub mod period;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational used for valuations and radius exponents.
pub type Rational = num_rational::Ratio<i64>;
