//! p-adic fields, capped-precision elements and Newton polygons.

mod element;
mod field;
mod newton;
pub(crate) mod residue;

pub use element::{vp_factorial, vp_int, PadicElement, Valuation};
pub use field::{FieldBuilder, FieldSpec, PadicField, DEFAULT_PRECISION};
pub use newton::{NewtonPolygon, Segment};
