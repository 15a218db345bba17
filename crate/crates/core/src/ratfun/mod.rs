//! Exact arithmetic for the coefficient fields: polynomials and rational
//! functions in the simple roots, and fractions of characters.

mod charfrac;
mod factored;
mod laurent;
mod poly;

pub use charfrac::CharFraction;
pub use factored::FactoredRational;
pub use laurent::LaurentElement;
pub use poly::{Monomial, MultiPoly};
