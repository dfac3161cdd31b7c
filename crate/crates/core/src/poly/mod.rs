//! Exact polynomial arithmetic and ideal operations in an ambient polynomial ring.

pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use groebner::{buchberger, normal_form};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, ParseError};
pub use polynomial::{PolyRing, Polynomial, RingRef};
