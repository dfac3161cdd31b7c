//! Exact ideal and module closure computations over quotients of polynomial rings.
//!
//! The layers build on each other: [`poly`] provides polynomials, Gröbner bases and
//! ideal operations; [`quotient`] lifts them to quotient rings and finitely presented
//! modules; [`closure`] evaluates module closures and checks closure axioms; and
//! [`rationality`] decides closedness of parameter ideals and reproduces the known
//! hypersurface and Veronese examples.

pub mod closure;
pub mod error;
pub mod poly;
pub mod quotient;
pub mod rationality;

pub use error::{AlgebraError, Result};
