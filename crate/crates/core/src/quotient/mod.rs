//! Quotient rings `A / D`, their ideals, free modules and finitely presented modules.

pub mod module;
pub mod module_gb;
pub mod ring;

pub use module::{FreeModuleElement, PresentedModule, Submodule};
pub use ring::{QuotientRing, RIdeal};
