//! Module closures of ideals and executable checks of the closure axioms.
//!
//! For an ideal `I` of `R` and an `R`-module `B`, `x` lies in the closure `I^{cl_B}` iff
//! `x b` lies in `I B` for every `b` in `B`. It suffices to test generators of `B`, so
//! the closure is `(IB :_R B)` for an ideal `B` and `∩_j (IF + im P :_R e_j)` for
//! `B = coker P`. The computed closure of a finitely generated ideal is its finitistic
//! value as well; no separate code path exists for that.

pub mod checks;
pub mod sampling;

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::quotient::{FreeModuleElement, PresentedModule, QuotientRing, RIdeal, Submodule};

pub use checks::{
    check_colon_capturing, check_colon_chain, check_extension, check_idempotence, check_order_preservation,
    check_residuality, check_strong_cca, check_strong_ccb, CheckReport, Verdict,
};

/// Which closure operation to run.
#[derive(Clone, Debug)]
pub enum ClosureSpec {
    Trivial,
    /// Module closure for `B` given as an ideal of `R`.
    ModuleIdeal(RIdeal),
    /// Module closure for `B = coker P`.
    ModulePresented(PresentedModule),
}

impl fmt::Display for ClosureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureSpec::Trivial => write!(f, "trivial"),
            ClosureSpec::ModuleIdeal(b) => write!(f, "cl_B, B = ideal {b}"),
            ClosureSpec::ModulePresented(b) => write!(f, "cl_B, B = {b}"),
        }
    }
}

impl ClosureSpec {
    pub fn ring(&self) -> Option<&QuotientRing> {
        match self {
            ClosureSpec::Trivial => None,
            ClosureSpec::ModuleIdeal(b) => Some(b.ring()),
            ClosureSpec::ModulePresented(b) => Some(b.ring()),
        }
    }

    /// The same closure with `B` rewritten as a presented module.
    pub fn presented(&self) -> ClosureSpec {
        match self {
            ClosureSpec::ModuleIdeal(b) => ClosureSpec::ModulePresented(PresentedModule::from_ideal(b)),
            other => other.clone(),
        }
    }

    /// `B ⊗_R S` for a quotient `S` of the same ambient ring. An ideal-valued `B` is first
    /// replaced by its presentation, since `B ⊗ S` and the image of `B` in `S` differ in general.
    pub fn base_change(&self, target: &QuotientRing) -> Result<ClosureSpec> {
        Ok(match self.presented() {
            ClosureSpec::ModulePresented(b) => ClosureSpec::ModulePresented(b.base_change(target)?),
            other => other,
        })
    }

    fn check_ring(&self, ring: &QuotientRing) -> Result<()> {
        match self.ring() {
            Some(r) => r.check_same(ring),
            None => Ok(()),
        }
    }

    pub fn close(&self, ideal: &RIdeal) -> Result<RIdeal> {
        closure_of_ideal(ideal, self)
    }
}

/// `I^{cl}` for the given closure. The result always contains `I`.
pub fn closure_of_ideal(ideal: &RIdeal, spec: &ClosureSpec) -> Result<RIdeal> {
    spec.check_ring(ideal.ring())?;
    match spec {
        ClosureSpec::Trivial => Ok(ideal.clone()),
        ClosureSpec::ModuleIdeal(b) => {
            if b.is_zero() {
                return Err(AlgebraError::ZeroModule);
            }
            ideal.product(b)?.colon(b)
        }
        ClosureSpec::ModulePresented(b) => {
            if b.is_zero_module() {
                return Err(AlgebraError::ZeroModule);
            }
            if b.is_free_presentation() {
                return Ok(ideal.clone());
            }
            let ring = ideal.ring();
            let image = Submodule::ideal_multiple(ideal, b.rank()).sum(&b.relations())?;
            let mut acc = ring.unit_ideal();
            for j in 0..b.rank() {
                let part = image.colon_ideal(&FreeModuleElement::basis(ring, b.rank(), j))?;
                acc = acc.intersection(&part)?;
            }
            Ok(acc)
        }
    }
}

pub fn is_ideal_closed(ideal: &RIdeal, spec: &ClosureSpec) -> Result<bool> {
    closure_of_ideal(ideal, spec)?.equals(ideal)
}
