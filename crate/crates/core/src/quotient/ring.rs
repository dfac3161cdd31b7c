use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::poly::{Ideal, PolyRing, Polynomial, RingRef};

struct Inner {
    ambient: RingRef,
    defining: Ideal,
}

/// `R = A / D` for an ambient polynomial ring `A` and defining ideal `D`.
/// Every `R`-ideal is stored through its lift to `A`, which always contains `D`.
#[derive(Clone)]
pub struct QuotientRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientRing({self})")
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.inner.ambient;
        write!(f, "{}[{}]", a.field, a.vars.join(","))?;
        if !self.inner.defining.is_zero() {
            write!(f, "/{}", self.inner.defining)?;
        }
        Ok(())
    }
}

impl QuotientRing {
    pub fn new(ambient: &RingRef, relations: Vec<Polynomial>) -> Result<Self> {
        let defining = Ideal::new(ambient, relations)?;
        Ok(Self::from_ideal(defining))
    }

    pub fn from_ideal(defining: Ideal) -> Self {
        QuotientRing { inner: Arc::new(Inner { ambient: defining.ring().clone(), defining }) }
    }

    pub fn polynomial_ring(ambient: &RingRef) -> Self {
        Self::from_ideal(Ideal::zero(ambient))
    }

    pub fn ambient(&self) -> &RingRef {
        &self.inner.ambient
    }

    pub fn defining(&self) -> &Ideal {
        &self.inner.defining
    }

    pub fn same(&self, other: &QuotientRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (PolyRing::same(self.ambient(), other.ambient())
                && self.defining().equals(other.defining()).unwrap_or(false))
    }

    pub(crate) fn check_same(&self, other: &QuotientRing) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else if self.ambient().field != other.ambient().field {
            Err(AlgebraError::FieldMismatch)
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub(crate) fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if PolyRing::same(f.ring(), self.ambient()) {
            Ok(())
        } else if f.ring().field != self.ambient().field {
            Err(AlgebraError::FieldMismatch)
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// Krull dimension of `R`; `None` for the zero ring.
    pub fn dimension(&self) -> Option<usize> {
        self.defining().krull_dimension()
    }

    /// Lift of the `R`-ideal generated by `generators`: `(generators) + D` in `A`.
    pub fn lift(&self, generators: &[Polynomial]) -> Result<Ideal> {
        let mut gens = generators.to_vec();
        gens.extend(self.defining().generators().iter().cloned());
        Ok(Ideal::new(self.ambient(), gens)?.normalized())
    }

    pub fn ideal(&self, generators: Vec<Polynomial>) -> Result<RIdeal> {
        for g in &generators {
            self.check_poly(g)?;
        }
        Ok(RIdeal { ring: self.clone(), lifted: self.lift(&generators)? })
    }

    pub fn zero_ideal(&self) -> RIdeal {
        RIdeal { ring: self.clone(), lifted: self.defining().normalized() }
    }

    pub fn unit_ideal(&self) -> RIdeal {
        RIdeal { ring: self.clone(), lifted: Ideal::unit(self.ambient()) }
    }

    /// The ideal generated by the variables, i.e. the maximal ideal at the origin.
    pub fn maximal_ideal(&self) -> RIdeal {
        let gens = (0..self.ambient().nvars()).map(|i| Polynomial::var(self.ambient(), i)).collect();
        self.ideal(gens).expect("variables belong to the ambient ring")
    }

    /// Canonical representative of `f` modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.defining().normal_form(f).expect("ambient polynomial")
    }

    pub fn is_zero_element(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// `R / J` as a quotient of the same ambient ring.
    pub fn quotient_by(&self, j: &RIdeal) -> Result<QuotientRing> {
        self.check_same(&j.ring)?;
        Ok(Self::from_ideal(j.lifted.clone()))
    }

    /// Reinterprets an ideal of a ring with the same ambient ring as an ideal here.
    pub fn adopt(&self, i: &RIdeal) -> Result<RIdeal> {
        if !PolyRing::same(self.ambient(), i.ring.ambient()) {
            return Err(AlgebraError::RingMismatch);
        }
        self.ideal(i.lifted.generators().to_vec())
    }
}

/// Ideal of a [`QuotientRing`], represented by its lift to the ambient ring.
#[derive(Clone)]
pub struct RIdeal {
    ring: QuotientRing,
    lifted: Ideal,
}

impl fmt::Debug for RIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RIdeal{self}")
    }
}

impl fmt::Display for RIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.render()).collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

impl PartialEq for RIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl RIdeal {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Ambient ideal `I + D`.
    pub fn lifted(&self) -> &Ideal {
        &self.lifted
    }

    /// Canonical generators of `I/D`: the reduced Gröbner basis of the lift, minus the
    /// elements that already vanish in `R`.
    /// A generating set in R: the reduced basis of the lift, minus elements of the defining
    /// ideal and elements that the defining ideal and the remaining generators already produce.
    pub fn generators(&self) -> Vec<Polynomial> {
        let defining = self.ring.defining();
        let mut gens: Vec<Polynomial> =
            self.lifted.groebner().iter().filter(|g| !defining.contains(g).unwrap_or(false)).cloned().collect();
        for k in (0..gens.len()).rev() {
            let mut rest: Vec<Polynomial> = defining.generators().to_vec();
            rest.extend(gens.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()));
            let redundant = Ideal::new(defining.ring(), rest).and_then(|i| i.contains(&gens[k])).unwrap_or(false);
            if redundant {
                gens.remove(k);
            }
        }
        gens
    }

    fn wrap(&self, lifted: Ideal) -> RIdeal {
        RIdeal { ring: self.ring.clone(), lifted }
    }

    pub fn is_zero(&self) -> bool {
        self.ring.defining().contains_ideal(&self.lifted).unwrap_or(false)
    }

    pub fn is_unit(&self) -> bool {
        self.lifted.is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_poly(f)?;
        self.lifted.contains(f)
    }

    pub fn contains_ideal(&self, other: &RIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        self.lifted.contains_ideal(&other.lifted)
    }

    /// Canonical generators of `other` that do not lie in `self`.
    pub fn missing_from(&self, other: &RIdeal) -> Result<Vec<Polynomial>> {
        self.ring.check_same(&other.ring)?;
        Ok(other.generators().into_iter().filter(|g| !self.lifted.contains(g).unwrap_or(false)).collect())
    }

    pub fn equals(&self, other: &RIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        self.lifted.equals(&other.lifted)
    }

    pub fn sum(&self, other: &RIdeal) -> Result<RIdeal> {
        self.ring.check_same(&other.ring)?;
        Ok(self.wrap(self.lifted.sum(&other.lifted)?))
    }

    /// Product in `R`: ambient product of the lifts, plus `D`.
    pub fn product(&self, other: &RIdeal) -> Result<RIdeal> {
        self.ring.check_same(&other.ring)?;
        let p = self.lifted.product(&other.lifted)?;
        Ok(self.wrap(p.sum(self.ring.defining())?))
    }

    pub fn power(&self, k: u32) -> RIdeal {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersection(&self, other: &RIdeal) -> Result<RIdeal> {
        self.ring.check_same(&other.ring)?;
        Ok(self.wrap(self.lifted.intersection(&other.lifted)?))
    }

    /// `I :_R J`, computed as `(I + D) : (J + D)` in the ambient ring.
    pub fn colon(&self, other: &RIdeal) -> Result<RIdeal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroColon);
        }
        Ok(self.wrap(self.lifted.colon(&other.lifted)?))
    }

    pub fn colon_element(&self, f: &Polynomial) -> Result<RIdeal> {
        self.ring.check_poly(f)?;
        if self.ring.is_zero_element(f) {
            return Err(AlgebraError::ZeroColon);
        }
        Ok(self.wrap(self.lifted.colon_element(f)?))
    }

    /// Dimension of `R / I`; `None` when `I` is the unit ideal.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.lifted.krull_dimension()
    }
}
