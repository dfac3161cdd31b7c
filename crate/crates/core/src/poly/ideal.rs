use std::fmt;
use std::sync::OnceLock;

use super::groebner::{buchberger, leading_monomials, normal_form, same_basis};
use super::monomial::MonomialOrder;
use super::polynomial::{PolyRing, Polynomial, RingRef};
use crate::error::{AlgebraError, Result};

/// Ideal of an ambient polynomial ring, with a lazily computed reduced Gröbner basis
/// under the ring's order.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    groebner: OnceLock<Vec<Polynomial>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.render()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !PolyRing::same(g.ring(), ring) {
                return Err(if g.ring().field != ring.field {
                    AlgebraError::FieldMismatch
                } else {
                    AlgebraError::RingMismatch
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, groebner: OnceLock::new() })
    }

    fn from_reduced_basis(ring: &RingRef, basis: Vec<Polynomial>) -> Self {
        let groebner = OnceLock::new();
        let _ = groebner.set(basis.clone());
        Ideal { ring: ring.clone(), generators: basis, groebner }
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::from_reduced_basis(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::from_reduced_basis(ring, vec![Polynomial::one(ring)])
    }

    pub fn principal(f: &Polynomial) -> Self {
        Ideal::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis; computed once.
    pub fn groebner(&self) -> &[Polynomial] {
        self.groebner.get_or_init(|| buchberger(&self.generators).expect("generators share the ring"))
    }

    /// Same ideal with its generators replaced by the reduced Gröbner basis.
    pub fn normalized(&self) -> Ideal {
        Self::from_reduced_basis(&self.ring, self.groebner().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.groebner(), [g] if g.is_constant())
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if PolyRing::same(f.ring(), &self.ring) {
            Ok(())
        } else if f.ring().field != self.ring.field {
            Err(AlgebraError::FieldMismatch)
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else if other.ring.field != self.ring.field {
            Err(AlgebraError::FieldMismatch)
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        Ok(normal_form(f, self.groebner()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        Ok(other.generators.iter().all(|g| normal_form(g, self.groebner()).is_zero()))
    }

    /// Generators of `other` that do not lie in `self`.
    pub fn missing_from(&self, other: &Ideal) -> Result<Vec<Polynomial>> {
        self.check_ideal(other)?;
        Ok(other.groebner().iter().filter(|g| !normal_form(g, self.groebner()).is_zero()).cloned().collect())
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        Ok(same_basis(self.groebner(), other.groebner()))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(Ideal::new(&self.ring, gens)?.normalized())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ok(Ideal::new(&self.ring, gens)?.normalized())
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.normalized());
        }
        if other.is_unit() {
            return Ok(self.normalized());
        }
        let n = self.ring.nvars();
        let mut vars = vec!["_t".to_string()];
        vars.extend(self.ring.vars.iter().cloned());
        let ext = PolyRing::new(self.ring.field.clone(), vars, MonomialOrder::Elimination { block: 1 });
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.map_into(&ext, &shift));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_into(&ext, &shift));
        }
        let gb = buchberger(&gens)?;
        let mut back = vec![0usize];
        back.extend(0..n);
        let eliminated: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| g.map_into(&self.ring, &back))
            .collect();
        Ok(Ideal::new(&self.ring, eliminated)?.normalized())
    }

    /// `I : (f)`, computed as `(I ∩ (f)) / f`.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(AlgebraError::ZeroColon);
        }
        if self.contains(f)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let meet = self.intersection(&Ideal::principal(f))?;
        let quotients =
            meet.generators.iter().map(|g| g.exact_div(f).expect("elements of (f) are divisible by f")).collect();
        Ok(Ideal::new(&self.ring, quotients)?.normalized())
    }

    /// `I : J = {r : rJ ⊆ I}` as the intersection of `I : g` over generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroColon);
        }
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.generators {
            let part = self.colon_element(g)?;
            acc = acc.intersection(&part)?;
        }
        Ok(acc)
    }

    /// Krull dimension of `k[x]/I` from the leading-term ideal: the largest set of
    /// variables containing the support of no leading monomial. `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let n = self.ring.nvars();
        let supports: Vec<u64> = leading_monomials(self.groebner())
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        let best = (0u64..(1u64 << n))
            .filter(|set| supports.iter().all(|s| s & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Some(best)
    }
}
