//! Veronese subrings `k[x^d, x^{d-1}y, ..., y^d]` in two independent models.
//!
//! [`SemigroupRing`] works with monomial ideals as sets of exponent pairs and never builds a
//! polynomial. [`ToricVeronese`] presents the same ring as `k[t_0..t_d]` modulo the 2x2 minors
//! of `[[t_0..t_{d-1}], [t_1..t_d]]`, with `t_j = x^{d-j} y^j`, and runs the general
//! Gröbner machinery on it.

use std::collections::BTreeSet;
use std::fmt;

use crate::closure::{closure_of_ideal, ClosureSpec};
use crate::error::{AlgebraError, Result};
use crate::poly::{Field, Monomial, PolyRing, Polynomial};
use crate::quotient::{QuotientRing, RIdeal};

use super::{RationalityVerdict, MCM_NOTE};

pub type Exponent = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupRing {
    pub d: u32,
}

/// Monomial ideal of the Veronese ring, kept as its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupIdeal {
    d: u32,
    gens: BTreeSet<Exponent>,
}

fn divides(a: Exponent, b: Exponent) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn minimalize(set: BTreeSet<Exponent>) -> BTreeSet<Exponent> {
    set.iter().copied().filter(|&u| !set.iter().any(|&v| v != u && divides(v, u))).collect()
}

impl SemigroupRing {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(AlgebraError::OutOfRange("Veronese degree must be at least 1".into()));
        }
        Ok(SemigroupRing { d })
    }

    pub fn contains(&self, e: Exponent) -> bool {
        (e.0 + e.1).is_multiple_of(self.d)
    }

    pub fn ideal(&self, gens: impl IntoIterator<Item = Exponent>) -> Result<SemigroupIdeal> {
        let gens: BTreeSet<Exponent> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|e| !self.contains(**e)) {
            return Err(AlgebraError::OutOfRange(format!(
                "x^{}*y^{} is not in the degree {} Veronese",
                bad.0, bad.1, self.d
            )));
        }
        Ok(SemigroupIdeal { d: self.d, gens: minimalize(gens) })
    }

    /// `(x^d, y^d)`.
    pub fn parameter_ideal(&self) -> SemigroupIdeal {
        self.ideal([(self.d, 0), (0, self.d)]).unwrap()
    }

    /// `M_i` viewed as the ideal `(x^d, x^{d-1}y, ..., x^{d-i}y^i)`.
    pub fn module_ideal(&self, i: u32) -> Result<SemigroupIdeal> {
        if i >= self.d {
            return Err(AlgebraError::OutOfRange(format!("need 0 <= i <= {}, got {i}", self.d - 1)));
        }
        self.ideal((0..=i).map(|j| (self.d - j, j)))
    }

    pub fn maximal_ideal(&self) -> SemigroupIdeal {
        self.ideal((0..=self.d).map(|j| (self.d - j, j))).unwrap()
    }
}

impl SemigroupIdeal {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn generators(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.gens.iter().copied()
    }

    /// Membership of a semigroup monomial: divisibility by a generator. The quotient has
    /// degree divisible by `d`, so it lies in the semigroup.
    pub fn contains(&self, e: Exponent) -> bool {
        self.gens.iter().any(|&g| divides(g, e))
    }

    pub fn contains_ideal(&self, other: &SemigroupIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    pub fn equals(&self, other: &SemigroupIdeal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn product(&self, other: &SemigroupIdeal) -> SemigroupIdeal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| (a.0 + b.0, a.1 + b.1))).collect();
        SemigroupIdeal { d: self.d, gens: minimalize(gens) }
    }

    /// `self :_R other`: the monomial colon in `k[x,y]`, then truncated back to the semigroup.
    pub fn colon(&self, other: &SemigroupIdeal) -> SemigroupIdeal {
        let mut acc: Option<BTreeSet<Exponent>> = None;
        for v in &other.gens {
            let part: BTreeSet<Exponent> =
                minimalize(self.gens.iter().map(|u| (u.0.saturating_sub(v.0), u.1.saturating_sub(v.1))).collect());
            acc = Some(match acc {
                None => part,
                Some(prev) => minimalize(
                    prev.iter().flat_map(|a| part.iter().map(move |b| (a.0.max(b.0), a.1.max(b.1)))).collect(),
                ),
            });
        }
        let ambient = acc.unwrap_or_else(|| BTreeSet::from([(0, 0)]));
        SemigroupIdeal { d: self.d, gens: minimalize(truncate(&ambient, self.d)) }
    }
}

/// Replaces each `u` of degree `≢ 0 mod d` by `u` times all monomials of degree
/// `d - (deg u mod d)`.
fn truncate(gens: &BTreeSet<Exponent>, d: u32) -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for &(a, b) in gens {
        let r = (a + b) % d;
        if r == 0 {
            out.insert((a, b));
        } else {
            let fill = d - r;
            out.extend((0..=fill).map(|j| (a + fill - j, b + j)));
        }
    }
    out
}

pub fn render_exponent((a, b): Exponent) -> String {
    match (a, b) {
        (0, 0) => "1".into(),
        (a, 0) => power("x", a),
        (0, b) => power("y", b),
        (a, b) => format!("{}*{}", power("x", a), power("y", b)),
    }
}

fn power(v: &str, e: u32) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // descending lex in x, matching how polynomials render
        let parts: Vec<String> = self.gens.iter().rev().map(|&e| render_exponent(e)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `cl_{M_i}` of `(x^d, y^d)`, i.e. `(I I_i :_R I_i)`.
pub fn veronese_closure(d: u32, i: u32) -> Result<SemigroupIdeal> {
    let r = SemigroupRing::new(d)?;
    let ii = r.module_ideal(i)?;
    Ok(r.parameter_ideal().product(&ii).colon(&ii))
}

pub fn veronese_rationality(d: u32, i: u32) -> Result<RationalityVerdict> {
    let r = SemigroupRing::new(d)?;
    let ii = r.module_ideal(i)?;
    let ideal = r.parameter_ideal();
    let cl = ideal.product(&ii).colon(&ii);
    let witness = cl.generators().find(|&e| !ideal.contains(e));
    let certificate = witness.map(|w| {
        let products: Vec<String> = ii.generators().map(|g| render_exponent((w.0 + g.0, w.1 + g.1))).collect();
        debug_assert!(ii.generators().all(|g| ideal.product(&ii).contains((w.0 + g.0, w.1 + g.1))));
        format!("{} * I_{i} = ({}) lies in I * I_{i}", render_exponent(w), products.join(", "))
    });
    Ok(RationalityVerdict {
        ring: format!("Veronese subring of k[x,y] in degree {d}"),
        spec: format!("cl_B, B = M_{i} = {ii}"),
        sop: vec![render_exponent((d, 0)), render_exponent((0, d))],
        closed: witness.is_none(),
        closure_ideal: cl.generators().collect::<Vec<_>>().into_iter().rev().map(render_exponent).collect(),
        witness: witness.map(render_exponent),
        witness_membership_certificate: certificate,
        assumption_notes: vec![
            MCM_NOTE.to_string(),
            "rationality read off the single parameter ideal (x^d, y^d)".to_string(),
        ],
    })
}

/// Whether `(x^d, y^d) I_{d-1} = m_R I_{d-1}`, the identity forcing `m_R ⊆ I^cl`.
pub fn veronese_product_display(d: u32) -> Result<bool> {
    let r = SemigroupRing::new(d)?;
    let top = r.module_ideal(d - 1)?;
    Ok(r.parameter_ideal().product(&top).equals(&r.maximal_ideal().product(&top)))
}

/// The Veronese ring as a toric quotient of `k[t_0..t_d]`.
#[derive(Clone, Debug)]
pub struct ToricVeronese {
    pub d: u32,
    pub ring: QuotientRing,
}

impl ToricVeronese {
    pub fn new(field: Field, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(AlgebraError::OutOfRange("Veronese degree must be at least 1".into()));
        }
        let names: Vec<String> = (0..=d).map(|j| format!("t{j}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let ambient = PolyRing::with_vars(field, &refs);
        let t = |j: u32| Polynomial::var(&ambient, j as usize);
        let mut minors = Vec::new();
        for a in 0..d {
            for b in (a + 1)..d {
                minors.push(&(&t(a) * &t(b + 1)) - &(&t(a + 1) * &t(b)));
            }
        }
        Ok(ToricVeronese { d, ring: QuotientRing::new(&ambient, minors)? })
    }

    /// A `t`-monomial representing `x^a y^b`.
    pub fn lift_exponent(&self, (a, b): Exponent) -> Result<Polynomial> {
        if (a + b) % self.d != 0 {
            return Err(AlgebraError::OutOfRange(format!("{} is not in the semigroup", render_exponent((a, b)))));
        }
        let mut exps = vec![0u32; self.d as usize + 1];
        let mut rest = b;
        for _ in 0..(a + b) / self.d {
            let j = rest.min(self.d);
            exps[j as usize] += 1;
            rest -= j;
        }
        Ok(Polynomial::monomial(self.ring.ambient(), Monomial::new(exps)))
    }

    pub fn lift_ideal(&self, ideal: &SemigroupIdeal) -> Result<RIdeal> {
        let gens = ideal.generators().map(|e| self.lift_exponent(e)).collect::<Result<Vec<_>>>()?;
        self.ring.ideal(gens)
    }

    pub fn parameters(&self) -> Vec<Polynomial> {
        vec![Polynomial::var(self.ring.ambient(), 0), Polynomial::var(self.ring.ambient(), self.d as usize)]
    }

    pub fn module_ideal(&self, i: u32) -> Result<RIdeal> {
        if i >= self.d {
            return Err(AlgebraError::OutOfRange(format!("need 0 <= i <= {}, got {i}", self.d - 1)));
        }
        self.ring.ideal((0..=i).map(|j| Polynomial::var(self.ring.ambient(), j as usize)).collect())
    }

    pub fn spec(&self, i: u32) -> Result<ClosureSpec> {
        Ok(ClosureSpec::ModuleIdeal(self.module_ideal(i)?))
    }

    /// `cl_{M_i}((t_0, t_d))` through Gröbner bases.
    pub fn closure(&self, i: u32) -> Result<RIdeal> {
        let ideal = self.ring.ideal(self.parameters())?;
        closure_of_ideal(&ideal, &self.spec(i)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_fills_up_to_the_next_multiple() {
        let got = truncate(&BTreeSet::from([(1, 0)]), 3);
        assert_eq!(got, BTreeSet::from([(3, 0), (2, 1), (1, 2)]));
    }

    #[test]
    fn veronese_five() {
        assert!(veronese_rationality(5, 3).unwrap().closed);
        let v = veronese_rationality(5, 4).unwrap();
        assert!(!v.closed);
        for e in ["x^4*y", "x^3*y^2", "x^2*y^3", "x*y^4"] {
            assert!(v.closure_ideal.iter().any(|g| g == e), "{e} missing from {:?}", v.closure_ideal);
        }
        assert!(veronese_rationality(1, 0).unwrap().closed);
        assert!(veronese_rationality(5, 5).is_err());
    }

    #[test]
    fn display_identity() {
        for d in 1..=6 {
            assert!(veronese_product_display(d).unwrap());
        }
    }

    #[test]
    fn toric_lift_is_consistent() {
        let t = ToricVeronese::new(Field::Prime(32003), 3).unwrap();
        assert_eq!(t.ring.dimension(), Some(2));
        assert_eq!(t.lift_exponent((2, 4)).unwrap().render(), "t1*t3");
        assert!(t.lift_exponent((1, 1)).is_err());
    }

    #[test]
    fn ideal_rejects_non_semigroup_exponents() {
        assert!(SemigroupRing::new(3).unwrap().ideal([(1, 1)]).is_err());
    }
}
