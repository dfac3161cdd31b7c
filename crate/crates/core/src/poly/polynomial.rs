use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed};

use super::field::{Field, Scalar};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{AlgebraError, Result};

/// Ambient polynomial ring `k[x_1, ..., x_n]` together with its active term order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

pub type Term = (Monomial, Scalar);

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> RingRef {
        Arc::new(PolyRing { field, vars, order })
    }

    /// Ring over the given field with grevlex order and variables named by `names`.
    pub fn with_vars(field: Field, names: &[&str]) -> RingRef {
        Self::new(field, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::GRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

/// A polynomial with exact coefficients. Terms are sorted strictly descending
/// under the ring's order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, ring.field.from_i64(n))
    }

    pub fn term(ring: &RingRef, m: Monomial, c: Scalar) -> Self {
        let terms = if ring.field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &RingRef, m: Monomial) -> Self {
        Self::term(ring, m, ring.field.one())
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index))
    }

    /// Normalizes an arbitrary list of terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, mut raw: Vec<Term>) -> Self {
        let order = ring.order;
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.field.add(lc, &c),
                _ => terms.push((m, c)),
            }
            if let Some((_, lc)) = terms.last() {
                if ring.field.is_zero(lc) {
                    terms.pop();
                }
            }
        }
        terms.retain(|(_, c)| !ring.field.is_zero(c));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ring.order.cmp(a, b)
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(PolyRing::same(&self.ring, &other.ring), "polynomials from different rings");
    }

    pub fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else if self.ring.field != other.ring.field {
            Err(AlgebraError::FieldMismatch)
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// `self + coeff * mono * other`, merging the two sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, mono: &Monomial, coeff: &Scalar) -> Polynomial {
        self.assert_same_ring(other);
        let field = &self.ring.field;
        if field.is_zero(coeff) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| (m.mul(mono), field.mul(c, coeff))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match self.cmp_mono(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = field.add(ca, &cb);
                        if !field.is_zero(&c) {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &Scalar) -> Polynomial {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), field.mul(a, c))).collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let field = &self.ring.field;
        let lc_inv = field.inv(lc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = lm.quotient(&m)?;
            let qc = field.mul(&c, &lc_inv);
            rem = rem.add_scaled(divisor, &q, &field.neg(&qc));
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Reinterprets the polynomial in `target`, sending variable `i` to variable `var_map[i]`.
    pub fn map_into(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        assert_eq!(self.ring.field, target.field, "field mismatch");
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same polynomial in a ring that differs only by its term order.
    pub fn reorder(&self, target: &RingRef) -> Polynomial {
        let ident: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(target, &ident)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let q = self.ring.field.signed_repr(c);
            let neg = q.is_negative();
            let abs = q.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff =
                if abs.is_integer() { abs.numer().to_string() } else { format!("{}/{}", abs.numer(), abs.denom()) };
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                    out.push('*');
                }
                out.push_str(&m.render(&self.ring.vars));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let one = self.ring.field.one();
        self.add_scaled(rhs, &Monomial::one(self.ring.nvars()), &one)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let m1 = self.ring.field.from_i64(-1);
        self.add_scaled(rhs, &Monomial::one(self.ring.nvars()), &m1)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field.from_i64(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            acc = acc.add_scaled(rhs, m, c);
        }
        acc
    }
}
