#![allow(dead_code)]

use closure_lab_core::poly::{parse_polynomial, Field, Monomial, PolyRing, Polynomial, Scalar};
use closure_lab_core::quotient::{QuotientRing, RIdeal};
use proptest::prelude::*;

pub fn k() -> Field {
    Field::Prime(32003)
}

pub fn ring(vars: &[&str], rels: &[&str]) -> QuotientRing {
    let a = PolyRing::with_vars(k(), vars);
    QuotientRing::new(&a, rels.iter().map(|s| parse_polynomial(&a, s).unwrap()).collect()).unwrap()
}

pub fn p(r: &QuotientRing, s: &str) -> Polynomial {
    parse_polynomial(r.ambient(), s).unwrap()
}

pub fn ps(r: &QuotientRing, srcs: &[&str]) -> Vec<Polynomial> {
    srcs.iter().map(|s| p(r, s)).collect()
}

pub fn id(r: &QuotientRing, gens: &[&str]) -> RIdeal {
    r.ideal(ps(r, gens)).unwrap()
}

/// Small dense-ish polynomials: up to `terms` terms of degree at most `deg`, coefficients in -3..=3.
pub fn arb_poly(r: &QuotientRing, nvars: usize, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let a = r.ambient().clone();
    prop::collection::vec((prop::collection::vec(0..=deg, nvars), -3i64..=3), 0..=terms).prop_map(move |raw| {
        let f = a.field.clone();
        let terms: Vec<(Monomial, Scalar)> = raw
            .into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= deg)
            .map(|(e, c)| (Monomial::new(e), f.from_i64(c)))
            .collect();
        Polynomial::from_terms(&a, terms)
    })
}

pub fn arb_monomial(r: &QuotientRing, nvars: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    let a = r.ambient().clone();
    prop::collection::vec(0..=deg, nvars)
        .prop_filter("nonconstant", |e| e.iter().sum::<u32>() > 0)
        .prop_map(move |e| Polynomial::monomial(&a, Monomial::new(e)))
}
