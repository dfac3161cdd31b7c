//! Buchberger's algorithm with the coprime and chain criteria, producing reduced bases.

use std::collections::BTreeSet;

use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial, RingRef};
use crate::error::Result;

/// Fully reduces `f` modulo `basis`. When `basis` is a Gröbner basis the result is the
/// unique remainder, and it is zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field.clone();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let divisor = basis
            .iter()
            .filter(|g| !g.is_zero())
            .find_map(|g| g.leading_monomial().unwrap().quotient(&m).map(|q| (g, q)));
        match divisor {
            Some((g, q)) => {
                let factor = field.neg(&field.div(&c, g.leading_coeff().unwrap()).unwrap());
                rest = rest.add_scaled(g, &q, &factor);
            }
            None => {
                remainder.push((m.clone(), c.clone()));
                rest = rest.add_scaled(&Polynomial::one(&ring), &m, &field.neg(&c));
            }
        }
    }
    Polynomial::from_terms(&ring, remainder)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field().clone();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient(&l).unwrap(), &field.inv(fc).unwrap());
    let b = g.mul_term(&gm.quotient(&l).unwrap(), &field.inv(gc).unwrap());
    &a - &b
}

fn check_rings(generators: &[Polynomial]) -> Result<Option<RingRef>> {
    let Some(first) = generators.first() else {
        return Ok(None);
    };
    for g in &generators[1..] {
        first.check_same_ring(g)?;
    }
    Ok(Some(first.ring().clone()))
}

/// Reduced Gröbner basis of the ideal generated by `generators`, under the order of
/// their common ring. The zero ideal gives `[]`, the unit ideal `[1]`, and the result
/// is sorted by descending leading monomial.
pub fn buchberger(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let Some(ring) = check_rings(generators)? else {
        return Ok(Vec::new());
    };
    let order = ring.order;

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        let h = normal_form(g, &basis);
        if !h.is_zero() {
            basis.push(h.monic());
        }
    }
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(vec![Polynomial::one(&ring)]);
    }

    // Normal selection strategy: always process the pair with the smallest lcm.
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    let lm = |p: &Polynomial| p.leading_monomial().unwrap().clone();

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
                let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        let n = basis.len();
        basis.push(h.monic());
        for k in 0..n {
            pending.insert((k, n));
        }
    }

    Ok(reduce_basis(basis))
}

/// Turns a Gröbner basis into the reduced one: minimal leading terms, fully
/// interreduced tails, monic, sorted descending.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            l != k && hm.divides(m) && (hm != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p.clone()).collect();
            normal_form(&minimal[k], &others).monic()
        })
        .collect();
    if let Some(first) = reduced.first() {
        let order = first.ring().order;
        reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    }
    reduced
}

/// Leading monomials of a basis.
pub fn leading_monomials(basis: &[Polynomial]) -> Vec<Monomial> {
    basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
}

/// Two reduced bases describe the same ideal iff they coincide term by term.
pub fn same_basis(a: &[Polynomial], b: &[Polynomial]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| PolyRing::same(p.ring(), q.ring()) && p.terms() == q.terms())
}
