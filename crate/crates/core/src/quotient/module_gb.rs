//! Gröbner bases for submodules of a free module `A^r` over the ambient polynomial ring,
//! under the position-over-term order with `e_1 > e_2 > ... > e_r`.
//!
//! Under this order the leading term of a vector sits in its first nonzero coordinate,
//! so a basis restricted to leading position `>= k` generates the intersection of the
//! submodule with the span of `e_k, ..., e_r`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::poly::{Monomial, Polynomial, RingRef, Scalar};

pub type Vector = Vec<Polynomial>;

pub fn zero_vector(ring: &RingRef, rank: usize) -> Vector {
    vec![Polynomial::zero(ring); rank]
}

pub fn is_zero(v: &[Polynomial]) -> bool {
    v.iter().all(|p| p.is_zero())
}

/// Leading position and leading term.
pub fn lead(v: &[Polynomial]) -> Option<(usize, &Monomial, &Scalar)> {
    v.iter().enumerate().find(|(_, p)| !p.is_zero()).map(|(i, p)| {
        let (m, c) = p.leading_term().unwrap();
        (i, m, c)
    })
}

/// `v + coeff * mono * w`.
pub fn add_scaled(v: &[Polynomial], w: &[Polynomial], mono: &Monomial, coeff: &Scalar) -> Vector {
    v.iter().zip(w).map(|(a, b)| a.add_scaled(b, mono, coeff)).collect()
}

pub fn scale(v: &[Polynomial], f: &Polynomial) -> Vector {
    v.iter().map(|a| a * f).collect()
}

fn monic(v: &[Polynomial]) -> Vector {
    match lead(v) {
        None => v.to_vec(),
        Some((_, _, c)) => {
            let field = v[0].field().clone();
            let inv = field.inv(c).unwrap();
            v.iter().map(|p| p.scale(&inv)).collect()
        }
    }
}

fn cmp_lead(a: &[Polynomial], b: &[Polynomial]) -> Ordering {
    let (pa, ma, _) = lead(a).unwrap();
    let (pb, mb, _) = lead(b).unwrap();
    let order = a[pa].ring().order;
    pb.cmp(&pa).then_with(|| order.cmp(ma, mb))
}

/// Full reduction of `v` by `basis`; zero iff `v` lies in the submodule when `basis` is a
/// Gröbner basis.
pub fn normal_form(v: &[Polynomial], basis: &[Vector]) -> Vector {
    let mut rest = v.to_vec();
    let Some(ring) = v.first().map(|p| p.ring().clone()) else {
        return rest;
    };
    let field = ring.field.clone();
    let mut remainder = zero_vector(&ring, v.len());
    while let Some((pos, m, c)) = lead(&rest).map(|(p, m, c)| (p, m.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let (gp, gm, gc) = lead(g)?;
            if gp == pos {
                gm.quotient(&m).map(|q| (g, q, gc.clone()))
            } else {
                None
            }
        });
        match divisor {
            Some((g, q, gc)) => {
                let factor = field.neg(&field.div(&c, &gc).unwrap());
                rest = add_scaled(&rest, g, &q, &factor);
            }
            None => {
                let term = Polynomial::term(&ring, m, c);
                remainder[pos] = &remainder[pos] + &term;
                rest[pos] = &rest[pos] - &term;
            }
        }
    }
    remainder
}

fn s_vector(f: &[Polynomial], g: &[Polynomial]) -> Vector {
    let field = f[0].field().clone();
    let (_, fm, fc) = lead(f).unwrap();
    let (_, gm, gc) = lead(g).unwrap();
    let l = fm.lcm(gm);
    let zero = zero_vector(f[0].ring(), f.len());
    let a = add_scaled(&zero, f, &fm.quotient(&l).unwrap(), &field.inv(fc).unwrap());
    let minus_inv = field.neg(&field.inv(gc).unwrap());
    add_scaled(&a, g, &gm.quotient(&l).unwrap(), &minus_inv)
}

/// Reduced Gröbner basis of the submodule generated by `generators` (all of one rank).
pub fn module_groebner(generators: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for g in generators {
        let h = normal_form(g, &basis);
        if !is_zero(&h) {
            basis.push(monic(&h));
        }
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let pos = |v: &Vector| lead(v).unwrap().0;
    let lm = |v: &Vector| lead(v).unwrap().1.clone();
    for j in 0..basis.len() {
        for i in 0..j {
            if pos(&basis[i]) == pos(&basis[j]) {
                pending.insert((i, j));
            }
        }
    }
    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
        let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
        let order = basis[a.0][0].ring().order;
        pos(&basis[b.0]).cmp(&pos(&basis[a.0])).then(order.cmp(&la, &lb)).then(a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let p = pos(&basis[i]);
        let l = lm(&basis[i]).lcm(&lm(&basis[j]));
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && pos(&basis[k]) == p
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_vector(&basis[i], &basis[j]), &basis);
        if is_zero(&h) {
            continue;
        }
        let n = basis.len();
        let h = monic(&h);
        let hp = pos(&h);
        basis.push(h);
        for k in 0..n {
            if pos(&basis[k]) == hp {
                pending.insert((k, n));
            }
        }
    }
    reduce(basis)
}

fn reduce(basis: Vec<Vector>) -> Vec<Vector> {
    let mut minimal: Vec<Vector> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let (gp, gm, _) = lead(g).unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let (hp, hm, _) = lead(h).unwrap();
            l != k && hp == gp && hm.divides(gm) && (hm != gm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Vector> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Vector> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, v)| v.clone()).collect();
            monic(&normal_form(&minimal[k], &others))
        })
        .collect();
    reduced.sort_by(|a, b| cmp_lead(b, a));
    reduced
}
