//! Seeded random monomial ideals for property sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::poly::{Monomial, Polynomial};
use crate::quotient::{QuotientRing, RIdeal};

#[derive(Clone, Copy, Debug)]
pub struct SampleShape {
    pub max_generators: usize,
    pub max_degree: u32,
}

impl Default for SampleShape {
    fn default() -> Self {
        SampleShape { max_generators: 3, max_degree: 3 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial of total degree in `1..=max_degree`.
pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(1..=max_degree.max(1));
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

fn random_generators<R: Rng>(rng: &mut R, ring: &QuotientRing, shape: SampleShape) -> Vec<Polynomial> {
    let n = ring.ambient().nvars();
    let count = rng.gen_range(1..=shape.max_generators.max(1));
    (0..count).map(|_| Polynomial::monomial(ring.ambient(), random_monomial(rng, n, shape.max_degree))).collect()
}

pub fn random_monomial_ideal<R: Rng>(rng: &mut R, ring: &QuotientRing, shape: SampleShape) -> Result<RIdeal> {
    ring.ideal(random_generators(rng, ring, shape))
}

/// `I ⊆ I'` with `I'` obtained from `I` by adjoining further random monomials.
pub fn random_nested_pair<R: Rng>(rng: &mut R, ring: &QuotientRing, shape: SampleShape) -> Result<(RIdeal, RIdeal)> {
    let small = random_generators(rng, ring, shape);
    let mut large = small.clone();
    large.extend(random_generators(rng, ring, shape));
    Ok((ring.ideal(small)?, ring.ideal(large)?))
}

pub fn monomial_ideals(ring: &QuotientRing, seed: u64, count: usize, shape: SampleShape) -> Result<Vec<RIdeal>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_monomial_ideal(&mut r, ring, shape)).collect()
}

pub fn nested_pairs(ring: &QuotientRing, seed: u64, count: usize, shape: SampleShape) -> Result<Vec<(RIdeal, RIdeal)>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_nested_pair(&mut r, ring, shape)).collect()
}
