use std::fmt;
use std::sync::OnceLock;

use super::module_gb::{self, lead, module_groebner, Vector};
use super::ring::{QuotientRing, RIdeal};
use crate::error::{AlgebraError, Result};
use crate::poly::{PolyRing, Polynomial};

fn render_vector(v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.render()).collect();
    format!("[{}]", parts.join(", "))
}

/// Element of the free module `R^r`, stored through ambient representatives.
#[derive(Clone, Debug)]
pub struct FreeModuleElement {
    ring: QuotientRing,
    coords: Vector,
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_vector(&self.coords))
    }
}

impl FreeModuleElement {
    pub fn new(ring: &QuotientRing, coords: Vec<Polynomial>) -> Result<Self> {
        for c in &coords {
            ring.check_poly(c)?;
        }
        Ok(FreeModuleElement { ring: ring.clone(), coords })
    }

    pub fn zero(ring: &QuotientRing, rank: usize) -> Self {
        FreeModuleElement { ring: ring.clone(), coords: module_gb::zero_vector(ring.ambient(), rank) }
    }

    /// The standard basis vector `e_j` (0-based).
    pub fn basis(ring: &QuotientRing, rank: usize, j: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.coords[j] = Polynomial::one(ring.ambient());
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        FreeModuleElement { ring: self.ring.clone(), coords: module_gb::scale(&self.coords, f) }
    }

    pub fn add(&self, other: &FreeModuleElement) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        FreeModuleElement { ring: self.ring.clone(), coords }
    }

    /// Zero in `R^r`, i.e. every coordinate lies in the defining ideal.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| self.ring.is_zero_element(c))
    }
}

/// Submodule of `R^r` given by generators. Its module Gröbner basis is taken over the
/// ambient ring, after adding `D * e_i` for every defining relation `D`.
#[derive(Clone)]
pub struct Submodule {
    ring: QuotientRing,
    rank: usize,
    generators: Vec<Vector>,
    groebner: OnceLock<Vec<Vector>>,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| render_vector(g)).collect();
        write!(f, "Submodule(rank {}, <{}>)", self.rank, gens.join(", "))
    }
}

impl Submodule {
    pub fn new(ring: &QuotientRing, rank: usize, generators: Vec<FreeModuleElement>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            ring.check_same(&g.ring)?;
            if g.rank() != rank {
                return Err(AlgebraError::RankMismatch { expected: rank, found: g.rank() });
            }
            gens.push(g.coords);
        }
        Ok(Self::from_vectors(ring, rank, gens))
    }

    pub(crate) fn from_vectors(ring: &QuotientRing, rank: usize, generators: Vec<Vector>) -> Self {
        Submodule { ring: ring.clone(), rank, generators, groebner: OnceLock::new() }
    }

    /// `I * R^r`.
    pub fn ideal_multiple(ideal: &RIdeal, rank: usize) -> Self {
        let ring = ideal.ring().clone();
        let mut gens = Vec::new();
        for g in ideal.lifted().generators() {
            for j in 0..rank {
                let mut v = module_gb::zero_vector(ring.ambient(), rank);
                v[j] = g.clone();
                gens.push(v);
            }
        }
        Self::from_vectors(&ring, rank, gens)
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> Vec<FreeModuleElement> {
        self.generators.iter().map(|c| FreeModuleElement { ring: self.ring.clone(), coords: c.clone() }).collect()
    }

    fn lifted_generators(&self) -> Vec<Vector> {
        let mut gens = self.generators.clone();
        let ambient = self.ring.ambient();
        for d in self.ring.defining().groebner() {
            for j in 0..self.rank {
                let mut v = module_gb::zero_vector(ambient, self.rank);
                v[j] = d.clone();
                gens.push(v);
            }
        }
        gens
    }

    /// Position-over-term Gröbner basis of the lifted submodule.
    pub fn groebner(&self) -> &[Vector] {
        self.groebner.get_or_init(|| module_groebner(&self.lifted_generators()))
    }

    fn check_element(&self, v: &FreeModuleElement) -> Result<()> {
        self.ring.check_same(&v.ring)?;
        if v.rank() != self.rank {
            return Err(AlgebraError::RankMismatch { expected: self.rank, found: v.rank() });
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check_element(v)?;
        Ok(FreeModuleElement { ring: self.ring.clone(), coords: module_gb::normal_form(&v.coords, self.groebner()) })
    }

    pub fn contains(&self, v: &FreeModuleElement) -> Result<bool> {
        Ok(module_gb::is_zero(&self.normal_form(v)?.coords))
    }

    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.ring.check_same(&other.ring)?;
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch { expected: self.rank, found: other.rank });
        }
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(Self::from_vectors(&self.ring, self.rank, gens))
    }

    /// `N :_R m = {r in R : r m in N}`, read off from the last coordinate of the module
    /// generated by `(m, 1)` and `(N, 0)` after eliminating the first `r` positions.
    pub fn colon_ideal(&self, m: &FreeModuleElement) -> Result<RIdeal> {
        self.check_element(m)?;
        if m.is_zero() || self.contains(m)? {
            return Ok(self.ring.unit_ideal());
        }
        let ambient = self.ring.ambient();
        let extend = |v: &Vector, last: Polynomial| {
            let mut w = v.clone();
            w.push(last);
            w
        };
        let mut gens = vec![extend(&m.coords, Polynomial::one(ambient))];
        for g in self.lifted_generators() {
            gens.push(extend(&g, Polynomial::zero(ambient)));
        }
        let gb = module_groebner(&gens);
        let tail: Vec<Polynomial> = gb
            .into_iter()
            .filter(|v| lead(v).map(|(p, _, _)| p) == Some(self.rank))
            .map(|mut v| v.pop().unwrap())
            .collect();
        self.ring.ideal(tail)
    }
}

/// `B = coker(P)` for an `r x c` matrix `P` over `R`: generated by `e_1, ..., e_r`
/// subject to the `c` column relations.
#[derive(Clone)]
pub struct PresentedModule {
    ring: QuotientRing,
    rank: usize,
    columns: Vec<Vector>,
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PresentedModule(coker {})", self.render_matrix())
    }
}

impl fmt::Display for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {}", self.render_matrix())
    }
}

impl PresentedModule {
    /// Matrix given row by row; all rows must have the same length.
    pub fn new(ring: &QuotientRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        for (k, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(AlgebraError::MalformedMatrix(format!(
                    "row {} has {} entries, expected {width}",
                    k + 1,
                    row.len()
                )));
            }
            for p in row {
                ring.check_poly(p)?;
            }
        }
        let columns = (0..width).map(|j| rows.iter().map(|row| row[j].clone()).collect()).collect();
        Ok(PresentedModule { ring: ring.clone(), rank: rows.len(), columns })
    }

    pub fn free(ring: &QuotientRing, rank: usize) -> Self {
        PresentedModule { ring: ring.clone(), rank, columns: Vec::new() }
    }

    /// Presentation of an ideal `B = (b_1, ..., b_s)` by its syzygies over `R`.
    pub fn from_ideal(ideal: &RIdeal) -> Self {
        let ring = ideal.ring().clone();
        let ambient = ring.ambient().clone();
        let gens = ideal.generators();
        let s = gens.len();
        let mut vectors = Vec::new();
        for (i, b) in gens.iter().enumerate() {
            let mut v = module_gb::zero_vector(&ambient, s + 1);
            v[0] = b.clone();
            v[i + 1] = Polynomial::one(&ambient);
            vectors.push(v);
        }
        for d in ring.defining().groebner() {
            let mut v = module_gb::zero_vector(&ambient, s + 1);
            v[0] = d.clone();
            vectors.push(v);
        }
        let columns = module_groebner(&vectors)
            .into_iter()
            .filter(|v| lead(v).map(|(p, _, _)| p).unwrap_or(0) > 0)
            .map(|v| v[1..].iter().map(|p| ring.reduce(p)).collect::<Vector>())
            .filter(|v| !module_gb::is_zero(v))
            .collect();
        PresentedModule { ring, rank: s, columns }
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Number of generators `r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rank).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// Image of the presentation matrix in `R^r`.
    pub fn relations(&self) -> Submodule {
        Submodule::from_vectors(&self.ring, self.rank, self.columns.clone())
    }

    /// Every entry of the matrix vanishes in `R`, so `B` is free of rank `r`.
    pub fn is_free_presentation(&self) -> bool {
        self.columns.iter().flatten().all(|p| self.ring.is_zero_element(p))
    }

    pub fn is_zero_module(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        let rel = self.relations();
        (0..self.rank).all(|j| rel.contains(&FreeModuleElement::basis(&self.ring, self.rank, j)).unwrap())
    }

    /// `B ⊗_R S` for a ring `S` with the same ambient ring: the same matrix read over `S`.
    pub fn base_change(&self, target: &QuotientRing) -> Result<PresentedModule> {
        if !PolyRing::same(self.ring.ambient(), target.ambient()) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(PresentedModule { ring: target.clone(), rank: self.rank, columns: self.columns.clone() })
    }

    pub fn render_matrix(&self) -> String {
        let rows: Vec<String> = self.rows().iter().map(|r| render_vector(r)).collect();
        format!("[{}]", rows.join(", "))
    }
}
