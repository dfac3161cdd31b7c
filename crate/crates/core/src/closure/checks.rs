use std::fmt;

use serde::{Serialize, Serializer};

use super::{closure_of_ideal, ClosureSpec};
use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::quotient::{QuotientRing, RIdeal};
use crate::rationality::validate_system_of_parameters;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of one property check. A failing report carries a witness polynomial that
/// lies in the larger side of the violated containment but not in the smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub ring: String,
    pub spec: String,
    pub instance: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_membership_certificate: Option<String>,
}

impl CheckReport {
    pub fn new(property: &str, ring: &QuotientRing, spec: &ClosureSpec, instance: String) -> Self {
        CheckReport {
            property: property.to_string(),
            ring: ring.to_string(),
            spec: spec.to_string(),
            instance,
            verdict: Verdict::Pass,
            witness: None,
            witness_membership_certificate: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    fn fail_with(mut self, witness: &Polynomial) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness.render());
        self
    }
}

/// Picks the reported witness among violating elements: a monomial of least degree when one
/// exists, otherwise the first candidate.
pub fn choose_witness(candidates: &[Polynomial]) -> Option<Polynomial> {
    candidates
        .iter()
        .filter(|p| p.is_monomial())
        .min_by(|a, b| {
            let order = a.ring().order;
            a.degree()
                .cmp(&b.degree())
                .then_with(|| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()))
        })
        .or_else(|| candidates.first())
        .cloned()
}

/// Witness for a failed `small ⊆ large`, or `None` when the containment holds.
pub fn containment_witness(small: &RIdeal, large: &RIdeal) -> Result<Option<Polynomial>> {
    let missing = large.missing_from(small)?;
    Ok(choose_witness(&missing))
}

fn record_containment(report: CheckReport, small: &RIdeal, large: &RIdeal) -> Result<CheckReport> {
    Ok(match containment_witness(small, large)? {
        Some(w) => report.fail_with(&w),
        None => report,
    })
}

fn render_list(ps: &[Polynomial]) -> String {
    let parts: Vec<String> = ps.iter().map(|p| p.render()).collect();
    format!("({})", parts.join(", "))
}

fn sample_ring(spec: &ClosureSpec, samples: &[RIdeal]) -> Option<QuotientRing> {
    samples.first().map(|i| i.ring().clone()).or_else(|| spec.ring().cloned())
}

/// `I ⊆ I^cl` on every sample.
pub fn check_extension(spec: &ClosureSpec, samples: &[RIdeal]) -> Result<CheckReport> {
    let Some(ring) = sample_ring(spec, samples) else {
        return Err(AlgebraError::MalformedSample("no samples".into()));
    };
    for (k, i) in samples.iter().enumerate() {
        let cl = closure_of_ideal(i, spec)?;
        if let Some(w) = containment_witness(i, &cl)? {
            return Ok(CheckReport::new("extension", &ring, spec, format!("sample {k}: I = {i}")).fail_with(&w));
        }
    }
    Ok(CheckReport::new("extension", &ring, spec, format!("{} samples", samples.len())))
}

/// `(I^cl)^cl = I^cl` on every sample.
pub fn check_idempotence(spec: &ClosureSpec, samples: &[RIdeal]) -> Result<CheckReport> {
    let Some(ring) = sample_ring(spec, samples) else {
        return Err(AlgebraError::MalformedSample("no samples".into()));
    };
    for (k, i) in samples.iter().enumerate() {
        let cl = closure_of_ideal(i, spec)?;
        let cl2 = closure_of_ideal(&cl, spec)?;
        let witness = match containment_witness(&cl2, &cl)? {
            Some(w) => Some(w),
            None => containment_witness(&cl, &cl2)?,
        };
        if let Some(w) = witness {
            return Ok(CheckReport::new("idempotence", &ring, spec, format!("sample {k}: I = {i}")).fail_with(&w));
        }
    }
    Ok(CheckReport::new("idempotence", &ring, spec, format!("{} samples", samples.len())))
}

/// `I ⊆ I'` implies `I^cl ⊆ I'^cl`. A pair with `I ⊄ I'` is a malformed sample.
pub fn check_order_preservation(spec: &ClosureSpec, pairs: &[(RIdeal, RIdeal)]) -> Result<CheckReport> {
    let Some(ring) = pairs.first().map(|p| p.0.ring().clone()).or_else(|| spec.ring().cloned()) else {
        return Err(AlgebraError::MalformedSample("no samples".into()));
    };
    for (k, (small, large)) in pairs.iter().enumerate() {
        if !large.contains_ideal(small)? {
            return Err(AlgebraError::MalformedSample(format!("pair {k}: {small} is not contained in {large}")));
        }
    }
    for (k, (small, large)) in pairs.iter().enumerate() {
        let (a, b) = (closure_of_ideal(small, spec)?, closure_of_ideal(large, spec)?);
        if let Some(w) = containment_witness(&a, &b)? {
            let instance = format!("pair {k}: I = {small}, I' = {large}");
            return Ok(CheckReport::new("order-preservation", &ring, spec, instance).fail_with(&w));
        }
    }
    Ok(CheckReport::new("order-preservation", &ring, spec, format!("{} pairs", pairs.len())))
}

/// The closure of `I` in `R` equals the preimage of the closure of `I/J` computed over `R/J`.
pub fn check_residuality(spec: &ClosureSpec, i: &RIdeal, j: &RIdeal) -> Result<CheckReport> {
    let ring = i.ring().clone();
    if !i.contains_ideal(j)? {
        return Err(AlgebraError::MalformedSample(format!("{j} is not contained in {i}")));
    }
    let report = CheckReport::new("residuality", &ring, spec, format!("I = {i}, J = {j}"));
    let direct = closure_of_ideal(i, spec)?;
    let quotient = ring.quotient_by(j)?;
    let reduced_spec = spec.base_change(&quotient)?;
    let upstairs = closure_of_ideal(&quotient.adopt(i)?, &reduced_spec)?;
    let pulled_back = ring.adopt(&upstairs)?;
    let witness = match containment_witness(&pulled_back, &direct)? {
        Some(w) => Some(w),
        None => containment_witness(&direct, &pulled_back)?,
    };
    Ok(match witness {
        Some(w) => report.fail_with(&w),
        None => report,
    })
}

fn partial_ideal(ring: &QuotientRing, elems: &[Polynomial]) -> Result<RIdeal> {
    ring.ideal(elems.to_vec())
}

fn check_k(sop: &[Polynomial], k: usize) -> Result<()> {
    if k >= sop.len() {
        return Err(AlgebraError::OutOfRange(format!("k = {k} needs k < {}", sop.len())));
    }
    Ok(())
}

/// `(x_1..x_k) : x_{k+1} ⊆ (x_1..x_k)^cl`.
pub fn check_colon_capturing(
    spec: &ClosureSpec,
    ring: &QuotientRing,
    sop: &[Polynomial],
    k: usize,
) -> Result<CheckReport> {
    validate_system_of_parameters(sop, ring)?;
    check_k(sop, k)?;
    let i = partial_ideal(ring, &sop[..k])?;
    let colon = i.colon_element(&sop[k])?;
    let cl = closure_of_ideal(&i, spec)?;
    let report = CheckReport::new("colon-capturing", ring, spec, format!("sop {}, k = {k}", render_list(sop)));
    record_containment(report, &colon, &cl)
}

/// Version A: `(x_1^t, x_2..x_k) : x_1^a ⊆ (x_1^{t-a}, x_2..x_k)^cl` for `0 <= a < t`,
/// with `1 <= k <= |sop|` the length of the partial system used.
pub fn check_strong_cca(
    spec: &ClosureSpec,
    ring: &QuotientRing,
    sop: &[Polynomial],
    k: usize,
    t: u32,
    a: u32,
) -> Result<CheckReport> {
    validate_system_of_parameters(sop, ring)?;
    if a >= t {
        return Err(AlgebraError::OutOfRange(format!("need a < t, got a = {a}, t = {t}")));
    }
    if k == 0 || k > sop.len() {
        return Err(AlgebraError::OutOfRange(format!("k = {k} needs 1 <= k <= {}", sop.len())));
    }
    let with_power = |e: u32| {
        let mut gens = vec![sop[0].pow(e)];
        gens.extend(sop[1..k].iter().cloned());
        partial_ideal(ring, &gens)
    };
    let colon = with_power(t)?.colon_element(&sop[0].pow(a))?;
    let cl = closure_of_ideal(&with_power(t - a)?, spec)?;
    let instance = format!("sop {}, k = {k}, t = {t}, a = {a}", render_list(sop));
    record_containment(CheckReport::new("strong-colon-capturing-A", ring, spec, instance), &colon, &cl)
}

/// Version B: `(x_1..x_k)^cl : x_{k+1} ⊆ (x_1..x_k)^cl`.
pub fn check_strong_ccb(spec: &ClosureSpec, ring: &QuotientRing, sop: &[Polynomial], k: usize) -> Result<CheckReport> {
    validate_system_of_parameters(sop, ring)?;
    check_k(sop, k)?;
    let cl = closure_of_ideal(&partial_ideal(ring, &sop[..k])?, spec)?;
    let colon = cl.colon_element(&sop[k])?;
    let instance = format!("sop {}, k = {k}", render_list(sop));
    record_containment(CheckReport::new("strong-colon-capturing-B", ring, spec, instance), &colon, &cl)
}

/// `(x_1..x_k) : x_{k+1} ⊆ (x_1..x_k)^cl : x_{k+1}`, the step linking version B to plain
/// colon-capturing.
pub fn check_colon_chain(spec: &ClosureSpec, ring: &QuotientRing, sop: &[Polynomial], k: usize) -> Result<CheckReport> {
    validate_system_of_parameters(sop, ring)?;
    check_k(sop, k)?;
    let i = partial_ideal(ring, &sop[..k])?;
    let colon = i.colon_element(&sop[k])?;
    let cl_colon = closure_of_ideal(&i, spec)?.colon_element(&sop[k])?;
    let instance = format!("sop {}, k = {k}", render_list(sop));
    record_containment(CheckReport::new("colon-chain", ring, spec, instance), &colon, &cl_colon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Field, PolyRing};

    fn ring(vars: &[&str], rels: &[&str]) -> QuotientRing {
        let a = PolyRing::with_vars(Field::Prime(32003), vars);
        QuotientRing::new(&a, rels.iter().map(|s| parse_polynomial(&a, s).unwrap()).collect()).unwrap()
    }

    fn ps(r: &QuotientRing, srcs: &[&str]) -> Vec<Polynomial> {
        srcs.iter().map(|s| parse_polynomial(r.ambient(), s).unwrap()).collect()
    }

    fn id(r: &QuotientRing, gens: &[&str]) -> RIdeal {
        r.ideal(ps(r, gens)).unwrap()
    }

    #[test]
    fn trivial_closure_passes_axioms() {
        let r = ring(&["x", "y"], &["x^2*y"]);
        let samples = vec![id(&r, &["x"]), id(&r, &["x+y", "y^2"]), r.zero_ideal()];
        assert!(check_extension(&ClosureSpec::Trivial, &samples).unwrap().passed());
        assert!(check_idempotence(&ClosureSpec::Trivial, &samples).unwrap().passed());
        let pairs = vec![(id(&r, &["x^2"]), id(&r, &["x"]))];
        assert!(check_order_preservation(&ClosureSpec::Trivial, &pairs).unwrap().passed());
    }

    #[test]
    fn unordered_pair_is_malformed() {
        let r = ring(&["x", "y"], &[]);
        let pairs = vec![(id(&r, &["x"]), id(&r, &["y"]))];
        assert!(matches!(
            check_order_preservation(&ClosureSpec::Trivial, &pairs),
            Err(AlgebraError::MalformedSample(_))
        ));
    }

    #[test]
    fn regular_ring_captures_colons() {
        let r = ring(&["x", "y"], &[]);
        let sop = ps(&r, &["x", "y"]);
        for k in 0..2 {
            assert!(check_colon_capturing(&ClosureSpec::Trivial, &r, &sop, k).unwrap().passed());
            assert!(check_strong_ccb(&ClosureSpec::Trivial, &r, &sop, k).unwrap().passed());
        }
        for t in 1..4 {
            for a in 0..t {
                assert!(check_strong_cca(&ClosureSpec::Trivial, &r, &sop, 2, t, a).unwrap().passed());
            }
        }
    }

    #[test]
    fn non_cohen_macaulay_ring_fails_with_witness_x() {
        let r = ring(&["x", "y"], &["x^2", "x*y"]);
        let report = check_colon_capturing(&ClosureSpec::Trivial, &r, &ps(&r, &["y"]), 0).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.witness.as_deref(), Some("x"));
    }

    #[test]
    fn strong_cca_rejects_a_at_least_t() {
        let r = ring(&["x", "y"], &[]);
        let sop = ps(&r, &["x", "y"]);
        assert!(matches!(check_strong_cca(&ClosureSpec::Trivial, &r, &sop, 1, 2, 2), Err(AlgebraError::OutOfRange(_))));
    }

    #[test]
    fn invalid_sop_is_rejected() {
        let r = ring(&["x", "y"], &[]);
        assert!(matches!(
            check_colon_capturing(&ClosureSpec::Trivial, &r, &ps(&r, &["x"]), 0),
            Err(AlgebraError::InvalidSystemOfParameters(_))
        ));
    }

    #[test]
    fn residuality_spot_check() {
        let r = ring(&["x", "y"], &[]);
        let rows = vec![ps(&r, &["y"])];
        let spec = ClosureSpec::ModulePresented(crate::quotient::PresentedModule::new(&r, rows).unwrap());
        let i = id(&r, &["x+y", "x^2*y"]);
        let j = id(&r, &["x^2*y"]);
        assert!(check_residuality(&spec, &i, &j).unwrap().passed());
        assert!(check_residuality(&spec, &i, &r.zero_ideal()).unwrap().passed());
        assert!(check_residuality(&ClosureSpec::Trivial, &i, &j).unwrap().passed());
        assert!(check_residuality(&spec, &j, &i).is_err());
    }

    #[test]
    fn witness_prefers_low_degree_monomials() {
        let r = ring(&["x", "y"], &[]);
        let cands = ps(&r, &["x+y", "x^3", "y^2"]);
        assert_eq!(choose_witness(&cands).unwrap().render(), "y^2");
        let cands = ps(&r, &["x+y", "x-y"]);
        assert_eq!(choose_witness(&cands).unwrap().render(), "x + y");
    }
}
