//! Exact reruns of the worked hypersurface and Veronese examples.
//!
//! Each reproduction evaluates the membership and colon statements behind an example and
//! passes only if all of them come out as claimed, including the negative ones such as
//! `y ∉ I`.

use serde::Serialize;

use super::veronese::{veronese_product_display, veronese_rationality};
use super::{is_cl_rational, membership_certificate, RationalityVerdict};
use crate::closure::{closure_of_ideal, CheckReport, ClosureSpec, Verdict};
use crate::error::{AlgebraError, Result};
use crate::poly::{Field, PolyRing, Polynomial};
use crate::quotient::{PresentedModule, QuotientRing, RIdeal};

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub name: String,
    pub params: String,
    pub verdict: Verdict,
    pub checks: Vec<CheckReport>,
    pub rationality: Vec<RationalityVerdict>,
    pub notes: Vec<String>,
}

impl Reproduction {
    fn new(name: &str, params: String) -> Self {
        Reproduction {
            name: name.to_string(),
            params,
            verdict: Verdict::Pass,
            checks: Vec::new(),
            rationality: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push_check(&mut self, report: CheckReport) {
        if !report.passed() {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(report);
    }

    /// Records a verdict whose `closed` flag should equal `expected`.
    fn push_rationality(&mut self, verdict: RationalityVerdict, expected: bool) {
        if verdict.closed != expected {
            self.verdict = Verdict::Fail;
        }
        self.rationality.push(verdict);
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

fn ring(field: &Field, vars: &[&str], rels: impl FnOnce(&[Polynomial]) -> Vec<Polynomial>) -> Result<QuotientRing> {
    let a = PolyRing::with_vars(field.clone(), vars);
    let xs: Vec<Polynomial> = (0..vars.len()).map(|i| Polynomial::var(&a, i)).collect();
    QuotientRing::new(&a, rels(&xs))
}

/// `f ∈ I^cl`, with a certificate when `f ∉ I`.
fn in_closure(r: &QuotientRing, spec: &ClosureSpec, ideal: &RIdeal, f: &Polynomial) -> Result<CheckReport> {
    let cl = closure_of_ideal(ideal, spec)?;
    let mut report = CheckReport::new("closure-membership", r, spec, format!("{} in closure of {ideal}", f.render()));
    report.witness = Some(f.render());
    if !cl.contains(f)? {
        report.verdict = Verdict::Fail;
    } else if !ideal.contains(f)? {
        report.witness_membership_certificate = Some(membership_certificate(f, ideal, spec)?);
    }
    Ok(report)
}

fn not_in(r: &QuotientRing, spec: &ClosureSpec, ideal: &RIdeal, f: &Polynomial) -> Result<CheckReport> {
    let mut report = CheckReport::new("non-membership", r, spec, format!("{} not in {ideal}", f.render()));
    report.witness = Some(f.render());
    report.verdict = Verdict::from_bool(!ideal.contains(f)?);
    Ok(report)
}

/// `R = k[x,y]/(x^2 y)` with `I = (x+y)`: `y` is in the closure for `R/(y)` and `x^2` for `R/(x^2)`.
pub fn reproduce_x2y(field: &Field) -> Result<Reproduction> {
    let r = ring(field, &["x", "y"], |v| vec![&(&v[0] * &v[0]) * &v[1]])?;
    let a = r.ambient().clone();
    let (x, y) = (Polynomial::var(&a, 0), Polynomial::var(&a, 1));
    let sop = vec![&x + &y];
    let ideal = r.ideal(sop.clone())?;
    let mut out = Reproduction::new("x2y", String::new());
    for (label, relation, element) in [("M1 = R/(y)", y.clone(), y.clone()), ("M2 = R/(x^2)", x.pow(2), x.pow(2))] {
        let spec = ClosureSpec::ModulePresented(PresentedModule::new(&r, vec![vec![relation]])?);
        out.push_check(in_closure(&r, &spec, &ideal, &element)?);
        out.push_check(not_in(&r, &spec, &ideal, &element)?);
        out.push_rationality(is_cl_rational(&r, &spec, &sop)?, false);
        out.notes.push(format!("{label} is treated as maximal Cohen-Macaulay"));
    }
    Ok(out)
}

/// `R = k[x,y]/(y^2)`, `I = (x)`, `B = (x^n, y)`; `None` stands for `B = (y)`.
pub fn reproduce_y2(field: &Field, n: Option<u32>) -> Result<Reproduction> {
    if n == Some(0) {
        return Err(AlgebraError::OutOfRange("n must be at least 1".into()));
    }
    let r = ring(field, &["x", "y"], |v| vec![v[1].pow(2)])?;
    let a = r.ambient().clone();
    let (x, y) = (Polynomial::var(&a, 0), Polynomial::var(&a, 1));
    let b = match n {
        Some(n) => r.ideal(vec![x.pow(n), y.clone()])?,
        None => r.ideal(vec![y.clone()])?,
    };
    let params = n.map_or("n=inf".to_string(), |n| format!("n={n}"));
    let mut out = Reproduction::new("y2", params);
    if n.is_none() {
        out.notes.push("the module for n = infinity is interpreted as the ideal (y)".into());
    }
    let spec = ClosureSpec::ModuleIdeal(b);
    let ideal = r.ideal(vec![x.clone()])?;
    out.push_check(in_closure(&r, &spec, &ideal, &y)?);
    out.push_check(not_in(&r, &spec, &ideal, &y)?);
    out.push_rationality(is_cl_rational(&r, &spec, &[x])?, false);
    Ok(out)
}

/// `R = k[x,y]/(x^n + y^2)` for odd `n >= 3`, `I = (x)`, `B = (x^i, y)` with `1 <= i <= (n-1)/2`.
pub fn reproduce_xn_y2(field: &Field, n: u32, i: u32) -> Result<Reproduction> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(AlgebraError::OutOfRange(format!("n must be odd and at least 3, got {n}")));
    }
    if i == 0 || i > (n - 1) / 2 {
        return Err(AlgebraError::OutOfRange(format!("need 1 <= i <= {}, got {i}", (n - 1) / 2)));
    }
    let r = ring(field, &["x", "y"], |v| vec![&v[0].pow(n) + &v[1].pow(2)])?;
    let a = r.ambient().clone();
    let (x, y) = (Polynomial::var(&a, 0), Polynomial::var(&a, 1));
    let spec = ClosureSpec::ModuleIdeal(r.ideal(vec![x.pow(i), y.clone()])?);
    let ideal = r.ideal(vec![x.clone()])?;
    let mut out = Reproduction::new("xn_y2", format!("n={n} i={i}"));
    out.push_check(in_closure(&r, &spec, &ideal, &y)?);
    out.push_check(not_in(&r, &spec, &ideal, &y)?);
    out.push_rationality(is_cl_rational(&r, &spec, &[x])?, false);
    Ok(out)
}

/// A matrix factorization `φ^2 = -g` over `k[x,y]`, given in the ring `k[x,y,z]`.
#[derive(Clone, Debug)]
pub struct MatrixFactorization {
    pub phi: Vec<Vec<Polynomial>>,
    pub g: Polynomial,
}

impl MatrixFactorization {
    pub fn ambient(field: &Field) -> std::sync::Arc<PolyRing> {
        PolyRing::with_vars(field.clone(), &["x", "y", "z"])
    }

    /// `φ = [[x, y], [y, -x]]`, `g = -(x^2 + y^2)`.
    pub fn standard(field: &Field) -> Self {
        let a = Self::ambient(field);
        let (x, y) = (Polynomial::var(&a, 0), Polynomial::var(&a, 1));
        let g = -&(&x.pow(2) + &y.pow(2));
        MatrixFactorization { phi: vec![vec![x.clone(), y.clone()], vec![y, -&x]], g }
    }

    /// `φ = [x]`, `g = -x^2`.
    pub fn scalar(field: &Field) -> Self {
        let a = Self::ambient(field);
        let x = Polynomial::var(&a, 0);
        MatrixFactorization { phi: vec![vec![x.clone()]], g: -&x.pow(2) }
    }

    pub fn describe(&self) -> String {
        let rows: Vec<String> = self
            .phi
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| p.render()).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("phi=[{}] g={}", rows.join(", "), self.g.render())
    }

    /// Square matrix with entries in `(x, y)` free of `z`, `g` free of `z`, and `φ^2 = -g I`.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(AlgebraError::Hypothesis(m));
        let n = self.phi.len();
        if n == 0 || self.phi.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::MalformedMatrix("phi must be a nonempty square matrix".into()));
        }
        let a = self.g.ring().clone();
        if a.nvars() != 3 {
            return bad("the ambient ring must be k[x,y,z]".into());
        }
        let mentions_z = |p: &Polynomial| p.terms().iter().any(|(m, _)| m.exponents()[2] > 0);
        for p in self.phi.iter().flatten() {
            p.check_same_ring(&self.g)?;
            if mentions_z(p) {
                return bad(format!("entry {} involves z", p.render()));
            }
            if p.terms().iter().any(|(m, _)| m.degree() == 0) {
                return bad(format!("entry {} is not in (x, y)", p.render()));
            }
        }
        if mentions_z(&self.g) {
            return bad(format!("g = {} involves z", self.g.render()));
        }
        let minus_g = -&self.g;
        for i in 0..n {
            for j in 0..n {
                let mut entry = Polynomial::zero(&a);
                for k in 0..n {
                    entry = &entry + &(&self.phi[i][k] * &self.phi[k][j]);
                }
                let expected = if i == j { minus_g.clone() } else { Polynomial::zero(&a) };
                if entry != expected {
                    return bad(format!("phi^2 differs from -g*I at entry ({}, {})", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

/// `R = k[x,y,z]/(z^2 + g)`, `B = coker(z I - φ)`: `z ∈ (x,y)^cl` and `z ∉ (x,y)`.
pub fn reproduce_ade(mf: &MatrixFactorization) -> Result<Reproduction> {
    mf.validate()?;
    let a = mf.g.ring().clone();
    let (x, y, z) = (Polynomial::var(&a, 0), Polynomial::var(&a, 1), Polynomial::var(&a, 2));
    let r = QuotientRing::new(&a, vec![&z.pow(2) + &mf.g])?;
    let n = mf.phi.len();
    let rows =
        (0..n).map(|i| (0..n).map(|j| if i == j { &z - &mf.phi[i][j] } else { -&mf.phi[i][j] }).collect()).collect();
    let spec = ClosureSpec::ModulePresented(PresentedModule::new(&r, rows)?);
    let sop = vec![x, y];
    let ideal = r.ideal(sop.clone())?;
    let mut out = Reproduction::new("ade", mf.describe());
    out.push_check(in_closure(&r, &spec, &ideal, &z)?);
    out.push_check(not_in(&r, &spec, &ideal, &z)?);
    out.push_rationality(is_cl_rational(&r, &spec, &sop)?, false);
    Ok(out)
}

/// Rationality for every `M_i`, `0 <= i < d`, plus the product identity behind the failure
/// at `i = d - 1`. Passes iff exactly the `i <= d - 2` cases are closed; `M_0 = R` is free, so
/// `d = 1` is closed as well.
pub fn reproduce_veronese(d: u32) -> Result<Reproduction> {
    if d == 0 {
        return Err(AlgebraError::OutOfRange("d must be at least 1".into()));
    }
    let mut out = Reproduction::new("veronese", format!("d={d}"));
    for i in 0..d {
        out.push_rationality(veronese_rationality(d, i)?, i + 2 <= d || i == 0);
    }
    if !veronese_product_display(d)? {
        out.verdict = Verdict::Fail;
        out.notes.push("(x^d, y^d) I_{d-1} differs from m I_{d-1}".into());
    } else {
        out.notes.push("(x^d, y^d) I_{d-1} = m I_{d-1}, so m lies in the closure for M_{d-1}".into());
    }
    out.notes.push("non-rationality for M_{d-1} is read off the single parameter ideal (x^d, y^d)".into());
    Ok(out)
}

/// Every reproduction with default parameters, ordered by name then parameters.
pub fn reproduce_all(field: &Field) -> Result<Vec<Reproduction>> {
    let mut all = vec![
        reproduce_ade(&MatrixFactorization::standard(field))?,
        reproduce_ade(&MatrixFactorization::scalar(field))?,
        reproduce_x2y(field)?,
    ];
    for n in [3, 5, 7] {
        for i in 1..=(n - 1) / 2 {
            all.push(reproduce_xn_y2(field, n, i)?);
        }
    }
    for n in 1..=6 {
        all.push(reproduce_y2(field, Some(n))?);
    }
    all.push(reproduce_y2(field, None)?);
    for d in 2..=6 {
        all.push(reproduce_veronese(d)?);
    }
    all.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.params.cmp(&b.params)));
    Ok(all)
}
