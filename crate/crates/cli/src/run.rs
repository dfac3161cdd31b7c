//! Executes parsed sessions against the core library.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use closure_lab_core::closure::sampling::{monomial_ideals, nested_pairs, SampleShape};
use closure_lab_core::closure::{self, closure_of_ideal, CheckReport, ClosureSpec};
use closure_lab_core::poly::{Field, Polynomial};
use closure_lab_core::quotient::{PresentedModule, QuotientRing, RIdeal};
use closure_lab_core::rationality::examples::MatrixFactorization;
use closure_lab_core::rationality::{self as rat, Reproduction, ToricVeronese};
use closure_lab_core::AlgebraError;

use crate::report::{Entry, Outcome, Report};
use crate::session::{Command, ModuleDef, ParamValue, ParseError, Session, SpecRef, Stmt};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}:{error}")]
    Parse { source_name: String, error: ParseError },
    #[error("{command}: {error}")]
    Algebra { command: String, error: AlgebraError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug)]
pub struct Options {
    pub field: Field,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { field: Field::Prime(closure_lab_core::poly::DEFAULT_PRIME), seed: 0, samples: 50 }
    }
}

/// Rings, ideals and closures declared by a session, keyed by name.
#[derive(Default)]
pub struct Environment {
    rings: HashMap<String, QuotientRing>,
    ideals: HashMap<String, RIdeal>,
    modules: HashMap<String, ClosureSpec>,
    module_order: Vec<(String, String)>,
}

impl Environment {
    pub fn build(session: &Session) -> Result<Self, AlgebraError> {
        let mut env = Environment::default();
        for stmt in &session.stmts {
            match stmt {
                Stmt::Ring(decl) => {
                    env.rings.insert(decl.name.clone(), decl.quotient());
                }
                Stmt::Ideal { name, ring, gens } => {
                    let ideal = env.rings[ring].ideal(gens.clone())?;
                    env.ideals.insert(name.clone(), ideal);
                }
                Stmt::Module { name, ring, def } => {
                    let r = &env.rings[ring];
                    let spec = match def {
                        ModuleDef::Ideal(g) => ClosureSpec::ModuleIdeal(r.ideal(g.clone())?),
                        ModuleDef::Coker(rows) => ClosureSpec::ModulePresented(PresentedModule::new(r, rows.clone())?),
                    };
                    env.modules.insert(name.clone(), spec);
                    env.module_order.push((name.clone(), ring.clone()));
                }
                Stmt::Command(_) => {}
            }
        }
        Ok(env)
    }

    fn spec(&self, s: &SpecRef) -> ClosureSpec {
        match s {
            SpecRef::Trivial => ClosureSpec::Trivial,
            SpecRef::Module(m) => self.modules[m].clone(),
        }
    }

    /// Declared modules with their rings, in declaration order.
    pub fn modules(&self) -> &[(String, String)] {
        &self.module_order
    }
}

fn render_all(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.render()).collect()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn check_entry(command: String, report: CheckReport) -> Entry {
    Entry { command, verdict: Outcome::from_bool(report.passed()), results: to_value(&report), notes: vec![] }
}

pub fn run_session(session: &Session, source: &str, opts: &Options) -> CliResult<Report> {
    let env =
        Environment::build(session).map_err(|error| CliError::Algebra { command: "declarations".into(), error })?;
    let mut entries = Vec::new();
    for cmd in session.commands() {
        entries.push(run_command(&env, cmd, opts)?);
    }
    Ok(Report::new(source, entries))
}

pub fn run_command(env: &Environment, cmd: &Command, opts: &Options) -> CliResult<Entry> {
    let command = cmd.render();
    execute(env, cmd, opts, command.clone()).map_err(|error| CliError::Algebra { command, error })
}

fn execute(env: &Environment, cmd: &Command, opts: &Options, command: String) -> Result<Entry, AlgebraError> {
    Ok(match cmd {
        Command::Closure { ideal, spec } => {
            let i = &env.ideals[ideal];
            let spec = env.spec(spec);
            let cl = closure_of_ideal(i, &spec)?;
            Entry {
                command,
                verdict: Outcome::Computed,
                results: json!({
                    "ring": i.ring().to_string(),
                    "spec": spec.to_string(),
                    "ideal": render_all(&i.generators()),
                    "closure": render_all(&cl.generators()),
                    "closed": cl.equals(i)?,
                }),
                notes: vec![],
            }
        }
        Command::Rational { ring, spec, sop } => {
            let v = rat::is_cl_rational(&env.rings[ring], &env.spec(spec), sop)?;
            Entry { command, verdict: Outcome::from_bool(v.closed), results: to_value(&v), notes: vec![] }
        }
        Command::Axioms { ring, spec, seed, samples } => {
            let r = &env.rings[ring];
            let reports = axiom_suite(r, &env.spec(spec), seed.unwrap_or(opts.seed), samples.unwrap_or(opts.samples))?;
            Entry {
                command,
                verdict: Outcome::from_bool(reports.iter().all(|r| r.passed())),
                results: to_value(&reports),
                notes: vec![],
            }
        }
        Command::Colon { ring, spec, sop, k } => {
            check_entry(command, closure::check_colon_capturing(&env.spec(spec), &env.rings[ring], sop, *k)?)
        }
        Command::StrongCca { ring, spec, sop, k, t, a } => {
            check_entry(command, closure::check_strong_cca(&env.spec(spec), &env.rings[ring], sop, *k, *t, *a)?)
        }
        Command::StrongCcb { ring, spec, sop, k } => {
            check_entry(command, closure::check_strong_ccb(&env.spec(spec), &env.rings[ring], sop, *k)?)
        }
        Command::Residuality { spec, ideal, sub } => {
            check_entry(command, closure::check_residuality(&env.spec(spec), &env.ideals[ideal], &env.ideals[sub])?)
        }
        Command::PowerFamily { ring, spec, sop, tmax } => {
            let tmax = tmax.unwrap_or(4);
            let rows = rat::check_power_family_closed(&env.rings[ring], &env.spec(spec), sop, tmax)?;
            Entry {
                command,
                verdict: Outcome::from_bool(rows.iter().all(|(_, c)| *c)),
                results: power_rows(&rows),
                notes: vec![format!("finite evidence for t = 1..{tmax}, not a proof for all t")],
            }
        }
        Command::TestIdeal { ring, spec, ideals } => {
            let sample: Vec<RIdeal> = ideals.iter().map(|n| env.ideals[n].clone()).collect();
            let t = rat::finitistic_test_ideal_sample(&env.rings[ring], &env.spec(spec), &sample)?;
            Entry {
                command,
                verdict: Outcome::Computed,
                results: json!({
                    "test_ideal": render_all(&t.ideal.generators()),
                    "sample_size": t.sample_size,
                    "over_approximation": t.over_approximation,
                }),
                notes: vec![
                    "intersection over a finite sample; the true finitistic test ideal is contained in it".into()
                ],
            }
        }
        Command::Reproduce { name, params } => reproduce(name, params, &opts.field, command)?,
    })
}

fn power_rows(rows: &[(u32, bool)]) -> Value {
    Value::Array(rows.iter().map(|(t, c)| json!({"t": t, "closed": c})).collect())
}

/// Extension and idempotence on `samples` random monomial ideals, order preservation on as
/// many nested pairs.
pub fn axiom_suite(
    ring: &QuotientRing,
    spec: &ClosureSpec,
    seed: u64,
    samples: usize,
) -> Result<Vec<CheckReport>, AlgebraError> {
    let shape = SampleShape::default();
    let ideals = monomial_ideals(ring, seed, samples, shape)?;
    let pairs = nested_pairs(ring, seed.wrapping_add(1), samples, shape)?;
    Ok(vec![
        closure::check_extension(spec, &ideals)?,
        closure::check_idempotence(spec, &ideals)?,
        closure::check_order_preservation(spec, &pairs)?,
    ])
}

fn int_param(params: &[(String, ParamValue)], key: &str) -> Option<u32> {
    params.iter().find_map(|(k, v)| match v {
        ParamValue::Int(n) if k == key => Some(*n),
        _ => None,
    })
}

fn reproduce(
    name: &str,
    params: &[(String, ParamValue)],
    field: &Field,
    command: String,
) -> Result<Entry, AlgebraError> {
    let mut notes = Vec::new();
    let mut extra = None;
    let bundle: Vec<Reproduction> = match name {
        "all" => rat::reproduce_all(field)?,
        "x2y" => vec![rat::reproduce_x2y(field)?],
        "y2" => {
            let inf = params.iter().any(|(_, v)| *v == ParamValue::Infinity);
            match (int_param(params, "n"), inf) {
                (Some(n), _) => vec![rat::reproduce_y2(field, Some(n))?],
                (None, true) => vec![rat::reproduce_y2(field, None)?],
                (None, false) => (1..=6).map(|n| rat::reproduce_y2(field, Some(n))).collect::<Result<_, _>>()?,
            }
        }
        "xn_y2" => {
            let ns = int_param(params, "n").map_or(vec![3, 5, 7], |n| vec![n]);
            let mut out = Vec::new();
            for n in ns {
                match int_param(params, "i") {
                    Some(i) => out.push(rat::reproduce_xn_y2(field, n, i)?),
                    None => {
                        for i in 1..=n.saturating_sub(1) / 2 {
                            out.push(rat::reproduce_xn_y2(field, n, i)?);
                        }
                        if n < 3 || n % 2 == 0 {
                            out.push(rat::reproduce_xn_y2(field, n, 1)?);
                        }
                    }
                }
            }
            out
        }
        "ade" => {
            let phi = params.iter().find_map(|(k, v)| match v {
                ParamValue::Matrix(m) if k == "phi" => Some(m.clone()),
                _ => None,
            });
            let g = params.iter().find_map(|(k, v)| match v {
                ParamValue::Poly(p) if k == "g" => Some(p.clone()),
                _ => None,
            });
            match (phi, g) {
                (Some(phi), Some(g)) => vec![rat::reproduce_ade(&MatrixFactorization { phi, g })?],
                _ => vec![
                    rat::reproduce_ade(&MatrixFactorization::standard(field))?,
                    rat::reproduce_ade(&MatrixFactorization::scalar(field))?,
                ],
            }
        }
        "veronese" => {
            let ds = int_param(params, "d").map_or((2..=6).collect(), |d| vec![d]);
            if let Some(tmax) = int_param(params, "tmax") {
                let mut rows = Vec::new();
                for &d in &ds {
                    let toric = ToricVeronese::new(field.clone(), d)?;
                    for i in 0..d {
                        let fam =
                            rat::check_power_family_closed(&toric.ring, &toric.spec(i)?, &toric.parameters(), tmax)?;
                        rows.push(json!({"d": d, "i": i, "family": power_rows(&fam)}));
                    }
                }
                extra = Some(Value::Array(rows));
                notes.push(format!(
                    "power family computed on the toric presentation, finite evidence for t = 1..{tmax}"
                ));
            }
            ds.iter().map(|&d| rat::reproduce_veronese(d)).collect::<Result<_, _>>()?
        }
        other => return Err(AlgebraError::OutOfRange(format!("unknown reproduction '{other}'"))),
    };
    let verdict = Outcome::from_bool(bundle.iter().all(|r| r.passed()));
    let mut results = json!({ "reproductions": to_value(&bundle) });
    if let Some(extra) = extra {
        results["power_family"] = extra;
    }
    Ok(Entry { command, verdict, results, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::parse_session;

    fn run(src: &str) -> Report {
        let opts = Options::default();
        run_session(&parse_session(src, &opts.field).unwrap(), "test", &opts).unwrap()
    }

    #[test]
    fn trivial_closure_echoes_ideal() {
        let r = run("ring R = k[x,y] / (x^2*y); ideal I = (x+y); closure I under trivial;");
        assert_eq!(r.entries[0].results["closure"], json!(["x + y"]));
        assert_eq!(r.entries[0].verdict, Outcome::Computed);
    }

    #[test]
    fn cyclic_module_is_not_rational() {
        let r = run("ring R = F32003[x,y] / (x^2*y); module M1 = coker [[y]]; check rational R M1 sop(x+y);");
        assert!(r.failed());
        assert_eq!(r.entries[0].results["closed"], json!(false));
    }

    #[test]
    fn y2_reproduction_has_witness_y() {
        let r = run("reproduce y2 n=3;");
        assert_eq!(r.verdict, Outcome::Pass);
        let repro = &r.entries[0].results["reproductions"][0];
        assert_eq!(repro["checks"][0]["witness"], json!("y"));
    }

    #[test]
    fn veronese_five_pattern() {
        let r = run("reproduce veronese d=5;");
        assert_eq!(r.verdict, Outcome::Pass);
        let verdicts = r.entries[0].results["reproductions"][0]["rationality"].as_array().unwrap().clone();
        let closed: Vec<bool> = verdicts.iter().map(|v| v["closed"].as_bool().unwrap()).collect();
        assert_eq!(closed, vec![true, true, true, true, false]);
    }

    #[test]
    fn invalid_sop_is_an_input_error() {
        let opts = Options::default();
        let s = parse_session("ring R = k[x,y]; check rational R trivial sop(x);", &opts.field).unwrap();
        assert!(matches!(run_session(&s, "t", &opts), Err(CliError::Algebra { .. })));
    }
}
