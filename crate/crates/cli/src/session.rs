//! Session files: declarations of rings, ideals and modules followed by commands.
//!
//! Every name is resolved while parsing, so an undefined or mistyped reference is reported
//! with its line and column before anything runs. [`Session::render`] prints the canonical
//! form, which parses back to an equal session.

use std::collections::HashMap;
use std::fmt::Write as _;

use closure_lab_core::poly::parse::{describe, parse_expr, TokenKind, TokenStream};
use closure_lab_core::poly::{Field, PolyRing, Polynomial, RingRef};
use closure_lab_core::quotient::QuotientRing;

pub use closure_lab_core::poly::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// `k`: the field chosen on the command line or through the environment.
    Default,
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn resolve(&self, default: &Field) -> Field {
        match self {
            FieldSpec::Default => default.clone(),
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime(p) => Field::Prime(*p),
        }
    }

    pub fn render(&self) -> String {
        match self {
            FieldSpec::Default => "k".into(),
            FieldSpec::Rational => "QQ".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }

    /// Parses `QQ`, `k` or `F<p>` with `p` prime and below `2^31`.
    pub fn parse_word(word: &str) -> Result<FieldSpec, String> {
        match word {
            "QQ" => Ok(FieldSpec::Rational),
            "k" => Ok(FieldSpec::Default),
            _ => {
                let digits = word.strip_prefix('F').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
                let Some(digits) = digits else {
                    return Err(format!("unknown field '{word}', expected QQ, k or F<prime>"));
                };
                let p: u64 = digits.parse().map_err(|_| format!("characteristic {digits} is out of range"))?;
                match Field::prime(p).map_err(|e| e.to_string())? {
                    Field::Prime(p) => Ok(FieldSpec::Prime(p)),
                    Field::Rational => unreachable!(),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub relations: Vec<Polynomial>,
    pub ambient: RingRef,
}

impl RingDecl {
    pub fn quotient(&self) -> QuotientRing {
        QuotientRing::new(&self.ambient, self.relations.clone()).expect("relations parsed in this ring")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleDef {
    Coker(Vec<Vec<Polynomial>>),
    Ideal(Vec<Polynomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecRef {
    Trivial,
    Module(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Int(u32),
    Infinity,
    Matrix(Vec<Vec<Polynomial>>),
    Poly(Polynomial),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Closure { ideal: String, spec: SpecRef },
    Rational { ring: String, spec: SpecRef, sop: Vec<Polynomial> },
    Axioms { ring: String, spec: SpecRef, seed: Option<u64>, samples: Option<usize> },
    Colon { ring: String, spec: SpecRef, sop: Vec<Polynomial>, k: usize },
    StrongCca { ring: String, spec: SpecRef, sop: Vec<Polynomial>, k: usize, t: u32, a: u32 },
    StrongCcb { ring: String, spec: SpecRef, sop: Vec<Polynomial>, k: usize },
    Residuality { spec: SpecRef, ideal: String, sub: String },
    PowerFamily { ring: String, spec: SpecRef, sop: Vec<Polynomial>, tmax: Option<u32> },
    TestIdeal { ring: String, spec: SpecRef, ideals: Vec<String> },
    Reproduce { name: String, params: Vec<(String, ParamValue)> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Ring(RingDecl),
    Ideal { name: String, ring: String, gens: Vec<Polynomial> },
    Module { name: String, ring: String, def: ModuleDef },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Ring,
    Ideal,
    Module,
}

/// Names known so far, with the kind and owning ring of each.
struct Scope {
    names: HashMap<String, (Kind, String)>,
    rings: HashMap<String, RingRef>,
    current: Option<String>,
}

pub const REPRODUCTIONS: [&str; 6] = ["x2y", "y2", "xn_y2", "ade", "veronese", "all"];

pub fn parse_session(src: &str, default_field: &Field) -> Result<Session, ParseError> {
    let mut ts = TokenStream::new(src)?;
    let mut scope = Scope { names: HashMap::new(), rings: HashMap::new(), current: None };
    let mut stmts = Vec::new();
    while !ts.at_eof() {
        let stmt = parse_stmt(&mut ts, &mut scope, default_field)?;
        ts.expect_sym(';')?;
        stmts.push(stmt);
    }
    Ok(Session { stmts })
}

fn parse_stmt(ts: &mut TokenStream, scope: &mut Scope, default_field: &Field) -> Result<Stmt, ParseError> {
    let (word, tok) = ts.expect_ident()?;
    match word.as_str() {
        "ring" => parse_ring(ts, scope, default_field),
        "ideal" => {
            let (name, ring) = declare(ts, scope, Kind::Ideal)?;
            ts.expect_sym('=')?;
            let gens = parse_poly_list(ts, &scope.rings[&ring])?;
            Ok(Stmt::Ideal { name, ring, gens })
        }
        "module" => {
            let (name, ring) = declare(ts, scope, Kind::Module)?;
            ts.expect_sym('=')?;
            let r = scope.rings[&ring].clone();
            let def = if ts.is_ident("coker") {
                ts.next();
                ModuleDef::Coker(parse_matrix(ts, &r)?)
            } else if ts.is_ident("ideal") {
                ts.next();
                ModuleDef::Ideal(parse_poly_list(ts, &r)?)
            } else {
                return Err(ParseError::at(
                    ts.peek(),
                    format!("expected 'coker' or 'ideal', found {}", describe(ts.peek())),
                ));
            };
            Ok(Stmt::Module { name, ring, def })
        }
        "closure" => {
            let (ideal, ring) = lookup(ts, scope, Kind::Ideal)?;
            ts.expect_keyword("under")?;
            let spec = parse_spec(ts, scope, &ring)?;
            Ok(Stmt::Command(Command::Closure { ideal, spec }))
        }
        "check" => parse_check(ts, scope),
        "test_ideal" => {
            let (ring, _) = lookup(ts, scope, Kind::Ring)?;
            let spec = parse_spec(ts, scope, &ring)?;
            ts.expect_sym('(')?;
            let mut ideals = Vec::new();
            loop {
                let tok = ts.peek().clone();
                let (name, owner) = lookup(ts, scope, Kind::Ideal)?;
                if owner != ring {
                    return Err(ParseError::at(
                        &tok,
                        format!("ideal '{name}' belongs to ring '{owner}', not '{ring}'"),
                    ));
                }
                ideals.push(name);
                if !ts.eat_sym(',') {
                    break;
                }
            }
            ts.expect_sym(')')?;
            Ok(Stmt::Command(Command::TestIdeal { ring, spec, ideals }))
        }
        "reproduce" => parse_reproduce(ts, default_field),
        _ => Err(ParseError::at(&tok, format!("unknown statement '{word}'"))),
    }
}

fn parse_ring(ts: &mut TokenStream, scope: &mut Scope, default_field: &Field) -> Result<Stmt, ParseError> {
    let (name, name_tok) = ts.expect_ident()?;
    if scope.names.contains_key(&name) {
        return Err(ParseError::at(&name_tok, format!("'{name}' is already defined")));
    }
    ts.expect_sym('=')?;
    let (word, field_tok) = ts.expect_ident()?;
    let field = FieldSpec::parse_word(&word).map_err(|m| ParseError::at(&field_tok, m))?;
    ts.expect_sym('[')?;
    let mut vars: Vec<String> = Vec::new();
    loop {
        let (v, tok) = ts.expect_ident()?;
        if vars.contains(&v) {
            return Err(ParseError::at(&tok, format!("variable '{v}' appears twice")));
        }
        vars.push(v);
        if !ts.eat_sym(',') {
            break;
        }
    }
    ts.expect_sym(']')?;
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let ambient = PolyRing::with_vars(field.resolve(default_field), &refs);
    let relations = if ts.eat_sym('/') { parse_poly_list(ts, &ambient)? } else { Vec::new() };
    scope.names.insert(name.clone(), (Kind::Ring, name.clone()));
    scope.rings.insert(name.clone(), ambient.clone());
    scope.current = Some(name.clone());
    Ok(Stmt::Ring(RingDecl { name, field, vars, relations, ambient }))
}

fn declare(ts: &mut TokenStream, scope: &mut Scope, kind: Kind) -> Result<(String, String), ParseError> {
    let (name, tok) = ts.expect_ident()?;
    if scope.names.contains_key(&name) {
        return Err(ParseError::at(&tok, format!("'{name}' is already defined")));
    }
    let Some(ring) = scope.current.clone() else {
        return Err(ParseError::at(&tok, "declare a ring before ideals and modules"));
    };
    scope.names.insert(name.clone(), (kind, ring.clone()));
    Ok((name, ring))
}

/// Resolves a name of the given kind; returns it with its ring.
fn lookup(ts: &mut TokenStream, scope: &Scope, kind: Kind) -> Result<(String, String), ParseError> {
    let (name, tok) = ts.expect_ident()?;
    match scope.names.get(&name) {
        None => Err(ParseError::at(&tok, format!("undefined name '{name}'"))),
        Some((k, ring)) if *k == kind => Ok((name, ring.clone())),
        Some((k, _)) => Err(ParseError::at(&tok, format!("'{name}' is {}, expected {}", article(*k), article(kind)))),
    }
}

fn article(k: Kind) -> &'static str {
    match k {
        Kind::Ring => "a ring",
        Kind::Ideal => "an ideal",
        Kind::Module => "a module",
    }
}

fn parse_spec(ts: &mut TokenStream, scope: &Scope, ring: &str) -> Result<SpecRef, ParseError> {
    if ts.is_ident("trivial") {
        ts.next();
        return Ok(SpecRef::Trivial);
    }
    let tok = ts.peek().clone();
    let (name, owner) = lookup(ts, scope, Kind::Module)?;
    if owner != ring {
        return Err(ParseError::at(&tok, format!("module '{name}' belongs to ring '{owner}', not '{ring}'")));
    }
    Ok(SpecRef::Module(name))
}

fn parse_check(ts: &mut TokenStream, scope: &Scope) -> Result<Stmt, ParseError> {
    let (what, tok) = ts.expect_ident()?;
    if what == "residuality" {
        let spec_tok = ts.peek().clone();
        let is_trivial = ts.is_ident("trivial");
        let spec_name = if is_trivial { None } else { Some(lookup(ts, scope, Kind::Module)?) };
        if is_trivial {
            ts.next();
        }
        let (ideal, ring) = lookup(ts, scope, Kind::Ideal)?;
        let sub_tok = ts.peek().clone();
        let (sub, sub_ring) = lookup(ts, scope, Kind::Ideal)?;
        if sub_ring != ring {
            return Err(ParseError::at(&sub_tok, format!("ideal '{sub}' belongs to ring '{sub_ring}', not '{ring}'")));
        }
        let spec = match spec_name {
            None => SpecRef::Trivial,
            Some((name, owner)) if owner == ring => SpecRef::Module(name),
            Some((name, owner)) => {
                return Err(ParseError::at(
                    &spec_tok,
                    format!("module '{name}' belongs to ring '{owner}', not '{ring}'"),
                ));
            }
        };
        return Ok(Stmt::Command(Command::Residuality { spec, ideal, sub }));
    }
    let known = ["rational", "axioms", "colon", "strong_cca", "strong_ccb", "power_family"];
    if !known.contains(&what.as_str()) {
        return Err(ParseError::at(&tok, format!("unknown check '{what}'")));
    }
    let (ring, _) = lookup(ts, scope, Kind::Ring)?;
    let spec = parse_spec(ts, scope, &ring)?;
    let r = scope.rings[&ring].clone();
    if what == "axioms" {
        let mut opts = parse_options(ts, &["seed", "samples"])?;
        let samples = opts.remove("samples").map(|v| v as usize);
        let seed = opts.remove("seed").map(u64::from);
        return Ok(Stmt::Command(Command::Axioms { ring, spec, seed, samples }));
    }
    ts.expect_keyword("sop")?;
    let sop = parse_poly_list(ts, &r)?;
    let cmd = match what.as_str() {
        "rational" => Command::Rational { ring, spec, sop },
        "colon" | "strong_ccb" => {
            let mut opts = parse_options(ts, &["k"])?;
            let k = required(ts, &mut opts, "k")? as usize;
            if what == "colon" {
                Command::Colon { ring, spec, sop, k }
            } else {
                Command::StrongCcb { ring, spec, sop, k }
            }
        }
        "strong_cca" => {
            let mut opts = parse_options(ts, &["k", "t", "a"])?;
            let k = required(ts, &mut opts, "k")? as usize;
            let t = required(ts, &mut opts, "t")?;
            let a = required(ts, &mut opts, "a")?;
            Command::StrongCca { ring, spec, sop, k, t, a }
        }
        _ => {
            let mut opts = parse_options(ts, &["tmax"])?;
            Command::PowerFamily { ring, spec, sop, tmax: opts.remove("tmax") }
        }
    };
    Ok(Stmt::Command(cmd))
}

fn required(ts: &TokenStream, opts: &mut HashMap<String, u32>, key: &str) -> Result<u32, ParseError> {
    opts.remove(key).ok_or_else(|| ParseError::at(ts.peek(), format!("missing '{key}=<integer>'")))
}

/// `key=value` pairs with integer values, in any order, each at most once.
fn parse_options(ts: &mut TokenStream, allowed: &[&str]) -> Result<HashMap<String, u32>, ParseError> {
    let mut out = HashMap::new();
    while let TokenKind::Ident(key) = &ts.peek().kind {
        let key = key.clone();
        let tok = ts.next();
        if !allowed.contains(&key.as_str()) {
            return Err(ParseError::at(
                &tok,
                format!("unknown option '{key}', expected one of {}", allowed.join(", ")),
            ));
        }
        if out.contains_key(&key) {
            return Err(ParseError::at(&tok, format!("option '{key}' given twice")));
        }
        ts.expect_sym('=')?;
        out.insert(key, ts.expect_u32()?);
    }
    Ok(out)
}

fn parse_reproduce(ts: &mut TokenStream, default_field: &Field) -> Result<Stmt, ParseError> {
    let (name, tok) = ts.expect_ident()?;
    let allowed: &[&str] = match name.as_str() {
        "x2y" | "all" => &[],
        "y2" => &["n"],
        "xn_y2" => &["n", "i"],
        "veronese" => &["d", "tmax"],
        "ade" => &["phi", "g"],
        _ => {
            return Err(ParseError::at(
                &tok,
                format!("unknown reproduction '{name}', expected one of {}", REPRODUCTIONS.join(", ")),
            ));
        }
    };
    let xyz = PolyRing::with_vars(default_field.clone(), &["x", "y", "z"]);
    let mut params: Vec<(String, ParamValue)> = Vec::new();
    while let TokenKind::Ident(key) = &ts.peek().kind {
        let key = key.clone();
        let tok = ts.next();
        if !allowed.contains(&key.as_str()) {
            return Err(ParseError::at(&tok, format!("'{name}' takes no parameter '{key}'")));
        }
        if params.iter().any(|(k, _)| *k == key) {
            return Err(ParseError::at(&tok, format!("parameter '{key}' given twice")));
        }
        ts.expect_sym('=')?;
        let value = match key.as_str() {
            "phi" => ParamValue::Matrix(parse_matrix(ts, &xyz)?),
            "g" => ParamValue::Poly(parse_expr(ts, &xyz)?),
            "n" if ts.is_ident("inf") => {
                ts.next();
                ParamValue::Infinity
            }
            _ => ParamValue::Int(ts.expect_u32()?),
        };
        params.push((key, value));
    }
    let has = |k: &str| params.iter().any(|(key, _)| key == k);
    if has("phi") != has("g") {
        return Err(ParseError::at(ts.peek(), "'phi' and 'g' must be given together"));
    }
    Ok(Stmt::Command(Command::Reproduce { name, params }))
}

fn parse_poly_list(ts: &mut TokenStream, ring: &RingRef) -> Result<Vec<Polynomial>, ParseError> {
    ts.expect_sym('(')?;
    let mut out = Vec::new();
    if ts.eat_sym(')') {
        return Ok(out);
    }
    loop {
        out.push(parse_expr(ts, ring)?);
        if !ts.eat_sym(',') {
            break;
        }
    }
    ts.expect_sym(')')?;
    Ok(out)
}

fn parse_matrix(ts: &mut TokenStream, ring: &RingRef) -> Result<Vec<Vec<Polynomial>>, ParseError> {
    ts.expect_sym('[')?;
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    loop {
        let row_tok = ts.expect_sym('[')?;
        let mut row = Vec::new();
        loop {
            row.push(parse_expr(ts, ring)?);
            if !ts.eat_sym(',') {
                break;
            }
        }
        ts.expect_sym(']')?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError::at(
                    &row_tok,
                    format!("matrix row {} has {} entries, expected {}", rows.len() + 1, row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
        if !ts.eat_sym(',') {
            break;
        }
    }
    ts.expect_sym(']')?;
    Ok(rows)
}

pub fn render_polys(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.render()).collect::<Vec<_>>().join(", ")
}

pub fn render_matrix(rows: &[Vec<Polynomial>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", render_polys(r))).collect();
    format!("[{}]", rows.join(", "))
}

fn render_spec(s: &SpecRef) -> &str {
    match s {
        SpecRef::Trivial => "trivial",
        SpecRef::Module(m) => m,
    }
}

impl Command {
    pub fn render(&self) -> String {
        match self {
            Command::Closure { ideal, spec } => format!("closure {ideal} under {}", render_spec(spec)),
            Command::Rational { ring, spec, sop } => {
                format!("check rational {ring} {} sop({})", render_spec(spec), render_polys(sop))
            }
            Command::Axioms { ring, spec, seed, samples } => {
                let mut s = format!("check axioms {ring} {}", render_spec(spec));
                if let Some(seed) = seed {
                    write!(s, " seed={seed}").unwrap();
                }
                if let Some(n) = samples {
                    write!(s, " samples={n}").unwrap();
                }
                s
            }
            Command::Colon { ring, spec, sop, k } => {
                format!("check colon {ring} {} sop({}) k={k}", render_spec(spec), render_polys(sop))
            }
            Command::StrongCca { ring, spec, sop, k, t, a } => {
                format!("check strong_cca {ring} {} sop({}) k={k} t={t} a={a}", render_spec(spec), render_polys(sop))
            }
            Command::StrongCcb { ring, spec, sop, k } => {
                format!("check strong_ccb {ring} {} sop({}) k={k}", render_spec(spec), render_polys(sop))
            }
            Command::Residuality { spec, ideal, sub } => {
                format!("check residuality {} {ideal} {sub}", render_spec(spec))
            }
            Command::PowerFamily { ring, spec, sop, tmax } => {
                let mut s = format!("check power_family {ring} {} sop({})", render_spec(spec), render_polys(sop));
                if let Some(t) = tmax {
                    write!(s, " tmax={t}").unwrap();
                }
                s
            }
            Command::TestIdeal { ring, spec, ideals } => {
                format!("test_ideal {ring} {} ({})", render_spec(spec), ideals.join(", "))
            }
            Command::Reproduce { name, params } => {
                let mut s = format!("reproduce {name}");
                for (k, v) in params {
                    let v = match v {
                        ParamValue::Int(n) => n.to_string(),
                        ParamValue::Infinity => "inf".into(),
                        ParamValue::Matrix(m) => render_matrix(m),
                        ParamValue::Poly(p) => p.render(),
                    };
                    write!(s, " {k}={v}").unwrap();
                }
                s
            }
        }
    }
}

impl Stmt {
    pub fn render(&self) -> String {
        match self {
            Stmt::Ring(r) => {
                let mut s = format!("ring {} = {}[{}]", r.name, r.field.render(), r.vars.join(","));
                if !r.relations.is_empty() {
                    write!(s, " / ({})", render_polys(&r.relations)).unwrap();
                }
                s
            }
            Stmt::Ideal { name, gens, .. } => format!("ideal {name} = ({})", render_polys(gens)),
            Stmt::Module { name, def: ModuleDef::Coker(m), .. } => {
                format!("module {name} = coker {}", render_matrix(m))
            }
            Stmt::Module { name, def: ModuleDef::Ideal(g), .. } => {
                format!("module {name} = ideal ({})", render_polys(g))
            }
            Stmt::Command(c) => c.render(),
        }
    }
}

impl Session {
    pub fn render(&self) -> String {
        self.stmts.iter().map(|s| format!("{};\n", s.render())).collect()
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.stmts.iter().filter_map(|s| match s {
            Stmt::Command(c) => Some(c),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Field {
        Field::Prime(32003)
    }

    #[test]
    fn parses_cyclic_module_instance() {
        let src =
            "ring R = F32003[x,y] / (x^2*y); ideal I = (x+y); module M1 = coker [[y]]; check rational R M1 sop(x+y);";
        let s = parse_session(src, &k()).unwrap();
        assert_eq!(s.stmts.len(), 4);
        match &s.stmts[3] {
            Stmt::Command(Command::Rational { ring, spec, sop }) => {
                assert_eq!(ring, "R");
                assert_eq!(spec, &SpecRef::Module("M1".into()));
                assert_eq!(sop[0].render(), "x + y");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_file_is_empty_session() {
        assert_eq!(parse_session("", &k()).unwrap(), Session::default());
        assert_eq!(parse_session("  # only a comment\n", &k()).unwrap(), Session::default());
    }

    #[test]
    fn syntax_error_points_at_the_operator() {
        let err = parse_session("ring R = k[x]; ideal I = (x+);", &k()).unwrap_err();
        assert_eq!((err.line, err.col), (1, 29));
        let err = parse_session("ideal I = (x+);", &k()).unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn field_errors() {
        let err = parse_session("ring R = F4[x];", &k()).unwrap_err();
        assert_eq!((err.line, err.col), (1, 10));
        assert!(err.message.contains("4"), "{}", err.message);
        assert!(parse_session("ring R = GF7[x];", &k()).unwrap_err().message.contains("unknown field"));
        assert!(parse_session("ring R = F4294967311[x];", &k()).is_err());
        assert!(parse_session("ring R = F7[x];", &k()).is_ok());
    }

    #[test]
    fn unequal_rows_rejected() {
        let err = parse_session("ring R = k[x,y];\nmodule M = coker [[x, y], [x]];", &k()).unwrap_err();
        assert_eq!((err.line, err.col), (2, 27));
    }

    #[test]
    fn undefined_and_mistyped_names() {
        let err = parse_session("ring R = k[x];\nclosure I under trivial;", &k()).unwrap_err();
        assert_eq!((err.line, err.col, err.message.as_str()), (2, 9, "undefined name 'I'"));
        let err = parse_session("ring R = k[x]; ideal I = (x); closure I under I;", &k()).unwrap_err();
        assert!(err.message.contains("expected a module"));
        let err = parse_session("ideal I = (x);", &k()).unwrap_err();
        assert!(err.message.contains("declare a ring"));
    }

    #[test]
    fn round_trip() {
        let src = "ring R = QQ[x,y] / (x^2*y);\nideal I = (1/2*x + y, 0);\nmodule B = ideal (x^2, y);\n\
                   check strong_cca R B sop(x+y) a=0 t=2 k=1;\nreproduce ade phi=[[x,y],[y,-x]] g=-x^2-y^2;\n\
                   reproduce y2 n=inf;";
        let s = parse_session(src, &k()).unwrap();
        let text = s.render();
        assert_eq!(parse_session(&text, &k()).unwrap(), s);
        assert!(text.contains("check strong_cca R B sop(x + y) k=1 t=2 a=0;"));
    }
}
